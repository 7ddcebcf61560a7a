// Acceptance suite: every release gate in one binary, one line per
// criterion. All checks are exact-integer comparisons (tolerance zero).
// Usage: acceptance <path-to-triforms-cli>

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "triforms/criteria.hpp"
#include "triforms/forms.hpp"
#include "triforms/qseries.hpp"
#include "triforms/verify.hpp"

using namespace triforms;

namespace {

struct Runner {
    int index = 0;
    int failed = 0;

    void criterion(const std::string& label, const std::function<bool(std::string&)>& body) {
        ++index;
        std::string detail;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
        std::printf("[%2d/10] %s  %s  (%.0f ms)\n", index, ok ? "PASS" : "FAIL", label.c_str(),
                    ms);
        if (!ok) {
            ++failed;
            if (!detail.empty()) std::printf("        %s\n", detail.c_str());
        }
        std::fflush(stdout);
    }
};

bool report_ok(const VerificationReport& r, std::string& detail) {
    if (r.pass) return true;
    std::ostringstream os;
    os << r.subject << ": counterexample n=" << r.counterexample->n
       << " expected=" << r.counterexample->expected << " actual=" << r.counterexample->actual;
    detail = os.str();
    return false;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<FormSpec> gabc_table_forms() {
    std::vector<FormSpec> specs;
    for (int64_t b = 1; b <= 10; ++b) specs.push_back({{tri_term(1), tri_term(b), hex_term(1)}});
    for (int64_t b = 2; b <= 8; ++b) specs.push_back({{tri_term(2), tri_term(b), hex_term(1)}});
    for (int64_t b = 1; b <= 4; ++b) specs.push_back({{tri_term(1), tri_term(b), hex_term(2)}});
    specs.push_back({{tri_term(1), tri_term(2), hex_term(3)}});
    for (int64_t b = 1; b <= 2; ++b) specs.push_back({{tri_term(1), tri_term(b), hex_term(4)}});
    specs.push_back({{tri_term(1), tri_term(1), hex_term(5)}});
    return specs;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    Runner run;

    run.criterion("theta identity suite coefficient-exact to N=2000", [](std::string& detail) {
        for (IdentityId id : identity_corpus())
            if (!report_ok(verify_identity(id, 2000), detail)) return false;
        return true;
    });

    run.criterion("oracle equivalence: enumeration = q-series, all corpus forms, n <= 2000",
                  [](std::string& detail) {
                      if (reference_forms().size() < 25) {
                          detail = "corpus smaller than 25 forms";
                          return false;
                      }
                      for (const NamedForm& f : reference_forms())
                          if (!report_ok(check_oracle_equivalence(f.spec, 2000), detail))
                              return false;
                      return true;
                  });

    run.criterion("r(1,1,3)(8n+5) = 16 t(1,1,3)(n) for n <= 2000", [](std::string& detail) {
        return report_ok(check_relation_3_1(2000), detail);
    });

    run.criterion("t(1,1,3,3)(2^k N + 2^k - 1) = 2^k t(1,1,3,3)(N), k <= 6, N <= 500",
                  [](std::string& detail) {
                      return report_ok(check_two_adic_property(6, 500), detail);
                  });

    run.criterion("piecewise r/t formulas (n <= 1000) and doubling recurrence (k <= 6, N <= 200)",
                  [](std::string& detail) {
                      return report_ok(check_bch_formula(1000), detail) &&
                             report_ok(check_corollary_improvement(1000), detail) &&
                             report_ok(check_corollary_recurrence(6, 200), detail);
                  });

    run.criterion("15 pointwise criteria = representability for n <= 10^4",
                  [](std::string& detail) {
                      if (pointwise_criteria().size() != 15) {
                          detail = "criterion registry does not have 15 pointwise entries";
                          return false;
                      }
                      for (CriterionId id : pointwise_criteria())
                          if (!report_ok(check_criterion(id, 10000), detail)) return false;
                      return true;
                  });

    run.criterion(
        "universality: t+t+3t+d*t to 10^5 (d=3..8); table families and both Sun forms to 10^4",
        [](std::string& detail) {
            for (int64_t d = 3; d <= 8; ++d) {
                FormSpec spec{{tri_term(1), tri_term(1), tri_term(3), tri_term(d)}};
                if (!report_ok(check_universality(spec, 100000), detail)) return false;
            }
            for (const FormSpec& spec : gabc_table_forms())
                if (!report_ok(check_universality(spec, 10000), detail)) return false;
            if (!report_ok(check_universality(FormSpec{{sq_term(1), sq_term(3), tri_term(1)}},
                                              10000),
                           detail))
                return false;
            return report_ok(
                check_universality(FormSpec{{sq_term(4), tri_term(2), tri_term(1)}}, 10000),
                detail);
        });

    run.criterion(
        "classification grids: 13 quadruple families (dcap=8), {(1,1)} for a*tri+c*hex, "
        "the a*tri+b*tri+c*hex table (cap=10), finite tests agree",
        [](std::string& detail) {
            auto quad = classify_quadruples(8, 10000);
            if (!quad.agreement || quad.found.size() != 48) {
                detail = "quadruple grid disagrees with the 13 expected families";
                return false;
            }
            auto gac = classify_gac(8, 10000);
            if (!gac.pass() || gac.found != std::vector<std::vector<int64_t>>{{1, 1}}) {
                detail = "a*tri+c*hex grid should accept exactly (1,1)";
                return false;
            }
            auto gabc = classify_gabc(10, 10000);
            if (!gabc.agreement) {
                detail = "a*tri+b*tri+c*hex grid disagrees with the expected table";
                return false;
            }
            if (!gac.finite_test->agrees || !gabc.finite_test->agrees) {
                detail = "finite test characterization disagrees with bounded universality";
                return false;
            }
            return true;
        });

    run.criterion("explicit witnesses for N = 8,17,26,35,44 under 2t+8t+hex",
                  [](std::string& detail) {
                      return report_ok(verify_paper_witnesses(), detail);
                  });

    run.criterion("CLI determinism: table all --bound 2000 --format json, 1 vs max threads",
                  [&cli](std::string& detail) {
                      if (cli.empty()) {
                          detail = "usage: acceptance <path-to-triforms-cli>";
                          return false;
                      }
                      const std::string f1 = "/tmp/triforms_acceptance_t1.json";
                      const std::string f2 = "/tmp/triforms_acceptance_tmax.json";
                      int max_threads = omp_get_max_threads();
                      std::string c1 = cli + " table all --bound 2000 --format json --threads 1 --out " + f1;
                      std::string c2 = cli + " table all --bound 2000 --format json --threads " +
                                       std::to_string(max_threads) + " --out " + f2;
                      if (std::system(c1.c_str()) != 0 || std::system(c2.c_str()) != 0) {
                          detail = "CLI invocation failed (a registered check did not pass)";
                          return false;
                      }
                      std::string a = read_file(f1), b = read_file(f2);
                      std::remove(f1.c_str());
                      std::remove(f2.c_str());
                      if (a.empty() || a != b) {
                          detail = "outputs are empty or differ between thread counts";
                          return false;
                      }
                      return true;
                  });

    std::printf("acceptance: %d/10 passed\n", 10 - run.failed);
    return run.failed == 0 ? 0 : 1;
}
