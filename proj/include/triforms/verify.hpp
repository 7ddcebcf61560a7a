#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triforms/criteria.hpp"
#include "triforms/forms.hpp"
#include "triforms/qseries.hpp"
#include "triforms/report.hpp"

namespace triforms {

// Exact counts for n = 0..bound via the q-series convolution path.
std::vector<int64_t> count_table(const FormSpec& spec, int64_t bound);

// Least-n counterexample over [lo, hi]. The parallel scan partitions the
// range over threads and merges by least n, so the result is identical to
// the serial scan.
std::optional<Counterexample> least_counterexample(
    int64_t lo, int64_t hi, const std::function<std::optional<Counterexample>(int64_t)>& probe,
    bool parallel = true);

// r_{1,1,3}(8n+5) = factor * t_{1,1,3}(n) on 0..bound. The factor is 16;
// it is a parameter so mutation tests can break the relation on purpose.
VerificationReport check_relation_3_1(int64_t bound, int64_t factor = 16);

// t_{1,1,3,3}(2^k N + 2^k - 1) = 2^k t_{1,1,3,3}(N) for 1 <= k <= k_max,
// 0 <= N <= n_max.
VerificationReport check_two_adic_property(int64_t k_max, int64_t n_max);

// Piecewise divisor-free formula: 4 t_{1,1,3,3}(n) = r_{1,1,3,3}(n+1) for
// even n, 8 t_{1,1,3,3}(n) = r_{1,1,3,3}(2n+2) - r_{1,1,3,3}(n+1) for odd n.
VerificationReport check_bch_formula(int64_t bound);

// Sharpened odd case: with n+1 = 2^k (2N+1), 4 t_{1,1,3,3}(n) = 2^k r_{1,1,3,3}(2N+1).
VerificationReport check_corollary_improvement(int64_t bound);

// r_{1,1,3,3}(2^k(2N+1)) = r_{1,1,3,3}(2(2N+1)) + 4(2^{k-1}-1) r_{1,1,3,3}(2N+1).
VerificationReport check_corollary_recurrence(int64_t k_max, int64_t n_max);

// criterion_holds(id, n) == representability of subject_form(id) on 0..bound.
VerificationReport check_criterion(CriterionId id, int64_t bound);

// Every n in 0..bound is representable; reports the first gap otherwise.
VerificationReport check_universality(const FormSpec& spec, int64_t bound);

// Direct enumeration equals the q-series coefficients on 0..bound.
VerificationReport check_oracle_equivalence(const FormSpec& spec, int64_t bound);

// Divisor formula for the hexagonal pair count against a plain lattice sieve.
VerificationReport check_hexagonal_formula(int64_t bound);

// The five explicit witnesses for 2 t_x + 8 t_y + (z^2+zw+w^2) at
// N = 8, 17, 26, 35, 44.
VerificationReport verify_paper_witnesses();

// Least n in [0, bound] the form does not represent, or nullopt.
std::optional<int64_t> least_gap(const FormSpec& spec, int64_t bound);

struct FiniteTestSummary {
    std::vector<int64_t> values;  // e.g. {1,2,4,8}
    bool agrees = false;          // finite-test pass <=> universal to bound, all tuples
};

// Exhaustive coefficient search for universal forms of one family.
struct ClassificationReport {
    std::string family;
    int64_t cap = 0;    // coefficient grid bound
    int64_t bound = 0;  // universality is checked on 0..bound (bounded evidence)
    std::vector<std::vector<int64_t>> found;
    std::vector<std::vector<int64_t>> expected;
    bool agreement = false;
    // every rejected tuple with its least non-represented n
    std::vector<std::pair<std::vector<int64_t>, int64_t>> rejected;
    std::optional<FiniteTestSummary> finite_test;
    double elapsed_ms = 0.0;

    bool pass() const { return agreement && (!finite_test || finite_test->agrees); }
};

// a t_x + b t_y + c t_z, a <= b <= c <= cap.
ClassificationReport classify_triples(int64_t cap, int64_t bound);
// a t_x + b t_y + c t_z + d t_w, a <= b <= c <= d <= d_cap.
ClassificationReport classify_quadruples(int64_t d_cap, int64_t bound);
// a t_x + c (y^2+yz+z^2); finite test {1,2,4,8}.
ClassificationReport classify_gac(int64_t cap, int64_t bound);
// a t_x + b t_y + c (z^2+zw+w^2), a <= b; finite test {1,2,4,5,8}.
ClassificationReport classify_gabc(int64_t cap, int64_t bound);

// Every named form the verification suite touches (subjects of counting
// identities, criteria, universality statements and classifications).
struct NamedForm {
    std::string name;  // canonical form text
    FormSpec spec;
};
const std::vector<NamedForm>& reference_forms();

}  // namespace triforms
