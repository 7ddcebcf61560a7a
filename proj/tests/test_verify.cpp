#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "triforms/verify.hpp"

using namespace triforms;

TEST_CASE("count_table agrees with direct enumeration on the corpus prefix") {
    for (const NamedForm& f : reference_forms()) {
        auto tbl = count_table(f.spec, 120);
        for (int64_t n = 0; n <= 120; ++n) {
            if (tbl[n] != count_representations(f.spec, n)) {
                CAPTURE(f.name);
                CAPTURE(n);
                CHECK(tbl[n] == count_representations(f.spec, n));
                return;
            }
        }
    }
}

TEST_CASE("reference corpus is large enough and well formed") {
    CHECK(reference_forms().size() >= 25);
    for (const NamedForm& f : reference_forms()) {
        CHECK(f.name == form_to_text(f.spec));
        CHECK(parse_form_text(f.name) == f.spec);
    }
}

TEST_CASE("least_counterexample: parallel scan equals serial scan") {
    auto probe = [](int64_t n) -> std::optional<Counterexample> {
        if (n % 7 == 3 && n > 50) return Counterexample{n, 0, 1, ""};
        return std::nullopt;
    };
    auto par = least_counterexample(0, 5000, probe, true);
    auto ser = least_counterexample(0, 5000, probe, false);
    REQUIRE(par.has_value());
    REQUIRE(ser.has_value());
    CHECK(par->n == ser->n);
    CHECK(par->n == 52);
    CHECK_FALSE(least_counterexample(0, 40, probe, true).has_value());
}

TEST_CASE("relation 3.1 holds and its mutation fails at n=0") {
    auto good = check_relation_3_1(64);
    CHECK(good.pass);
    auto bad = check_relation_3_1(0, 8);
    REQUIRE_FALSE(bad.pass);
    REQUIRE(bad.counterexample.has_value());
    CHECK(bad.counterexample->n == 0);
    CHECK(bad.counterexample->expected == 8);
    CHECK(bad.counterexample->actual == 16);
}

TEST_CASE("two-adic scaling of t(1,1,3,3)") {
    auto rep = check_two_adic_property(3, 100);
    CHECK(rep.pass);
    rep = check_two_adic_property(1, 500);
    CHECK(rep.pass);
}

TEST_CASE("piecewise counting formula and corollaries") {
    CHECK(check_bch_formula(300).pass);
    CHECK(check_corollary_improvement(300).pass);
    CHECK(check_corollary_recurrence(3, 60).pass);
}

TEST_CASE("criterion checks pass on a short range") {
    CHECK(check_criterion(CriterionId::Thm33T113, 300).pass);
    CHECK(check_criterion(CriterionId::Lem_1_4_12, 300).pass);
    CHECK(check_criterion(CriterionId::PropB1_5, 300).pass);
}

TEST_CASE("universality checks") {
    FormSpec d6{{tri_term(1), tri_term(1), tri_term(3), tri_term(6)}};
    CHECK(check_universality(d6, 2000).pass);

    FormSpec t113{{tri_term(1), tri_term(1), tri_term(3)}};
    auto rep = check_universality(t113, 100);
    REQUIRE_FALSE(rep.pass);
    REQUIRE(rep.counterexample.has_value());
    CHECK(rep.counterexample->n == 8);
}

TEST_CASE("least_gap spots the first hole") {
    FormSpec t116d{{tri_term(1), tri_term(1), tri_term(6), tri_term(6)}};
    CHECK(least_gap(t116d, 500) == 5);
    FormSpec d3{{tri_term(1), tri_term(1), tri_term(3), tri_term(3)}};
    CHECK_FALSE(least_gap(d3, 500).has_value());
    // gap beyond the 128 prefix stage: multiples of 1 up to 128 all hit,
    // single triangular term misses 2
    CHECK(least_gap(FormSpec{{tri_term(1)}}, 500) == 2);
}

TEST_CASE("oracle equivalence on a couple of subjects") {
    CHECK(check_oracle_equivalence(FormSpec{{sq_term(1), hex_term(4)}}, 250).pass);
    CHECK(check_oracle_equivalence(FormSpec{{tri_term(2), tri_term(5), hex_term(1)}}, 250).pass);
}

TEST_CASE("hexagonal closed form vs sieve") { CHECK(check_hexagonal_formula(2000).pass); }

TEST_CASE("explicit witnesses evaluate to their targets") {
    CHECK(verify_paper_witnesses().pass);
}

TEST_CASE("triple classification reproduces the seven families") {
    auto rep = classify_triples(5, 800);
    CHECK(rep.agreement);
    CHECK(rep.found.size() == 7);
    CHECK(rep.pass());
    // monotone: a larger bound can only shrink the found set
    auto rep2 = classify_triples(5, 2000);
    CHECK(rep2.found.size() <= rep.found.size());
}

TEST_CASE("quadruple classification on a small grid") {
    auto rep = classify_quadruples(8, 800);
    CHECK(rep.agreement);
    CHECK(rep.found.size() == 48);
    for (const auto& [tuple, gap] : rep.rejected) {
        CHECK(gap <= 8);  // rejected tuples all miss one of 1,2,4,5,8
    }
    // (1,1,6,d) is rejected with witness 5
    for (const auto& [tuple, gap] : rep.rejected)
        if (tuple == std::vector<int64_t>{1, 1, 6, 6}) CHECK(gap == 5);
    // (1,1,3,9) is rejected
    auto rep9 = classify_quadruples(9, 800);
    bool found_1139 = false;
    for (const auto& [tuple, gap] : rep9.rejected)
        if (tuple == std::vector<int64_t>{1, 1, 3, 9}) {
            found_1139 = true;
            CHECK(gap == 8);
        }
    CHECK(found_1139);
}

TEST_CASE("g^a_c classification: only (1,1), finite test agrees") {
    auto rep = classify_gac(6, 800);
    CHECK(rep.agreement);
    REQUIRE(rep.found.size() == 1);
    CHECK(rep.found[0] == std::vector<int64_t>{1, 1});
    REQUIRE(rep.finite_test.has_value());
    CHECK(rep.finite_test->values == std::vector<int64_t>{1, 2, 4, 8});
    CHECK(rep.finite_test->agrees);
    CHECK(rep.pass());
}

TEST_CASE("g^{a,b}_c classification table, finite test agrees") {
    auto rep = classify_gabc(6, 800);
    CHECK(rep.agreement);
    REQUIRE(rep.finite_test.has_value());
    CHECK(rep.finite_test->values == std::vector<int64_t>{1, 2, 4, 5, 8});
    CHECK(rep.finite_test->agrees);
    // (1,1,c) with c >= 6 fails exactly at 5
    for (const auto& [tuple, gap] : rep.rejected)
        if (tuple == std::vector<int64_t>{1, 1, 6}) CHECK(gap == 5);
    // (1,b,1) universal for all b on the grid
    for (int64_t b = 1; b <= 6; ++b) {
        bool present = std::find(rep.found.begin(), rep.found.end(),
                                 std::vector<int64_t>{1, b, 1}) != rep.found.end();
        CHECK(present);
    }
}

TEST_CASE("gabc classification stays exact on tiny grids") {
    // the expected set must be restricted to tuples inside the grid
    for (int64_t cap = 1; cap <= 5; ++cap) {
        auto rep = classify_gabc(cap, 400);
        CAPTURE(cap);
        CHECK(rep.agreement);
        CHECK(rep.finite_test->agrees);
    }
    auto rep = classify_gabc(2, 400);
    CHECK(rep.found == std::vector<std::vector<int64_t>>{
                           {1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 2}, {2, 2, 1}});
}

TEST_CASE("reports carry counterexamples only on failure") {
    auto pass = check_relation_3_1(16);
    CHECK(pass.pass);
    CHECK_FALSE(pass.counterexample.has_value());
    auto fail = check_universality(FormSpec{{tri_term(1), tri_term(1), tri_term(3)}}, 50);
    CHECK_FALSE(fail.pass);
    CHECK(fail.counterexample.has_value());
}
