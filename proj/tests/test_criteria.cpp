#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "triforms/arith.hpp"
#include "triforms/criteria.hpp"
#include "triforms/forms.hpp"

using namespace triforms;

TEST_CASE("excluded class membership") {
    using EC = ExcludedClass;
    CHECK(excluded_class(6, EC::NinePow9l6));
    CHECK(excluded_class(54, EC::NinePow9l6));
    CHECK_FALSE(excluded_class(5, EC::TwentyFivePow5lpm2));
    CHECK(excluded_class(2, EC::TwentyFivePow5lpm2));
    CHECK(excluded_class(50, EC::TwentyFivePow5lpm2));  // 25 * 2
    CHECK(excluded_class(5, EC::FourPow8l5));
    CHECK(excluded_class(20, EC::FourPow8l5));
    CHECK_FALSE(excluded_class(10, EC::FourPow8l5));
    CHECK(excluded_class(2, EC::FourL2));
    CHECK(excluded_class(7, EC::FourL3));
    CHECK(excluded_class(13, EC::EightL5));
    CHECK(excluded_class(24, EC::SixteenL8));
    CHECK(excluded_class(28, EC::SixteenL12));
    CHECK(excluded_class(8, EC::ThreeL2));
    CHECK(excluded_class(12, EC::NineL3));
    CHECK_FALSE(excluded_class(0, EC::NinePow9l6));
    CHECK_FALSE(excluded_class(0, EC::FourPow8l5));
}

TEST_CASE("power patterns decide via the stripped cofactor") {
    // direct definition: exists k,l >= 0 with n = base^k (progression member)
    using EC = ExcludedClass;
    for (int64_t n = 1; n <= 3000; ++n) {
        bool direct = false;
        for (int64_t p = 1; p <= n; p *= 9)
            if (n % p == 0 && (n / p) % 9 == 6) direct = true;
        CHECK(excluded_class(n, EC::NinePow9l6) == direct);
    }
    for (int64_t n = 1; n <= 3000; ++n) {
        bool direct = false;
        for (int64_t p = 1; p <= n; p *= 4)
            if (n % p == 0 && (n / p) % 8 == 5) direct = true;
        CHECK(excluded_class(n, ExcludedClass::FourPow8l5) == direct);
    }
    for (int64_t n = 1; n <= 3000; ++n) {
        bool direct = false;
        for (int64_t p = 1; p <= n; p *= 25) {
            int64_t m = n / p;
            if (n % p == 0 && (m % 5 == 2 || m % 5 == 3)) direct = true;
        }
        CHECK(excluded_class(n, ExcludedClass::TwentyFivePow5lpm2) == direct);
    }
}

TEST_CASE("criterion examples") {
    CHECK_FALSE(criterion_holds(CriterionId::Thm33T113, 8));
    CHECK_FALSE(criterion_holds(CriterionId::Thm33T113, 77));
    CHECK(criterion_holds(CriterionId::Thm33T113, 5));
    CHECK(criterion_holds(CriterionId::PropB1_3, 4));
    CHECK_FALSE(criterion_holds(CriterionId::PropB1_3, 7));
    CHECK(criterion_holds(CriterionId::Dickson1133, 123456));
}

TEST_CASE("classification ids are rejected by pointwise operations") {
    CHECK_THROWS_AS(criterion_holds(CriterionId::LiouvilleTriple, 3), std::invalid_argument);
    CHECK_THROWS_AS(criterion_holds(CriterionId::Quadruple113d, 3), std::invalid_argument);
    CHECK_THROWS_AS(subject_form(CriterionId::LiouvilleTriple), std::invalid_argument);
    CHECK(criterion_kind(CriterionId::Thm33T113) == CriterionKind::Pointwise);
    CHECK(criterion_kind(CriterionId::Quadruple113d) == CriterionKind::Classification);
}

TEST_CASE("subject forms") {
    CHECK(subject_form(CriterionId::Thm33T113) ==
          FormSpec{{tri_term(1), tri_term(1), tri_term(3)}});
    CHECK(subject_form(CriterionId::PropA1_4) == FormSpec{{sq_term(1), hex_term(4)}});
    CHECK(subject_form(CriterionId::Lem_1_40_120) ==
          FormSpec{{sq_term(1), sq_term(40), sq_term(120)}});
    CHECK(pointwise_criteria().size() == 15);
}

TEST_CASE("criterion names round-trip") {
    for (CriterionId id : pointwise_criteria()) CHECK(parse_criterion(criterion_name(id)) == id);
    CHECK(parse_criterion("thm1.1") == CriterionId::LiouvilleTriple);
    CHECK_FALSE(parse_criterion("nope").has_value());
}

TEST_CASE("every pointwise criterion matches enumeration up to 1500") {
    // the exhaustive 10^4 run lives in the acceptance suite
    for (CriterionId id : pointwise_criteria()) {
        FormSpec spec = subject_form(id);
        for (int64_t n = 0; n <= 1500; ++n) {
            bool predicted = criterion_holds(id, n);
            bool actual = is_representable(spec, n);
            if (predicted != actual) {
                CAPTURE(criterion_name(id));
                CAPTURE(n);
                CHECK(predicted == actual);
                break;
            }
        }
    }
}

TEST_CASE("structural shape of the t(1,1,3) condition") {
    // when n == 5 mod 9 the stripped cofactor of 8n+5 is always 5 mod 8
    for (int64_t n = 5; n <= 5000; n += 9) {
        auto f = strip_power(8 * n + 5, 9);
        CHECK(f.exponent >= 1);
        CHECK(f.cofactor % 8 == 5);
    }
}
