#include "triforms/criteria.hpp"

#include <stdexcept>

#include "triforms/arith.hpp"

namespace triforms {

namespace {

// Progression members 9l+6, 8l+5, 5l+-2 are coprime to the stripped base,
// so testing the maximal-power cofactor is exact.
bool in_power_pattern(int64_t n, int64_t base, auto residue_test) {
    if (n <= 0) return false;
    return residue_test(strip_power(n, base).cofactor);
}

// Condition of the shape "n not in the excluded classes", shared by the
// Dickson-style lemmas and the x^2 + c(y^2+yz+z^2) statements.
bool none_excluded(int64_t n, std::initializer_list<ExcludedClass> patterns) {
    for (ExcludedClass p : patterns)
        if (excluded_class(n, p)) return false;
    return true;
}

// t_x + t_y + 3 t_z criterion: n not congruent to 5 or 8 mod 9, or
// n == 5 mod 9 with 8n+5 = 9^k (8N+5), k >= 1, N not congruent to 5,8 mod 9.
// The redundant mod-8 shape check stays as stated.
bool t113_criterion(int64_t n) {
    int64_t r = n % 9;
    if (r != 5 && r != 8) return true;
    if (r == 5) {
        auto f = strip_power(8 * n + 5, 9);
        if (f.exponent >= 1 && f.cofactor % 8 == 5) {
            int64_t stripped = (f.cofactor - 5) / 8;
            int64_t s = stripped % 9;
            return s != 5 && s != 8;
        }
    }
    return false;
}

// 2 t_x + (y^2+yz+z^2): N not congruent to 2,8 mod 9, or N == 2 mod 9 with
// 4N+1 = 9^k (4N'+1), k >= 1, N' not congruent to 2,8 mod 9.
bool b2_1_criterion(int64_t n) {
    int64_t r = n % 9;
    if (r != 2 && r != 8) return true;
    if (r == 2) {
        auto f = strip_power(4 * n + 1, 9);
        if (f.exponent >= 1 && f.cofactor % 4 == 1) {
            int64_t stripped = (f.cofactor - 1) / 4;
            int64_t s = stripped % 9;
            return s != 2 && s != 8;
        }
    }
    return false;
}

// t_x + 2 (y^2+yz+z^2): N not congruent to 1,4 mod 9, or N == 1 mod 9 with
// 8N+1 = 9^k (8N'+1), k >= 1, N' not congruent to 1,4 mod 9.
bool b1_2_criterion(int64_t n) {
    int64_t r = n % 9;
    if (r != 1 && r != 4) return true;
    if (r == 1) {
        auto f = strip_power(8 * n + 1, 9);
        if (f.exponent >= 1 && f.cofactor % 8 == 1) {
            int64_t stripped = (f.cofactor - 1) / 8;
            int64_t s = stripped % 9;
            return s != 1 && s != 4;
        }
    }
    return false;
}

// t_x + 5 (y^2+yz+z^2): 8N+1 avoids 9^k(9l+6) and 25^k(5l+-2).
bool b1_5_criterion(int64_t n) {
    int64_t v = 8 * n + 1;
    return !excluded_class(v, ExcludedClass::NinePow9l6) &&
           !excluded_class(v, ExcludedClass::TwentyFivePow5lpm2);
}

}  // namespace

bool excluded_class(int64_t n, ExcludedClass pattern) {
    if (n < 0) throw std::domain_error("excluded_class: n must be nonnegative");
    switch (pattern) {
        case ExcludedClass::NinePow9l6:
            return in_power_pattern(n, 9, [](int64_t m) { return m % 9 == 6; });
        case ExcludedClass::FourPow8l5:
            return in_power_pattern(n, 4, [](int64_t m) { return m % 8 == 5; });
        case ExcludedClass::TwentyFivePow5lpm2:
            return in_power_pattern(n, 25,
                                    [](int64_t m) { return m % 5 == 2 || m % 5 == 3; });
        case ExcludedClass::FourL2: return n % 4 == 2;
        case ExcludedClass::FourL3: return n % 4 == 3;
        case ExcludedClass::EightL5: return n % 8 == 5;
        case ExcludedClass::SixteenL8: return n % 16 == 8;
        case ExcludedClass::SixteenL12: return n % 16 == 12;
        case ExcludedClass::ThreeL2: return n % 3 == 2;
        case ExcludedClass::NineL3: return n % 9 == 3;
    }
    throw std::invalid_argument("unknown excluded class pattern");
}

std::string excluded_class_name(ExcludedClass pattern) {
    switch (pattern) {
        case ExcludedClass::NinePow9l6: return "9^k(9l+6)";
        case ExcludedClass::FourPow8l5: return "4^k(8l+5)";
        case ExcludedClass::TwentyFivePow5lpm2: return "25^k(5l+-2)";
        case ExcludedClass::FourL2: return "4l+2";
        case ExcludedClass::FourL3: return "4l+3";
        case ExcludedClass::EightL5: return "8l+5";
        case ExcludedClass::SixteenL8: return "16l+8";
        case ExcludedClass::SixteenL12: return "16l+12";
        case ExcludedClass::ThreeL2: return "3l+2";
        case ExcludedClass::NineL3: return "9l+3";
    }
    throw std::invalid_argument("unknown excluded class pattern");
}

CriterionKind criterion_kind(CriterionId id) {
    switch (id) {
        case CriterionId::LiouvilleTriple:
        case CriterionId::Quadruple113d: return CriterionKind::Classification;
        default: return CriterionKind::Pointwise;
    }
}

std::string criterion_name(CriterionId id) {
    switch (id) {
        case CriterionId::Thm33T113: return "thm3.3";
        case CriterionId::Dickson113: return "thm3.2.1";
        case CriterionId::Dickson1133: return "thm3.2.2";
        case CriterionId::Lem_1_4_12: return "lem1.4.12";
        case CriterionId::Lem_1_16_48: return "lem1.16.48";
        case CriterionId::Lem_1_24_72: return "lem1.24.72";
        case CriterionId::Lem_1_40_120: return "lem1.40.120";
        case CriterionId::PropA1_4: return "prop.a1.4";
        case CriterionId::PropB2_1: return "prop.b2.1";
        case CriterionId::PropA1_16: return "prop.a1.16";
        case CriterionId::PropB1_2: return "prop.b1.2";
        case CriterionId::PropA1_24: return "prop.a1.24";
        case CriterionId::PropB1_3: return "prop.b1.3";
        case CriterionId::PropA1_40: return "prop.a1.40";
        case CriterionId::PropB1_5: return "prop.b1.5";
        case CriterionId::LiouvilleTriple: return "thm1.1";
        case CriterionId::Quadruple113d: return "thm1.2";
    }
    throw std::invalid_argument("unknown criterion id");
}

std::optional<CriterionId> parse_criterion(std::string_view name) {
    static const CriterionId all[] = {
        CriterionId::Thm33T113,   CriterionId::Dickson113,  CriterionId::Dickson1133,
        CriterionId::Lem_1_4_12,  CriterionId::Lem_1_16_48, CriterionId::Lem_1_24_72,
        CriterionId::Lem_1_40_120, CriterionId::PropA1_4,   CriterionId::PropB2_1,
        CriterionId::PropA1_16,   CriterionId::PropB1_2,    CriterionId::PropA1_24,
        CriterionId::PropB1_3,    CriterionId::PropA1_40,   CriterionId::PropB1_5,
        CriterionId::LiouvilleTriple, CriterionId::Quadruple113d,
    };
    for (CriterionId id : all)
        if (criterion_name(id) == name) return id;
    return std::nullopt;
}

const std::vector<CriterionId>& pointwise_criteria() {
    static const std::vector<CriterionId> ids = {
        CriterionId::Dickson113,  CriterionId::Dickson1133, CriterionId::Thm33T113,
        CriterionId::Lem_1_4_12,  CriterionId::Lem_1_16_48, CriterionId::Lem_1_24_72,
        CriterionId::Lem_1_40_120, CriterionId::PropA1_4,   CriterionId::PropB2_1,
        CriterionId::PropA1_16,   CriterionId::PropB1_2,    CriterionId::PropA1_24,
        CriterionId::PropB1_3,    CriterionId::PropA1_40,   CriterionId::PropB1_5,
    };
    return ids;
}

bool criterion_holds(CriterionId id, int64_t n) {
    if (n < 0) throw std::domain_error("criterion_holds: n must be nonnegative");
    if (criterion_kind(id) != CriterionKind::Pointwise)
        throw std::invalid_argument("criterion " + criterion_name(id) +
                                    " is a classification, not a pointwise predicate");
    using EC = ExcludedClass;
    switch (id) {
        case CriterionId::Thm33T113: return t113_criterion(n);
        case CriterionId::Dickson113: return none_excluded(n, {EC::NinePow9l6});
        case CriterionId::Dickson1133: return true;
        case CriterionId::Lem_1_4_12:
        case CriterionId::PropA1_4:
            return none_excluded(n, {EC::FourL2, EC::FourL3, EC::NinePow9l6});
        case CriterionId::Lem_1_16_48:
        case CriterionId::PropA1_16:
            return none_excluded(n, {EC::FourL2, EC::FourL3, EC::EightL5, EC::SixteenL8,
                                     EC::SixteenL12, EC::NinePow9l6});
        case CriterionId::Lem_1_24_72:
        case CriterionId::PropA1_24:
            return none_excluded(n, {EC::ThreeL2, EC::FourL2, EC::FourL3, EC::NineL3,
                                     EC::FourPow8l5});
        case CriterionId::Lem_1_40_120:
        case CriterionId::PropA1_40:
            return none_excluded(n, {EC::FourL2, EC::FourL3, EC::NinePow9l6,
                                     EC::TwentyFivePow5lpm2, EC::FourPow8l5});
        case CriterionId::PropB2_1: return b2_1_criterion(n);
        case CriterionId::PropB1_2: return b1_2_criterion(n);
        case CriterionId::PropB1_3: {
            int64_t r = n % 9;
            return r != 2 && r != 5 && r != 7 && r != 8;
        }
        case CriterionId::PropB1_5: return b1_5_criterion(n);
        default: break;
    }
    throw std::invalid_argument("unknown criterion id");
}

FormSpec subject_form(CriterionId id) {
    if (criterion_kind(id) != CriterionKind::Pointwise)
        throw std::invalid_argument("criterion " + criterion_name(id) +
                                    " is a classification and has no single subject form");
    switch (id) {
        case CriterionId::Thm33T113: return {{tri_term(1), tri_term(1), tri_term(3)}};
        case CriterionId::Dickson113: return {{sq_term(1), sq_term(1), sq_term(3)}};
        case CriterionId::Dickson1133:
            return {{sq_term(1), sq_term(1), sq_term(3), sq_term(3)}};
        case CriterionId::Lem_1_4_12: return {{sq_term(1), sq_term(4), sq_term(12)}};
        case CriterionId::Lem_1_16_48: return {{sq_term(1), sq_term(16), sq_term(48)}};
        case CriterionId::Lem_1_24_72: return {{sq_term(1), sq_term(24), sq_term(72)}};
        case CriterionId::Lem_1_40_120: return {{sq_term(1), sq_term(40), sq_term(120)}};
        case CriterionId::PropA1_4: return {{sq_term(1), hex_term(4)}};
        case CriterionId::PropB2_1: return {{tri_term(2), hex_term(1)}};
        case CriterionId::PropA1_16: return {{sq_term(1), hex_term(16)}};
        case CriterionId::PropB1_2: return {{tri_term(1), hex_term(2)}};
        case CriterionId::PropA1_24: return {{sq_term(1), hex_term(24)}};
        case CriterionId::PropB1_3: return {{tri_term(1), hex_term(3)}};
        case CriterionId::PropA1_40: return {{sq_term(1), hex_term(40)}};
        case CriterionId::PropB1_5: return {{tri_term(1), hex_term(5)}};
        default: break;
    }
    throw std::invalid_argument("unknown criterion id");
}

}  // namespace triforms
