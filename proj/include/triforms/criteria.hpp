#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "triforms/forms.hpp"

namespace triforms {

// Excluded arithmetic classes used by the representability criteria.
// Power patterns mean n = base^k * (progression member) for some k,l >= 0.
enum class ExcludedClass {
    NinePow9l6,         // 9^k (9l+6)
    FourPow8l5,         // 4^k (8l+5)
    TwentyFivePow5lpm2, // 25^k (5l +- 2)
    FourL2,             // 4l+2
    FourL3,             // 4l+3
    EightL5,            // 8l+5
    SixteenL8,          // 16l+8
    SixteenL12,         // 16l+12
    ThreeL2,            // 3l+2
    NineL3,             // 9l+3
};

bool excluded_class(int64_t n, ExcludedClass pattern);
std::string excluded_class_name(ExcludedClass pattern);

// Every named representability statement, keyed to its claim number.
// Pointwise ids decide a single n; classification ids describe a search
// over coefficient tuples and are rejected by the pointwise operations.
enum class CriterionId {
    Thm33T113,       // t_x + t_y + 3 t_z
    Dickson113,      // x^2 + y^2 + 3 z^2
    Dickson1133,     // x^2 + y^2 + 3 z^2 + 3 w^2 (universal)
    Lem_1_4_12,      // x^2 + 4 y^2 + 12 z^2
    Lem_1_16_48,     // x^2 + 16 y^2 + 48 z^2
    Lem_1_24_72,     // x^2 + 24 y^2 + 72 z^2
    Lem_1_40_120,    // x^2 + 40 y^2 + 120 z^2
    PropA1_4,        // x^2 + 4 (y^2+yz+z^2)
    PropB2_1,        // 2 t_x + (y^2+yz+z^2)
    PropA1_16,       // x^2 + 16 (y^2+yz+z^2)
    PropB1_2,        // t_x + 2 (y^2+yz+z^2)
    PropA1_24,       // x^2 + 24 (y^2+yz+z^2)
    PropB1_3,        // t_x + 3 (y^2+yz+z^2)
    PropA1_40,       // x^2 + 40 (y^2+yz+z^2)
    PropB1_5,        // t_x + 5 (y^2+yz+z^2)
    LiouvilleTriple, // classification: a t_x + b t_y + c t_z universal triples
    Quadruple113d,   // classification: a t_x + b t_y + c t_z + d t_w universal quadruples
};

enum class CriterionKind { Pointwise, Classification };

CriterionKind criterion_kind(CriterionId id);
std::string criterion_name(CriterionId id);
std::optional<CriterionId> parse_criterion(std::string_view name);

// The 15 pointwise ids in declaration order.
const std::vector<CriterionId>& pointwise_criteria();

// The stated necessary-and-sufficient condition, evaluated on n.
// Throws std::invalid_argument for classification ids.
bool criterion_holds(CriterionId id, int64_t n);

// The form whose representability the criterion characterizes.
// Throws std::invalid_argument for classification ids.
FormSpec subject_form(CriterionId id);

}  // namespace triforms
