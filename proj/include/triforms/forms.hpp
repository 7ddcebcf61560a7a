#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace triforms {

// A term of a mixed form. Square variables range over Z, Triangular over
// N0, and a Hexagonal term carries the pair (y,z) in Z^2 contributing
// coeff * (y^2 + y z + z^2).
enum class TermKind { Square, Triangular, Hexagonal };

struct Term {
    int64_t coeff;  // >= 1
    TermKind kind;
};

inline Term sq_term(int64_t c) { return {c, TermKind::Square}; }
inline Term tri_term(int64_t c) { return {c, TermKind::Triangular}; }
inline Term hex_term(int64_t c) { return {c, TermKind::Hexagonal}; }

// An ordered sum of terms, e.g. t_x + t_y + 3 t_z or x^2 + 4(y^2+yz+z^2).
// The variable slots are ordered by term; a Hexagonal term owns two
// consecutive slots.
struct FormSpec {
    std::vector<Term> terms;

    int variable_count() const;
};

bool operator==(const FormSpec& a, const FormSpec& b);

// Throws std::invalid_argument if the spec is empty or has a coefficient < 1.
void validate_spec(const FormSpec& spec);

// One integer per variable slot; Triangular slots must be nonnegative.
struct Witness {
    std::vector<int64_t> values;
};

// Value of the form at the witness (checked arithmetic).
int64_t evaluate(const FormSpec& spec, const Witness& w);

// Exact number of witnesses of n. Signs and order count separately.
int64_t count_representations(const FormSpec& spec, int64_t n);

// count_representations(spec, n) > 0, with early exit at the first witness.
bool is_representable(const FormSpec& spec, int64_t n);

// Lexicographically least witness of n under the declared slot order,
// or nullopt if none exists.
std::optional<Witness> find_witness(const FormSpec& spec, int64_t n);

// Textual grammar: terms joined by '+', term := [coeff '*'] ('sq'|'tri'|'hex').
// Example: "tri+tri+3*tri+6*tri".
struct FormParseError {
    std::string message;
    std::size_t column;  // 0-based position in the input text
};

// Throws FormParseError on malformed text.
FormSpec parse_form_text(const std::string& text);

// Canonical text; parse_form_text(form_to_text(s)) == s.
std::string form_to_text(const FormSpec& spec);

}  // namespace triforms
