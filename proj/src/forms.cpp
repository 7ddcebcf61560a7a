#include "triforms/forms.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>

#include "triforms/arith.hpp"

namespace triforms {

namespace {

int64_t hex_value(int64_t y, int64_t z) { return y * y + y * z + z * z; }

// Number of assignments of a single term's variable(s) hitting rem exactly.
int64_t ways_single_term(const Term& t, int64_t rem) {
    if (rem < 0 || rem % t.coeff != 0) return 0;
    int64_t m = rem / t.coeff;
    switch (t.kind) {
        case TermKind::Square: {
            int64_t s = isqrt(m);
            if (s * s != m) return 0;
            return s == 0 ? 1 : 2;
        }
        case TermKind::Triangular:
            return is_triangular(m) ? 1 : 0;
        case TermKind::Hexagonal: {
            if (m == 0) return 1;
            // y fixed: z^2 + y z + (y^2 - m) = 0, discriminant 4m - 3y^2
            int64_t bound = isqrt(2 * m);
            int64_t ways = 0;
            for (int64_t y = -bound; y <= bound; ++y) {
                int64_t disc = 4 * m - 3 * y * y;
                if (disc < 0) continue;
                int64_t s = isqrt(disc);
                if (s * s != disc) continue;
                if (((s ^ y) & 1) != 0) continue;  // z = (-y +- s)/2 integral
                ways += (s == 0) ? 1 : 2;
            }
            return ways;
        }
    }
    return 0;
}

int64_t count_rec(std::span<const Term> rest, int64_t rem) {
    const Term& t = rest.front();
    if (rest.size() == 1) return ways_single_term(t, rem);
    auto tail = rest.subspan(1);
    int64_t total = 0;
    switch (t.kind) {
        case TermKind::Square: {
            int64_t bound = isqrt(rem / t.coeff);
            for (int64_t x = -bound; x <= bound; ++x)
                total += count_rec(tail, rem - t.coeff * x * x);
            break;
        }
        case TermKind::Triangular: {
            for (int64_t x = 0;; ++x) {
                int64_t v = t.coeff * triangular(x);
                if (v > rem) break;
                total += count_rec(tail, rem - v);
            }
            break;
        }
        case TermKind::Hexagonal: {
            // y^2 + yz + z^2 >= (y^2 + z^2)/2 bounds both slots
            int64_t bound = isqrt(2 * rem / t.coeff);
            for (int64_t y = -bound; y <= bound; ++y)
                for (int64_t z = -bound; z <= bound; ++z) {
                    int64_t v = t.coeff * hex_value(y, z);
                    if (v <= rem) total += count_rec(tail, rem - v);
                }
            break;
        }
    }
    return total;
}

bool repr_rec(std::span<const Term> rest, int64_t rem) {
    const Term& t = rest.front();
    if (rest.size() == 1) return ways_single_term(t, rem) > 0;
    auto tail = rest.subspan(1);
    switch (t.kind) {
        case TermKind::Square: {
            int64_t bound = isqrt(rem / t.coeff);
            for (int64_t x = 0; x <= bound; ++x)  // sign irrelevant for existence
                if (repr_rec(tail, rem - t.coeff * x * x)) return true;
            break;
        }
        case TermKind::Triangular: {
            for (int64_t x = 0;; ++x) {
                int64_t v = t.coeff * triangular(x);
                if (v > rem) break;
                if (repr_rec(tail, rem - v)) return true;
            }
            break;
        }
        case TermKind::Hexagonal: {
            int64_t bound = isqrt(2 * rem / t.coeff);
            for (int64_t y = 0; y <= bound; ++y)  // (y,z) and (-y,-z) match
                for (int64_t z = -bound; z <= bound; ++z) {
                    int64_t v = t.coeff * hex_value(y, z);
                    if (v <= rem && repr_rec(tail, rem - v)) return true;
                }
            break;
        }
    }
    return false;
}

// Counting order: large coefficients outermost (deepest pruning) and a
// Square/Triangular term last when there is one (O(1) residual check).
std::vector<Term> counting_order(const FormSpec& spec) {
    std::vector<Term> terms = spec.terms;
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& a, const Term& b) { return a.coeff > b.coeff; });
    if (terms.back().kind == TermKind::Hexagonal) {
        for (std::size_t i = terms.size(); i-- > 0;) {
            if (terms[i].kind != TermKind::Hexagonal) {
                std::swap(terms[i], terms.back());
                break;
            }
        }
    }
    return terms;
}

bool witness_rec(std::span<const Term> rest, int64_t rem, std::vector<int64_t>& acc) {
    if (rest.empty()) return rem == 0;
    const Term& t = rest.front();
    auto tail = rest.subspan(1);
    switch (t.kind) {
        case TermKind::Square: {
            int64_t bound = isqrt(rem / t.coeff);
            for (int64_t x = -bound; x <= bound; ++x) {
                acc.push_back(x);
                if (witness_rec(tail, rem - t.coeff * x * x, acc)) return true;
                acc.pop_back();
            }
            break;
        }
        case TermKind::Triangular: {
            for (int64_t x = 0;; ++x) {
                int64_t v = t.coeff * triangular(x);
                if (v > rem) break;
                acc.push_back(x);
                if (witness_rec(tail, rem - v, acc)) return true;
                acc.pop_back();
            }
            break;
        }
        case TermKind::Hexagonal: {
            int64_t bound = isqrt(2 * rem / t.coeff);
            for (int64_t y = -bound; y <= bound; ++y)
                for (int64_t z = -bound; z <= bound; ++z) {
                    int64_t v = t.coeff * hex_value(y, z);
                    if (v > rem) continue;
                    acc.push_back(y);
                    acc.push_back(z);
                    if (witness_rec(tail, rem - v, acc)) return true;
                    acc.pop_back();
                    acc.pop_back();
                }
            break;
        }
    }
    return false;
}

}  // namespace

int FormSpec::variable_count() const {
    int n = 0;
    for (const Term& t : terms) n += (t.kind == TermKind::Hexagonal) ? 2 : 1;
    return n;
}

bool operator==(const FormSpec& a, const FormSpec& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
        if (a.terms[i].coeff != b.terms[i].coeff || a.terms[i].kind != b.terms[i].kind)
            return false;
    return true;
}

void validate_spec(const FormSpec& spec) {
    if (spec.terms.empty()) throw std::invalid_argument("form has no terms");
    for (const Term& t : spec.terms)
        if (t.coeff < 1) throw std::invalid_argument("form coefficient must be >= 1");
}

int64_t evaluate(const FormSpec& spec, const Witness& w) {
    validate_spec(spec);
    if (static_cast<int>(w.values.size()) != spec.variable_count())
        throw std::invalid_argument("witness slot count does not match form");
    int64_t total = 0;
    std::size_t slot = 0;
    for (const Term& t : spec.terms) {
        switch (t.kind) {
            case TermKind::Square: {
                int64_t x = w.values[slot++];
                total = checked_add(total, checked_mul(t.coeff, checked_mul(x, x)));
                break;
            }
            case TermKind::Triangular: {
                int64_t x = w.values[slot++];
                if (x < 0)
                    throw std::invalid_argument("triangular slot must be nonnegative");
                total = checked_add(total, checked_mul(t.coeff, triangular(x)));
                break;
            }
            case TermKind::Hexagonal: {
                int64_t y = w.values[slot++];
                int64_t z = w.values[slot++];
                int64_t v = checked_add(checked_add(checked_mul(y, y), checked_mul(y, z)),
                                        checked_mul(z, z));
                total = checked_add(total, checked_mul(t.coeff, v));
                break;
            }
        }
    }
    return total;
}

int64_t count_representations(const FormSpec& spec, int64_t n) {
    validate_spec(spec);
    if (n < 0) throw std::domain_error("count_representations: n must be nonnegative");
    std::vector<Term> order = counting_order(spec);
    return count_rec(order, n);
}

bool is_representable(const FormSpec& spec, int64_t n) {
    validate_spec(spec);
    if (n < 0) throw std::domain_error("is_representable: n must be nonnegative");
    std::vector<Term> order = counting_order(spec);
    return repr_rec(order, n);
}

std::optional<Witness> find_witness(const FormSpec& spec, int64_t n) {
    validate_spec(spec);
    if (n < 0) throw std::domain_error("find_witness: n must be nonnegative");
    std::vector<int64_t> acc;
    acc.reserve(spec.variable_count());
    if (!witness_rec(spec.terms, n, acc)) return std::nullopt;
    return Witness{std::move(acc)};
}

FormSpec parse_form_text(const std::string& text) {
    FormSpec spec;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    while (true) {
        skip_ws();
        std::size_t term_start = i;
        int64_t coeff = 1;
        if (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            coeff = 0;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                coeff = coeff * 10 + (text[i] - '0');
                if (coeff > (int64_t{1} << 40))
                    throw FormParseError{"coefficient too large", term_start};
                ++i;
            }
            skip_ws();
            if (i >= text.size() || text[i] != '*')
                throw FormParseError{"expected '*' after coefficient", i};
            ++i;
            skip_ws();
        }
        if (coeff < 1) throw FormParseError{"coefficient must be >= 1", term_start};
        std::size_t kind_start = i;
        std::string word;
        while (i < text.size() && text[i] >= 'a' && text[i] <= 'z') word += text[i++];
        if (word == "sq")
            spec.terms.push_back(sq_term(coeff));
        else if (word == "tri")
            spec.terms.push_back(tri_term(coeff));
        else if (word == "hex")
            spec.terms.push_back(hex_term(coeff));
        else
            throw FormParseError{"expected term kind 'sq', 'tri' or 'hex'", kind_start};
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != '+') throw FormParseError{"expected '+' between terms", i};
        ++i;
    }
    validate_spec(spec);
    return spec;
}

std::string form_to_text(const FormSpec& spec) {
    std::string out;
    for (std::size_t i = 0; i < spec.terms.size(); ++i) {
        if (i) out += '+';
        const Term& t = spec.terms[i];
        if (t.coeff != 1) {
            out += std::to_string(t.coeff);
            out += '*';
        }
        switch (t.kind) {
            case TermKind::Square: out += "sq"; break;
            case TermKind::Triangular: out += "tri"; break;
            case TermKind::Hexagonal: out += "hex"; break;
        }
    }
    return out;
}

}  // namespace triforms
