#include "triforms/qseries.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>

#include "triforms/arith.hpp"

namespace triforms {

namespace {

// Desk-scale ceiling; one table at this degree is 160 MB of coefficients.
constexpr int64_t kMaxDegree = 20'000'000;

void require_degree(int64_t degree) {
    if (degree < 0) throw std::invalid_argument("truncation degree must be >= 0");
    if (degree > kMaxDegree)
        throw std::invalid_argument("truncation degree exceeds the supported maximum (2e7)");
}

void require_same_degree(const PowerSeries& s, const PowerSeries& t) {
    if (s.degree() != t.degree())
        throw std::invalid_argument("mismatched truncation degrees");
}

std::size_t nonzero_count(const PowerSeries& s) {
    std::size_t n = 0;
    for (int64_t c : s.coeff) n += (c != 0);
    return n;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

int64_t PowerSeries::at(int64_t n) const {
    if (n < 0 || n > degree()) throw std::out_of_range("coefficient index out of range");
    return coeff[static_cast<std::size_t>(n)];
}

PowerSeries zero_series(int64_t degree) {
    require_degree(degree);
    return PowerSeries{std::vector<int64_t>(static_cast<std::size_t>(degree) + 1, 0)};
}

PowerSeries phi(int64_t degree) {
    PowerSeries s = zero_series(degree);
    s.coeff[0] = 1;
    for (int64_t k = 1; k * k <= degree; ++k) s.coeff[k * k] = 2;
    return s;
}

PowerSeries psi(int64_t degree) {
    PowerSeries s = zero_series(degree);
    for (int64_t k = 0;; ++k) {
        int64_t t = triangular(k);
        if (t > degree) break;
        s.coeff[t] = 1;
    }
    return s;
}

PowerSeries a_series(int64_t degree) {
    PowerSeries s = zero_series(degree);
    s.coeff[0] = 1;
#pragma omp parallel for schedule(dynamic, 64)
    for (int64_t n = 1; n <= degree; ++n) s.coeff[n] = hexagonal_count(n);
    return s;
}

PowerSeries add(const PowerSeries& s, const PowerSeries& t) {
    require_same_degree(s, t);
    PowerSeries out = zero_series(s.degree());
    for (std::size_t i = 0; i < out.coeff.size(); ++i)
        out.coeff[i] = checked_add(s.coeff[i], t.coeff[i]);
    return out;
}

PowerSeries sub(const PowerSeries& s, const PowerSeries& t) {
    require_same_degree(s, t);
    PowerSeries out = zero_series(s.degree());
    for (std::size_t i = 0; i < out.coeff.size(); ++i)
        out.coeff[i] = checked_add(s.coeff[i], checked_mul(-1, t.coeff[i]));
    return out;
}

PowerSeries scale(const PowerSeries& s, int64_t k) {
    PowerSeries out = zero_series(s.degree());
    for (std::size_t i = 0; i < out.coeff.size(); ++i)
        out.coeff[i] = checked_mul(s.coeff[i], k);
    return out;
}

PowerSeries shift(const PowerSeries& s, int64_t j) {
    if (j < 0) throw std::invalid_argument("shift amount must be >= 0");
    PowerSeries out = zero_series(s.degree());
    for (int64_t i = 0; i + j <= s.degree(); ++i)
        out.coeff[static_cast<std::size_t>(i + j)] = s.coeff[static_cast<std::size_t>(i)];
    return out;
}

PowerSeries substitute(const PowerSeries& s, int64_t m) {
    if (m < 1) throw std::invalid_argument("substitution exponent must be >= 1");
    PowerSeries out = zero_series(s.degree());
    for (int64_t k = 0; k * m <= s.degree(); ++k)
        out.coeff[static_cast<std::size_t>(k * m)] = s.coeff[static_cast<std::size_t>(k)];
    return out;
}

PowerSeries mul(const PowerSeries& s, const PowerSeries& t) {
    require_same_degree(s, t);
    const PowerSeries& sparse = nonzero_count(s) <= nonzero_count(t) ? s : t;
    const PowerSeries& dense = (&sparse == &s) ? t : s;

    std::vector<int64_t> support;
    for (int64_t i = 0; i <= sparse.degree(); ++i)
        if (sparse.coeff[static_cast<std::size_t>(i)] != 0) support.push_back(i);

    const int64_t degree = s.degree();
    PowerSeries out = zero_series(degree);
    std::atomic<bool> overflow{false};
#pragma omp parallel for schedule(static, 64)
    for (int64_t n = 0; n <= degree; ++n) {
        int64_t acc = 0;
        for (int64_t i : support) {
            if (i > n) break;
            int64_t p;
            if (__builtin_mul_overflow(sparse.coeff[static_cast<std::size_t>(i)],
                                       dense.coeff[static_cast<std::size_t>(n - i)], &p) ||
                __builtin_add_overflow(acc, p, &acc)) {
                overflow.store(true, std::memory_order_relaxed);
                break;
            }
        }
        out.coeff[static_cast<std::size_t>(n)] = acc;
    }
    if (overflow.load()) throw std::overflow_error("power series product overflow");
    return out;
}

PowerSeries mul_serial(const PowerSeries& s, const PowerSeries& t) {
    require_same_degree(s, t);
    const int64_t degree = s.degree();
    PowerSeries out = zero_series(degree);
    for (int64_t i = 0; i <= degree; ++i) {
        int64_t a = s.coeff[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        for (int64_t j = 0; i + j <= degree; ++j) {
            int64_t b = t.coeff[static_cast<std::size_t>(j)];
            if (b == 0) continue;
            auto& slot = out.coeff[static_cast<std::size_t>(i + j)];
            slot = checked_add(slot, checked_mul(a, b));
        }
    }
    return out;
}

namespace {

PowerSeries term_series(const Term& t, int64_t degree) {
    PowerSeries s = zero_series(degree);
    switch (t.kind) {
        case TermKind::Square:
            s.coeff[0] = 1;
            for (int64_t k = 1; t.coeff * k * k <= degree; ++k)
                s.coeff[static_cast<std::size_t>(t.coeff * k * k)] = 2;
            break;
        case TermKind::Triangular:
            for (int64_t k = 0;; ++k) {
                int64_t v = t.coeff * triangular(k);
                if (v > degree) break;
                s.coeff[static_cast<std::size_t>(v)] = 1;
            }
            break;
        case TermKind::Hexagonal:
            s.coeff[0] = 1;
            for (int64_t n = 1; t.coeff * n <= degree; ++n)
                s.coeff[static_cast<std::size_t>(t.coeff * n)] = hexagonal_count(n);
            break;
    }
    return s;
}

}  // namespace

PowerSeries series_for(const FormSpec& spec, int64_t degree) {
    validate_spec(spec);
    require_degree(degree);
    std::vector<PowerSeries> factors;
    factors.reserve(spec.terms.size());
    for (const Term& t : spec.terms) factors.push_back(term_series(t, degree));
    // fold sparsest-first so the cheap operand drives each convolution
    std::sort(factors.begin(), factors.end(), [](const PowerSeries& x, const PowerSeries& y) {
        return nonzero_count(x) < nonzero_count(y);
    });
    PowerSeries acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = mul(acc, factors[i]);
    return acc;
}

const std::vector<IdentityId>& identity_corpus() {
    static const std::vector<IdentityId> ids = {IdentityId::A, IdentityId::B, IdentityId::C,
                                                IdentityId::D, IdentityId::E, IdentityId::F};
    return ids;
}

std::string identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::A: return "a";
        case IdentityId::B: return "b";
        case IdentityId::C: return "c";
        case IdentityId::D: return "d";
        case IdentityId::E: return "e";
        case IdentityId::F: return "f";
    }
    throw std::invalid_argument("unknown identity id");
}

std::string identity_statement(IdentityId id) {
    switch (id) {
        case IdentityId::A: return "phi(q) = phi(q^4) + 2q psi(q^8)";
        case IdentityId::B: return "phi(q)^2 = phi(q^2)^2 + 4q psi(q^4)^2";
        case IdentityId::C: return "phi(q) psi(q^2) = psi(q)^2";
        case IdentityId::D: return "phi(q) phi(q^3) = a(q^4) + 2q psi(q^2) psi(q^6)";
        case IdentityId::E: return "a(q) = phi(q) phi(q^3) + 4q psi(q^2) psi(q^6)";
        case IdentityId::F: return "a(q) = a(q^4) + 6q psi(q^2) psi(q^6)";
    }
    throw std::invalid_argument("unknown identity id");
}

std::optional<IdentityId> parse_identity(std::string_view name) {
    if (name.size() != 1) return std::nullopt;
    switch (name[0]) {
        case 'a': return IdentityId::A;
        case 'b': return IdentityId::B;
        case 'c': return IdentityId::C;
        case 'd': return IdentityId::D;
        case 'e': return IdentityId::E;
        case 'f': return IdentityId::F;
        default: return std::nullopt;
    }
}

PowerSeries identity_lhs(IdentityId id, int64_t degree) {
    switch (id) {
        case IdentityId::A: return phi(degree);
        case IdentityId::B: return mul(phi(degree), phi(degree));
        case IdentityId::C: return mul(phi(degree), substitute(psi(degree), 2));
        case IdentityId::D: return mul(phi(degree), substitute(phi(degree), 3));
        case IdentityId::E:
        case IdentityId::F: return a_series(degree);
    }
    throw std::invalid_argument("unknown identity id");
}

PowerSeries identity_rhs(IdentityId id, int64_t degree) {
    switch (id) {
        case IdentityId::A:
            return add(substitute(phi(degree), 4),
                       scale(shift(substitute(psi(degree), 8), 1), 2));
        case IdentityId::B: {
            PowerSeries even = mul(substitute(phi(degree), 2), substitute(phi(degree), 2));
            PowerSeries odd = mul(substitute(psi(degree), 4), substitute(psi(degree), 4));
            return add(even, scale(shift(odd, 1), 4));
        }
        case IdentityId::C: return mul(psi(degree), psi(degree));
        case IdentityId::D: {
            PowerSeries odd = mul(substitute(psi(degree), 2), substitute(psi(degree), 6));
            return add(substitute(a_series(degree), 4), scale(shift(odd, 1), 2));
        }
        case IdentityId::E: {
            PowerSeries odd = mul(substitute(psi(degree), 2), substitute(psi(degree), 6));
            return add(mul(phi(degree), substitute(phi(degree), 3)), scale(shift(odd, 1), 4));
        }
        case IdentityId::F: {
            PowerSeries odd = mul(substitute(psi(degree), 2), substitute(psi(degree), 6));
            return add(substitute(a_series(degree), 4), scale(shift(odd, 1), 6));
        }
    }
    throw std::invalid_argument("unknown identity id");
}

VerificationReport verify_identity(IdentityId id, int64_t degree) {
    require_degree(degree);
    auto t0 = std::chrono::steady_clock::now();
    PowerSeries lhs = identity_lhs(id, degree);
    PowerSeries rhs = identity_rhs(id, degree);
    std::string subject = "identity " + identity_name(id) + ": " + identity_statement(id);
    for (int64_t n = 0; n <= degree; ++n) {
        if (lhs.coeff[static_cast<std::size_t>(n)] != rhs.coeff[static_cast<std::size_t>(n)]) {
            return make_fail(subject, 0, degree,
                             {n, lhs.coeff[static_cast<std::size_t>(n)],
                              rhs.coeff[static_cast<std::size_t>(n)], ""},
                             ms_since(t0));
        }
    }
    return make_pass(subject, 0, degree, ms_since(t0));
}

}  // namespace triforms
