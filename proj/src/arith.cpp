#include "triforms/arith.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace triforms {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("64-bit addition overflow");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("64-bit multiplication overflow");
    return r;
}

int64_t isqrt(int64_t n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    if (n == 0) return 0;
    auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
    if (r > 3037000499) r = 3037000499;  // isqrt(INT64_MAX)
    while (r > 0 && r > n / r) --r;      // division avoids overflow in r*r
    while (r + 1 <= n / (r + 1)) ++r;
    return r;
}

bool is_square(int64_t n) {
    if (n < 0) return false;
    int64_t r = isqrt(n);
    return r * r == n;
}

bool is_triangular(int64_t n) {
    // n = k(k+1)/2  <=>  8n+1 is an odd perfect square
    if (n < 0) return false;
    return is_square(checked_add(checked_mul(8, n), 1));
}

int64_t triangular(int64_t k) {
    if (k < 0) throw std::domain_error("triangular index must be nonnegative");
    int64_t p = checked_mul(k, checked_add(k, 1));
    return p / 2;
}

int64_t divisor_count_mod(const ResidueClassDivisorQuery& q) {
    if (q.n < 1) throw std::invalid_argument("divisor query: n must be >= 1");
    if (q.k < 1) throw std::invalid_argument("divisor query: modulus must be >= 1");
    if (q.j < 0 || q.j >= q.k) throw std::invalid_argument("divisor query: residue out of range");
    int64_t count = 0;
    for (int64_t d = 1; d * d <= q.n; ++d) {
        if (q.n % d != 0) continue;
        if (d % q.k == q.j) ++count;
        int64_t e = q.n / d;
        if (e != d && e % q.k == q.j) ++count;
    }
    return count;
}

StrippedFactorization strip_power(int64_t n, int64_t base) {
    if (n < 1) throw std::invalid_argument("strip_power: n must be >= 1");
    if (base < 2) throw std::invalid_argument("strip_power: base must be >= 2");
    StrippedFactorization f{0, n};
    while (f.cofactor % base == 0) {
        f.cofactor /= base;
        ++f.exponent;
    }
    return f;
}

int64_t hexagonal_count(int64_t n) {
    if (n < 0) throw std::domain_error("hexagonal_count of negative value");
    if (n == 0) return 1;
    int64_t d1 = divisor_count_mod({n, 1, 3});
    int64_t d2 = divisor_count_mod({n, 2, 3});
    return 6 * (d1 - d2);
}

}  // namespace triforms
