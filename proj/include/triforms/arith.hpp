#pragma once

#include <cstdint>

namespace triforms {

// All library arithmetic is checked 64-bit signed; overflow throws
// std::overflow_error instead of wrapping.
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

// floor(sqrt(n)), exact for every n >= 0.
int64_t isqrt(int64_t n);

bool is_square(int64_t n);

// True iff n = k(k+1)/2 for some k >= 0.
bool is_triangular(int64_t n);

// t_k = k(k+1)/2.
int64_t triangular(int64_t k);

// #{d | n : d > 0, d == j (mod k)}.
struct ResidueClassDivisorQuery {
    int64_t n;  // n >= 1
    int64_t j;  // 0 <= j < k
    int64_t k;  // modulus >= 1
};
int64_t divisor_count_mod(const ResidueClassDivisorQuery& q);

// n = base^exponent * cofactor with base not dividing cofactor.
struct StrippedFactorization {
    int64_t exponent;
    int64_t cofactor;
};
StrippedFactorization strip_power(int64_t n, int64_t base);

// #{(y,z) in Z^2 : y^2 + y z + z^2 = n}.
// Closed form 6 (d_{1,3}(n) - d_{2,3}(n)) for n >= 1; 1 at n = 0.
int64_t hexagonal_count(int64_t n);

}  // namespace triforms
