#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "triforms/forms.hpp"
#include "triforms/report.hpp"

namespace triforms {

// Formal power series over Z truncated at a fixed degree; coefficients
// occupy indices 0..degree and arithmetic never consults anything above.
// Binary operations require equal truncation degrees.
struct PowerSeries {
    std::vector<int64_t> coeff;

    int64_t degree() const { return static_cast<int64_t>(coeff.size()) - 1; }
    int64_t at(int64_t n) const;  // bounds-checked
};

PowerSeries zero_series(int64_t degree);

// Generating functions of squares, triangular numbers and the hexagonal
// form: phi has coefficient 2 at positive squares, psi the indicator of
// triangular numbers, a_series the pair count y^2+yz+z^2 = n.
PowerSeries phi(int64_t degree);
PowerSeries psi(int64_t degree);
PowerSeries a_series(int64_t degree);

PowerSeries add(const PowerSeries& s, const PowerSeries& t);
PowerSeries sub(const PowerSeries& s, const PowerSeries& t);
PowerSeries scale(const PowerSeries& s, int64_t k);
PowerSeries shift(const PowerSeries& s, int64_t j);       // multiply by q^j
PowerSeries substitute(const PowerSeries& s, int64_t m);  // q -> q^m

// Truncated product. mul is the sparse-aware OpenMP kernel; mul_serial is
// the plain schoolbook reference kept for testing and benchmarking.
PowerSeries mul(const PowerSeries& s, const PowerSeries& t);
PowerSeries mul_serial(const PowerSeries& s, const PowerSeries& t);

// Product of the generating functions of spec's terms; coefficient n
// equals count_representations(spec, n).
PowerSeries series_for(const FormSpec& spec, int64_t degree);

// The fixed theta identity corpus:
//   a: phi(q) = phi(q^4) + 2 q psi(q^8)
//   b: phi(q)^2 = phi(q^2)^2 + 4 q psi(q^4)^2
//   c: phi(q) psi(q^2) = psi(q)^2
//   d: phi(q) phi(q^3) = a(q^4) + 2 q psi(q^2) psi(q^6)
//   e: a(q) = phi(q) phi(q^3) + 4 q psi(q^2) psi(q^6)
//   f: a(q) = a(q^4) + 6 q psi(q^2) psi(q^6)
enum class IdentityId { A, B, C, D, E, F };

const std::vector<IdentityId>& identity_corpus();
std::string identity_name(IdentityId id);
std::string identity_statement(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

PowerSeries identity_lhs(IdentityId id, int64_t degree);
PowerSeries identity_rhs(IdentityId id, int64_t degree);

// Coefficient-exact comparison of both sides up to the truncation degree.
VerificationReport verify_identity(IdentityId id, int64_t degree);

}  // namespace triforms
