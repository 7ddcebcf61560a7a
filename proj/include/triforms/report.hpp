#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace triforms {

struct Counterexample {
    int64_t n = 0;
    int64_t expected = 0;
    int64_t actual = 0;
    std::string witness;  // textual witness when one is relevant, else empty
};

// Outcome of one range check. fail => counterexample holds the least
// offending n in range; pass => no counterexample.
struct VerificationReport {
    std::string subject;
    int64_t lo = 0;
    int64_t hi = 0;
    bool pass = false;
    std::optional<Counterexample> counterexample;
    double elapsed_ms = 0.0;
};

VerificationReport make_pass(std::string subject, int64_t lo, int64_t hi, double elapsed_ms);
VerificationReport make_fail(std::string subject, int64_t lo, int64_t hi, Counterexample cex,
                             double elapsed_ms);

}  // namespace triforms
