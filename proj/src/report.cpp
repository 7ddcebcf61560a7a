#include "triforms/report.hpp"

#include <utility>

namespace triforms {

VerificationReport make_pass(std::string subject, int64_t lo, int64_t hi, double elapsed_ms) {
    VerificationReport r;
    r.subject = std::move(subject);
    r.lo = lo;
    r.hi = hi;
    r.pass = true;
    r.elapsed_ms = elapsed_ms;
    return r;
}

VerificationReport make_fail(std::string subject, int64_t lo, int64_t hi, Counterexample cex,
                             double elapsed_ms) {
    VerificationReport r;
    r.subject = std::move(subject);
    r.lo = lo;
    r.hi = hi;
    r.pass = false;
    r.counterexample = std::move(cex);
    r.elapsed_ms = elapsed_ms;
    return r;
}

}  // namespace triforms
