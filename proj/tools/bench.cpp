// Benchmark comparing the OpenMP kernels against their serial references:
//   - sparse-aware parallel convolution vs schoolbook product
//   - q-series counting tables vs direct lattice enumeration
//   - parallel vs serial counterexample range scans
// Results are wall-clock; every pair is checked for equal output first.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "triforms/forms.hpp"
#include "triforms/qseries.hpp"
#include "triforms/verify.hpp"

using namespace triforms;
using Clock = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& fn) {
    auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-44s %10.1f ms %10.1f ms  x%.2f  %s\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, equal ? "match" : "MISMATCH");
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-44s %13s %13s\n", "kernel", "serial", "parallel");

    {
        const int64_t n = 30000;
        PowerSeries x = mul(psi(n), substitute(psi(n), 3));
        PowerSeries y = mul(phi(n), substitute(phi(n), 3));
        PowerSeries serial_out = zero_series(0), parallel_out = zero_series(0);
        double ts = time_ms([&] { serial_out = mul_serial(x, y); });
        double tp = time_ms([&] { parallel_out = mul(x, y); });
        row("dense convolution (N=30000)", ts, tp, serial_out.coeff == parallel_out.coeff);
    }

    {
        const int64_t bound = 1200;
        const FormSpec spec{{sq_term(1), sq_term(1), sq_term(3)}};
        std::vector<int64_t> direct(bound + 1), table;
        double ts = time_ms([&] {
            for (int64_t n = 0; n <= bound; ++n) direct[n] = count_representations(spec, n);
        });
        double tp = time_ms([&] { table = count_table(spec, bound); });
        row("count table sq+sq+3*sq (n<=1200)", ts, tp, direct == table);
    }

    {
        const FormSpec spec{{tri_term(2), tri_term(5), hex_term(1)}};
        auto table = count_table(spec, 4000);
        auto probe = [&](int64_t n) -> std::optional<Counterexample> {
            if (count_representations(spec, n) == table[n]) return std::nullopt;
            return Counterexample{n, 0, 1, ""};
        };
        std::optional<Counterexample> a, b;
        double ts = time_ms([&] { a = least_counterexample(0, 4000, probe, false); });
        double tp = time_ms([&] { b = least_counterexample(0, 4000, probe, true); });
        row("range scan 2*tri+5*tri+hex (n<=4000)", ts, tp,
            a.has_value() == b.has_value());
    }

    return 0;
}
