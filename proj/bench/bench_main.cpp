// Timing comparison of the serial reference paths against the OpenMP
// kernels: bounds critical-value simulation, rejection-rate studies and the
// ARDL order grid search. Verifies on every run that both paths agree.

#include <chrono>
#include <cstdio>
#include <string>

#include "ardl/ardl_model.hpp"
#include "ardl/sim.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ardl;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <typename F>
double timed(const char* label, Execution exec, F&& f) {
    const auto t0 = Clock::now();
    f(exec);
    const double s = seconds_since(t0);
    std::printf("  %-10s %8.3f s\n", label, s);
    return s;
}

void report_speedup(double serial, double parallel) {
    std::printf("  speedup    %8.2fx\n\n", serial / parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both paths run serially\n\n");
#endif

    {
        std::printf("bounds critical-value simulation (k=3, T=500, 4000 reps)\n");
        std::map<double, BoundsPair> serial_out, parallel_out;
        const double s = timed("serial", Execution::Serial, [&](Execution e) {
            serial_out = simulate_pss_cv(3, BoundsCase::III, 500, 4000, 7, e);
        });
        const double p = timed("parallel", Execution::Parallel, [&](Execution e) {
            parallel_out = simulate_pss_cv(3, BoundsCase::III, 500, 4000, 7, e);
        });
        for (double level : {0.10, 0.05, 0.025, 0.01})
            if (serial_out.at(level).i0 != parallel_out.at(level).i0 ||
                serial_out.at(level).i1 != parallel_out.at(level).i1) {
                std::printf("MISMATCH at level %g\n", level);
                return 1;
            }
        report_speedup(s, p);
    }

    {
        std::printf("bounds rejection study (cointegrated DGP, T=300, 2000 reps)\n");
        DgpConfig dgp;
        dgp.kind = DgpConfig::Kind::CointegratedArdl;
        dgp.theta = {1.5, -0.5};
        dgp.adjustment = -0.2;
        dgp.T = 300;
        RejectionTable serial_out, parallel_out;
        const double s = timed("serial", Execution::Serial, [&](Execution e) {
            serial_out = power_study("bounds", dgp, 2000, 11, e);
        });
        const double p = timed("parallel", Execution::Parallel, [&](Execution e) {
            parallel_out = power_study("bounds", dgp, 2000, 11, e);
        });
        for (std::size_t i = 0; i < serial_out.rejection_by_level.size(); ++i)
            if (serial_out.rejection_by_level[i].second !=
                parallel_out.rejection_by_level[i].second) {
                std::printf("MISMATCH\n");
                return 1;
            }
        report_speedup(s, p);
    }

    {
        std::printf("ARDL order grid search (k=5, N=3, T=200: %d candidates)\n", 3 * 4 * 4 * 4 * 4 * 4);
        DgpConfig dgp;
        dgp.kind = DgpConfig::Kind::CointegratedArdl;
        dgp.theta = {1.0, 0.5, -0.5, 0.25, 2.0};
        dgp.adjustment = -0.3;
        dgp.T = 200;
        dgp.seed = 5;
        Dataset d = gen_dgp(dgp);
        ModelSpec spec;
        spec.dependent = "y";
        for (int j = 1; j <= 5; ++j) spec.regressors.push_back("x" + std::to_string(j));
        spec.max_lag = 3;
        ArdlOrder serial_order, parallel_order;
        const double s = timed("serial", Execution::Serial,
                               [&](Execution e) { serial_order = select_order(d, spec, e); });
        const double p = timed("parallel", Execution::Parallel,
                               [&](Execution e) { parallel_order = select_order(d, spec, e); });
        if (serial_order.p != parallel_order.p || serial_order.q != parallel_order.q) {
            std::printf("MISMATCH: serial %s vs parallel %s\n", serial_order.to_string().c_str(),
                        parallel_order.to_string().c_str());
            return 1;
        }
        std::printf("  selected   ARDL%s\n", serial_order.to_string().c_str());
        report_speedup(s, p);
    }

    std::printf("all serial/parallel outputs identical\n");
    return 0;
}
