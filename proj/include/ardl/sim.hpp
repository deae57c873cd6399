#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ardl/bounds.hpp"
#include "ardl/execution.hpp"
#include "ardl/series.hpp"

namespace ardl {

/// Synthetic data-generating processes with known cointegration properties.
struct DgpConfig {
    enum class Kind {
        IndependentRandomWalks,  // n_series driftless random walks
        CointegratedArdl,        // y error-corrects toward theta'x, x random walks
        StableArx,               // one stationary AR(p) series
    };
    Kind kind = Kind::IndependentRandomWalks;
    int n_series = 2;               // IndependentRandomWalks
    std::vector<double> theta;      // CointegratedArdl long-run vector; k = theta.size()
    double adjustment = -0.2;       // CointegratedArdl, strictly in (-1, 0)
    double noise_sd = 1.0;
    std::vector<double> ar_coeffs;    // StableArx autoregressive part
    std::vector<double> exog_coeffs;  // StableArx: one i.i.d. N(0,1) regressor per entry
    double intercept = 0.0;           // StableArx
    int T = 200;
    int burn_in = 200;
    std::uint64_t seed = 0;

    void validate() const;  // throws InvalidConfig
};

/// Deterministic synthetic dataset: (seed, config) fixes every bit.
/// Series are named y, x1..xk (CointegratedArdl) or v1..vn (random walks).
Dataset gen_dgp(const DgpConfig& cfg);

struct RejectionTable {
    std::string test;
    std::vector<std::pair<double, double>> rejection_by_level;  // (level, frequency)
    int replications = 0;
    int failures = 0;  // replications that raised an error, excluded from counts
    std::uint64_t seed = 0;
    std::string rng;
};

/// Simulated PSS bounds: the upper bound from all-I(1) regressors, the lower
/// from all-I(0) (white noise) regressors; each is the empirical (1 - level)
/// type-7 quantile of the bounds F statistic over `reps` replications.
/// Parallel execution gives bit-identical results to serial.
std::map<double, BoundsPair> simulate_pss_cv(int k, BoundsCase which_case, int T, int reps,
                                             std::uint64_t seed,
                                             Execution exec = Execution::Parallel);

/// Size/power study: run a named test ("bounds", "adf", "bg", "bp", "arch",
/// "jb", "reset") on `reps` independent datasets from `dgp` and tabulate
/// rejection frequencies at the 10/5/1% levels.
RejectionTable power_study(const std::string& test, const DgpConfig& dgp, int reps,
                           std::uint64_t seed, Execution exec = Execution::Parallel);

/// Type-7 (linear interpolation) empirical quantile; sorts a copy.
double quantile_type7(std::vector<double> values, double q);

/// Generic deterministic replication loop used by the study drivers: calls
/// body(i, out[i]) for i in 0..reps-1, optionally in parallel.
void for_each_replication(int reps, Execution exec,
                          const std::function<void(int)>& body);

}  // namespace ardl
