#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ardl/execution.hpp"
#include "ardl/ols.hpp"
#include "ardl/series.hpp"
#include "ardl/unit_root.hpp"

namespace ardl {

/// A regressor that always enters the model with a caller-chosen lag depth
/// and is excluded from the order grid search (indicator variables).
struct FixedRegressor {
    std::string name;
    int lags = 0;  // enters at lags 0..lags
};

struct ModelSpec {
    std::string dependent;
    std::vector<std::string> regressors;          // searched over lags 0..max_lag
    std::vector<FixedRegressor> fixed_regressors;
    int max_lag = 3;
    Criterion criterion = Criterion::Aic;
    bool intercept = true;
    bool trend = false;

    void validate(const Dataset& d) const;
};

struct ArdlOrder {
    int p = 1;             // dependent lags, >= 1
    std::vector<int> q;    // per-regressor distributed lags, >= 0

    [[nodiscard]] int total_lag_terms() const;
    [[nodiscard]] std::string to_string() const;  // "(p,q1,...,qk)"
};

/// Levels-form ARDL estimate. Keeps the aligned input series and the design
/// so the conditional-ECM refit, diagnostics and forecasting can reuse the
/// exact estimation sample.
struct ArdlFit {
    ModelSpec spec;
    ArdlOrder order;
    Dataset data;          // dependent + regressors + fixed, aligned
    int offset = 0;        // rows dropped at the start for lagging
    TimePoint sample_start;
    DesignMatrix X;
    Eigen::VectorXd y;
    OlsFit fit;

    // column bookkeeping
    Eigen::Index idx_intercept = -1;
    Eigen::Index idx_trend = -1;
    std::vector<Eigen::Index> idx_dep_lags;               // dep(-1..-p)
    std::vector<std::vector<Eigen::Index>> idx_reg_lags;  // per regressor, lags 0..q_j
    std::vector<std::vector<Eigen::Index>> idx_fixed_lags;
};

/// Conditional-ECM reparameterization of an ArdlFit: the dependent variable
/// is the first difference, regressors are one-period lagged levels plus
/// difference blocks. Fitted values and RSS match the levels fit up to
/// floating point.
struct CecmFit {
    ModelSpec spec;
    ArdlOrder order;
    Dataset data;
    int offset = 0;
    TimePoint sample_start;
    DesignMatrix X;
    Eigen::VectorXd y;  // first difference of the dependent
    OlsFit fit;

    Eigen::Index idx_intercept = -1;
    Eigen::Index idx_trend = -1;
    Eigen::Index idx_dep_level = -1;            // dependent lagged level
    std::vector<Eigen::Index> idx_reg_levels;   // per regressor: x(-1), or x when q_j = 0
    std::vector<Eigen::Index> idx_diff_terms;   // all difference-block columns
    std::vector<Eigen::Index> idx_fixed_terms;

    [[nodiscard]] double adjustment_coefficient() const { return fit.coefficients[idx_dep_level]; }
};

struct LongRunCoefficient {
    std::string name;
    double estimate = 0.0;
    double std_error = 0.0;
    double p_value = 1.0;
};

struct LongRunResult {
    std::vector<LongRunCoefficient> coefficients;  // one per regressor
    std::optional<LongRunCoefficient> intercept;   // -const/beta1 when present
    std::optional<LongRunCoefficient> trend;
    long dof = 0;
};

struct EcmTerm {
    std::string name;
    double coefficient = 0.0;
    double std_error = 0.0;
    double p_value = 1.0;
};

struct EcmResult {
    std::vector<EcmTerm> short_run;  // difference-block, deterministic and fixed terms
    double ect_coefficient = 0.0;
    double ect_std_error = 0.0;
    double ect_p_value = 1.0;
    double r_squared = 0.0;
    long dof = 0;
};

inline constexpr std::size_t kDefaultGridCap = 1000000;

/// Exhaustive criterion-minimizing search over p in 1..N, q_j in 0..N, all
/// candidates estimated on the common sample implied by N. Ties break to the
/// smallest total lag count, then the lexicographically smallest (p, q...).
/// The result is identical for serial and parallel execution.
ArdlOrder select_order(const Dataset& d, const ModelSpec& spec,
                       Execution exec = Execution::Parallel,
                       std::size_t grid_cap = kDefaultGridCap);

/// OLS of the levels ARDL at a given order, on the longest sample the order
/// allows.
ArdlFit fit_ardl(const Dataset& d, const ModelSpec& spec, const ArdlOrder& order);

/// Exact reparameterization of the levels fit in conditional-ECM form.
CecmFit to_cecm(const ArdlFit& f);

/// Long-run coefficients theta_j = -beta_j / beta_1 with delta-method
/// standard errors from the conditional-ECM coefficient covariance.
LongRunResult long_run(const CecmFit& c);

/// Restricted error-correction regression: the difference of the dependent
/// on the difference blocks and the lagged long-run residual. The error
/// correction coefficient reproduces the conditional-ECM adjustment
/// coefficient exactly.
EcmResult ecm_restricted(const CecmFit& c, const LongRunResult& lr);

/// Significance stars at the conventional 1/5/10% levels.
std::string significance_stars(double p_value);

}  // namespace ardl
