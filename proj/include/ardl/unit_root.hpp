#pragma once

#include <map>
#include <optional>
#include <string>

#include "ardl/series.hpp"

namespace ardl {

enum class Deterministic { None, Constant, ConstantTrend };

enum class Criterion { Aic, Bic };

/// Lag-order rule for the augmented Dickey-Fuller regression.
struct LagSelection {
    enum class Mode { Fixed, Aic, Bic };
    Mode mode = Mode::Aic;
    int fixed = 0;

    static LagSelection fixed_order(int p) { return {Mode::Fixed, p}; }
    static LagSelection aic() { return {Mode::Aic, 0}; }
    static LagSelection bic() { return {Mode::Bic, 0}; }
};

struct AdfResult {
    double statistic = 0.0;  // t ratio on the lagged level
    int lags_used = 0;
    Deterministic deterministic = Deterministic::Constant;
    std::map<double, double> critical_values;  // level (0.01/0.05/0.10) -> CV
    long nobs = 0;                             // effective regression sample

    /// Left-tailed decision: reject the unit root when the statistic is
    /// below the critical value for `level`.
    [[nodiscard]] bool reject_unit_root(double level) const;
};

enum class IntegrationClass { I0, I1, I2plus };

struct IntegrationOrder {
    IntegrationClass order = IntegrationClass::I0;
    AdfResult level_result;
    std::optional<AdfResult> diff_result;
};

/// Schwert's rule of thumb, floor(12 (T/100)^(1/4)).
int schwert_max_lag(std::size_t length);

/// Augmented Dickey-Fuller test. Candidate lag orders 0..max_lag are
/// compared on the common sample implied by max_lag; the winner is refit on
/// the longest sample its own order allows. Critical values come from the
/// MacKinnon (2010) response surface at the effective sample size.
/// max_lag < 0 selects the Schwert default.
AdfResult adf_test(const Series& s, Deterministic deterministic = Deterministic::Constant,
                   int max_lag = -1, LagSelection selection = LagSelection::aic());

/// Classify a series as I(0), I(1) or I(2+) from ADF tests on the level and,
/// when the level fails to reject, on the first difference.
IntegrationOrder classify_integration(const Series& s,
                                      Deterministic deterministic = Deterministic::Constant,
                                      double level = 0.05, int max_lag = -1,
                                      LagSelection selection = LagSelection::aic());

/// MacKinnon (2010) response-surface critical value for the ADF t statistic.
double mackinnon_critical_value(Deterministic deterministic, double level, long nobs);

}  // namespace ardl
