#pragma once

#include <map>
#include <string>
#include <vector>

#include "ardl/ardl_model.hpp"

namespace ardl {

/// Future paths for every non-dependent variable of a fitted model. The
/// provenance string travels into reports so the assumption behind the
/// forecast is always visible.
struct ExogScenario {
    std::map<std::string, std::vector<double>> futures;  // name -> H values
    std::string provenance;

    /// Every variable held at its last observed value.
    static ExogScenario hold_last(const ArdlFit& f, int horizon);
    /// Per-variable constant monthly growth applied from the last value.
    /// Variables without an entry in `monthly_growth` are held.
    static ExogScenario drift(const ArdlFit& f, int horizon,
                              const std::map<std::string, double>& monthly_growth);

    /// Replace one variable's future with an indicator rule evaluated over
    /// the forecast months (regime dummies stay at their rule, event dummies
    /// recur in their configured months).
    void apply_dummy_rule(const ArdlFit& f, const std::string& name, const DummyRule& rule,
                          int horizon);
};

struct Forecast {
    int horizon = 0;
    std::vector<double> point;
    ExogScenario scenario;
    TimePoint origin;           // last in-sample month
    double spectral_radius = 0.0;  // companion matrix of the dependent's lags
    bool stable = false;           // spectral_radius < 1
};

/// Iterate the levels ARDL equation forward, feeding predictions back as
/// lagged dependent values; exogenous lags come from history first, then
/// from the scenario. Throws IncompleteScenario when a variable lacks
/// coverage for the horizon.
Forecast dynamic_forecast(const ArdlFit& f, const ExogScenario& scenario, int horizon);

/// Steady state implied by the fitted equation when every exogenous variable
/// is held at the given values; defined only for stable dynamics.
double steady_state(const ArdlFit& f, const std::map<std::string, double>& exog_levels);

}  // namespace ardl
