#include "ardl/forecast.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace ardl {

namespace {

std::vector<std::string> exogenous_names(const ArdlFit& f) {
    std::vector<std::string> names = f.spec.regressors;
    for (const auto& fx : f.spec.fixed_regressors) names.push_back(fx.name);
    return names;
}

double companion_spectral_radius(const ArdlFit& f) {
    const int p = f.order.p;
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(p, p);
    for (int i = 0; i < p; ++i)
        companion(0, i) = f.fit.coefficients[f.idx_dep_lags[static_cast<std::size_t>(i)]];
    for (int i = 1; i < p; ++i) companion(i, i - 1) = 1.0;
    return companion.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

ExogScenario ExogScenario::hold_last(const ArdlFit& f, int horizon) {
    ExogScenario s;
    s.provenance = "hold-last: every exogenous variable held at its final observed value";
    for (const auto& name : exogenous_names(f)) {
        const auto& v = f.data.at(name).values;
        s.futures[name] = std::vector<double>(static_cast<std::size_t>(horizon), v.back());
    }
    return s;
}

ExogScenario ExogScenario::drift(const ArdlFit& f, int horizon,
                                 const std::map<std::string, double>& monthly_growth) {
    ExogScenario s;
    s.provenance = "drift: per-variable constant monthly growth from the final observed value";
    for (const auto& name : exogenous_names(f)) {
        const auto& v = f.data.at(name).values;
        const auto it = monthly_growth.find(name);
        const double g = it == monthly_growth.end() ? 0.0 : it->second;
        std::vector<double> path(static_cast<std::size_t>(horizon));
        double level = v.back();
        for (int h = 0; h < horizon; ++h) {
            level += g;
            path[static_cast<std::size_t>(h)] = level;
        }
        s.futures[name] = std::move(path);
    }
    return s;
}

void ExogScenario::apply_dummy_rule(const ArdlFit& f, const std::string& name,
                                    const DummyRule& rule, int horizon) {
    const TimePoint first_future = f.data.start().plus_months(static_cast<int>(f.data.length()));
    Series dummy = make_dummy(name, first_future, static_cast<std::size_t>(horizon), rule);
    futures[name] = dummy.values;
}

Forecast dynamic_forecast(const ArdlFit& f, const ExogScenario& scenario, int horizon) {
    if (horizon < 1) throw InvalidConfig("forecast horizon must be at least 1");
    for (const auto& name : exogenous_names(f)) {
        auto it = scenario.futures.find(name);
        if (it == scenario.futures.end())
            throw IncompleteScenario("no future path for '" + name + "'");
        if (static_cast<int>(it->second.size()) < horizon)
            throw IncompleteScenario("'" + name + "' covers " +
                                     std::to_string(it->second.size()) + " of " +
                                     std::to_string(horizon) + " months");
    }

    const int T = static_cast<int>(f.data.length());
    const auto& dep_hist = f.data.at(f.spec.dependent).values;

    // value of a variable at absolute time index t (0-based), future beyond T-1
    auto exog_at = [&](const std::string& name, int t) {
        if (t < T) return f.data.at(name).values[static_cast<std::size_t>(t)];
        return scenario.futures.at(name)[static_cast<std::size_t>(t - T)];
    };

    Forecast out;
    out.horizon = horizon;
    out.scenario = scenario;
    out.origin = f.data.start().plus_months(T - 1);
    out.spectral_radius = companion_spectral_radius(f);
    out.stable = out.spectral_radius < 1.0;
    out.point.resize(static_cast<std::size_t>(horizon));

    std::vector<double> dep_path;  // predictions, index h-1 for month T-1+h
    auto dep_at = [&](int t) {
        if (t < T) return dep_hist[static_cast<std::size_t>(t)];
        return dep_path[static_cast<std::size_t>(t - T)];
    };

    const auto& beta = f.fit.coefficients;
    for (int h = 1; h <= horizon; ++h) {
        const int t = T - 1 + h;
        double value = 0.0;
        if (f.idx_intercept >= 0) value += beta[f.idx_intercept];
        if (f.idx_trend >= 0) value += beta[f.idx_trend] * static_cast<double>(t + 1);
        for (int i = 1; i <= f.order.p; ++i)
            value += beta[f.idx_dep_lags[static_cast<std::size_t>(i - 1)]] * dep_at(t - i);
        for (std::size_t j = 0; j < f.spec.regressors.size(); ++j)
            for (int l = 0; l <= f.order.q[j]; ++l)
                value += beta[f.idx_reg_lags[j][static_cast<std::size_t>(l)]] *
                         exog_at(f.spec.regressors[j], t - l);
        for (std::size_t j = 0; j < f.spec.fixed_regressors.size(); ++j)
            for (int l = 0; l <= f.spec.fixed_regressors[j].lags; ++l)
                value += beta[f.idx_fixed_lags[j][static_cast<std::size_t>(l)]] *
                         exog_at(f.spec.fixed_regressors[j].name, t - l);
        dep_path.push_back(value);
        out.point[static_cast<std::size_t>(h - 1)] = value;
    }
    return out;
}

double steady_state(const ArdlFit& f, const std::map<std::string, double>& exog_levels) {
    if (f.idx_trend >= 0) throw InvalidConfig("steady state undefined with a deterministic trend");
    const auto& beta = f.fit.coefficients;
    double ar_sum = 0.0;
    for (Eigen::Index idx : f.idx_dep_lags) ar_sum += beta[idx];
    if (std::fabs(1.0 - ar_sum) < 1e-12)
        throw InvalidConfig("unit autoregressive root; no steady state");
    double rhs = f.idx_intercept >= 0 ? beta[f.idx_intercept] : 0.0;
    auto level_of = [&](const std::string& name) {
        auto it = exog_levels.find(name);
        if (it == exog_levels.end()) throw IncompleteScenario("no steady level for '" + name + "'");
        return it->second;
    };
    for (std::size_t j = 0; j < f.spec.regressors.size(); ++j) {
        double coef_sum = 0.0;
        for (Eigen::Index idx : f.idx_reg_lags[j]) coef_sum += beta[idx];
        rhs += coef_sum * level_of(f.spec.regressors[j]);
    }
    for (std::size_t j = 0; j < f.spec.fixed_regressors.size(); ++j) {
        double coef_sum = 0.0;
        for (Eigen::Index idx : f.idx_fixed_lags[j]) coef_sum += beta[idx];
        rhs += coef_sum * level_of(f.spec.fixed_regressors[j].name);
    }
    return rhs / (1.0 - ar_sum);
}

}  // namespace ardl
