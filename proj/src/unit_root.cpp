#include "ardl/unit_root.hpp"

#include <cmath>

#include "ardl/ols.hpp"

namespace ardl {

namespace {

// MacKinnon (2010), "Critical values for cointegration tests", Table of
// response-surface coefficients for the single-series Dickey-Fuller t
// statistic: cv(T) = b_inf + b1/T + b2/T^2 + b3/T^3.
struct ResponseSurface {
    double b_inf, b1, b2, b3;
};

ResponseSurface surface(Deterministic det, double level) {
    if (det == Deterministic::None) {
        if (level == 0.01) return {-2.56574, -2.2358, -3.627, 0.0};
        if (level == 0.05) return {-1.94100, -0.2686, -3.365, 31.223};
        if (level == 0.10) return {-1.61682, 0.2656, -2.714, 25.364};
    } else if (det == Deterministic::Constant) {
        if (level == 0.01) return {-3.43035, -6.5393, -16.786, -79.433};
        if (level == 0.05) return {-2.86154, -2.8903, -4.234, -40.040};
        if (level == 0.10) return {-2.56677, -1.5384, -2.809, 0.0};
    } else {
        if (level == 0.01) return {-3.95877, -9.0531, -28.428, -134.155};
        if (level == 0.05) return {-3.41049, -4.3904, -9.036, -45.374};
        if (level == 0.10) return {-3.12705, -2.5856, -3.925, -22.380};
    }
    throw InvalidConfig("unsupported ADF significance level");
}

struct AdfRegression {
    DesignMatrix X;
    Eigen::VectorXd y;
    Eigen::Index level_column = 0;
};

// Build the ADF regression for lag order p on rows t = first..T-1 of the
// level series (0-based): dy_t on [const] [trend] y_{t-1} dy_{t-1..t-p}.
AdfRegression build_adf(const std::vector<double>& y, int p, int first, Deterministic det) {
    const int T = static_cast<int>(y.size());
    const int n = T - first;
    AdfRegression reg;
    reg.y.resize(n);
    for (int t = first; t < T; ++t) reg.y[t - first] = y[t] - y[t - 1];

    Eigen::VectorXd col(n);
    if (det != Deterministic::None) reg.X.add_column("const", Eigen::VectorXd::Ones(n));
    if (det == Deterministic::ConstantTrend) {
        for (int t = first; t < T; ++t) col[t - first] = static_cast<double>(t + 1);
        reg.X.add_column("trend", col);
    }
    for (int t = first; t < T; ++t) col[t - first] = y[t - 1];
    reg.level_column = reg.X.cols();
    reg.X.add_column("level(-1)", col);
    for (int i = 1; i <= p; ++i) {
        for (int t = first; t < T; ++t) col[t - first] = y[t - i] - y[t - i - 1];
        reg.X.add_column("d(-" + std::to_string(i) + ")", col);
    }
    return reg;
}

}  // namespace

bool AdfResult::reject_unit_root(double level) const {
    auto it = critical_values.find(level);
    if (it == critical_values.end()) throw InvalidConfig("no critical value at requested level");
    return statistic < it->second;
}

int schwert_max_lag(std::size_t length) {
    return static_cast<int>(
        std::floor(12.0 * std::pow(static_cast<double>(length) / 100.0, 0.25)));
}

double mackinnon_critical_value(Deterministic det, double level, long nobs) {
    const ResponseSurface s = surface(det, level);
    const double T = static_cast<double>(nobs);
    return s.b_inf + s.b1 / T + s.b2 / (T * T) + s.b3 / (T * T * T);
}

AdfResult adf_test(const Series& s, Deterministic deterministic, int max_lag,
                   LagSelection selection) {
    const int T = static_cast<int>(s.length());
    if (max_lag < 0) max_lag = schwert_max_lag(s.length());

    double vmin = s.values[0], vmax = s.values[0];
    for (double v : s.values) {
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
    }
    if (vmax == vmin) throw ConstantSeries(s.name);

    const int det_cols = deterministic == Deterministic::None ? 0
                         : deterministic == Deterministic::Constant ? 1
                                                                    : 2;
    int p = selection.mode == LagSelection::Mode::Fixed ? selection.fixed : max_lag;
    if (p < 0) throw InvalidConfig("negative ADF lag order");
    const int worst_first = 1 + (selection.mode == LagSelection::Mode::Fixed ? p : max_lag);
    if (T - worst_first <= det_cols + 1 + (selection.mode == LagSelection::Mode::Fixed ? p : max_lag))
        throw SeriesTooShort("ADF with max lag " + std::to_string(max_lag) + " needs more than " +
                             std::to_string(worst_first + det_cols + 1 + max_lag) +
                             " observations, have " + std::to_string(T));

    if (selection.mode != LagSelection::Mode::Fixed) {
        // Compare candidates on the common sample implied by max_lag.
        const int first = 1 + max_lag;
        double best = 0.0;
        int best_p = 0;
        for (int cand = 0; cand <= max_lag; ++cand) {
            AdfRegression reg = build_adf(s.values, cand, first, deterministic);
            OlsFit fit = fit_ols(reg.X, reg.y);
            const double crit = selection.mode == LagSelection::Mode::Aic ? fit.aic : fit.bic;
            if (cand == 0 || crit < best) {
                best = crit;
                best_p = cand;
            }
        }
        p = best_p;
    }

    // Final regression on the longest sample the chosen order allows.
    AdfRegression reg = build_adf(s.values, p, 1 + p, deterministic);
    OlsFit fit = fit_ols(reg.X, reg.y);

    AdfResult out;
    out.statistic = fit.t_stat(reg.level_column);
    out.lags_used = p;
    out.deterministic = deterministic;
    out.nobs = static_cast<long>(reg.y.size());
    for (double level : {0.01, 0.05, 0.10})
        out.critical_values[level] = mackinnon_critical_value(deterministic, level, out.nobs);
    return out;
}

IntegrationOrder classify_integration(const Series& s, Deterministic deterministic, double level,
                                      int max_lag, LagSelection selection) {
    IntegrationOrder out;
    out.level_result = adf_test(s, deterministic, max_lag, selection);
    if (out.level_result.reject_unit_root(level)) {
        out.order = IntegrationClass::I0;
        return out;
    }
    Series diff{"D." + s.name, s.start.next(), {}};
    diff.values.reserve(s.length() - 1);
    for (std::size_t i = 1; i < s.length(); ++i)
        diff.values.push_back(s.values[i] - s.values[i - 1]);
    out.diff_result = adf_test(diff, deterministic, max_lag, selection);
    out.order = out.diff_result->reject_unit_root(level) ? IntegrationClass::I1
                                                         : IntegrationClass::I2plus;
    return out;
}

}  // namespace ardl
