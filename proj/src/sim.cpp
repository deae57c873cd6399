#include "ardl/sim.hpp"

#include <algorithm>
#include <cmath>

#include "ardl/ardl_model.hpp"
#include "ardl/checks.hpp"
#include "ardl/rng.hpp"
#include "ardl/unit_root.hpp"

namespace ardl {

namespace {

constexpr TimePoint kSimStart{2000, 1};

std::uint64_t stream_seed(std::uint64_t base, std::uint64_t tag, std::uint64_t rep) {
    return derive_seed(base ^ (tag * 0xD2B74407B1CE6E93ULL), rep);
}

}  // namespace

void DgpConfig::validate() const {
    if (T <= 0) throw InvalidConfig("T must be positive");
    if (burn_in < 0) throw InvalidConfig("burn_in must be non-negative");
    if (noise_sd < 0.0) throw InvalidConfig("noise_sd must be non-negative");
    switch (kind) {
        case Kind::IndependentRandomWalks:
            if (n_series < 1) throw InvalidConfig("need at least one series");
            break;
        case Kind::CointegratedArdl:
            if (theta.empty()) throw InvalidConfig("theta must have at least one entry");
            if (!(adjustment > -1.0 && adjustment < 0.0))
                throw InvalidConfig("adjustment must lie strictly in (-1, 0)");
            break;
        case Kind::StableArx: {
            double radius = 0.0;
            if (!ar_coeffs.empty()) {
                Eigen::MatrixXd companion =
                    Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(ar_coeffs.size()),
                                          static_cast<Eigen::Index>(ar_coeffs.size()));
                for (std::size_t i = 0; i < ar_coeffs.size(); ++i)
                    companion(0, static_cast<Eigen::Index>(i)) = ar_coeffs[i];
                for (std::size_t i = 1; i < ar_coeffs.size(); ++i)
                    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
                radius = companion.eigenvalues().cwiseAbs().maxCoeff();
            }
            if (radius >= 1.0) throw InvalidConfig("autoregression is not stable");
            break;
        }
    }
}

Dataset gen_dgp(const DgpConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    Dataset out;
    const int total = cfg.burn_in + cfg.T;

    switch (cfg.kind) {
        case DgpConfig::Kind::IndependentRandomWalks: {
            for (int j = 1; j <= cfg.n_series; ++j) {
                Series s{"v" + std::to_string(j), kSimStart, {}};
                s.values.reserve(static_cast<std::size_t>(cfg.T));
                double level = 0.0;
                for (int t = 0; t < total; ++t) {
                    level += rng.next_normal();
                    if (t >= cfg.burn_in) s.values.push_back(level);
                }
                out.add(std::move(s));
            }
            break;
        }
        case DgpConfig::Kind::CointegratedArdl: {
            // noise_sd scales every innovation, so noise_sd = 0 yields the
            // deterministic recursion z_t = (1 + adjustment) z_{t-1} for the
            // equilibrium error z = y - theta'x (start one unit off).
            const int k = static_cast<int>(cfg.theta.size());
            std::vector<std::vector<double>> x(static_cast<std::size_t>(k));
            std::vector<double> y;
            std::vector<double> x_now(static_cast<std::size_t>(k), 0.0);
            double y_now = 1.0;  // theta'x_0 + 1
            auto push = [&] {
                y.push_back(y_now);
                for (int j = 0; j < k; ++j)
                    x[static_cast<std::size_t>(j)].push_back(x_now[static_cast<std::size_t>(j)]);
            };
            if (cfg.burn_in == 0) push();
            for (int t = 1; t < total; ++t) {
                double eq = 0.0;
                for (int j = 0; j < k; ++j)
                    eq += cfg.theta[static_cast<std::size_t>(j)] * x_now[static_cast<std::size_t>(j)];
                y_now += cfg.adjustment * (y_now - eq) + cfg.noise_sd * rng.next_normal();
                for (int j = 0; j < k; ++j)
                    x_now[static_cast<std::size_t>(j)] += cfg.noise_sd * rng.next_normal();
                if (t >= cfg.burn_in) push();
            }
            out.add(Series{"y", kSimStart, std::move(y)});
            for (int j = 0; j < k; ++j)
                out.add(Series{"x" + std::to_string(j + 1), kSimStart,
                               std::move(x[static_cast<std::size_t>(j)])});
            break;
        }
        case DgpConfig::Kind::StableArx: {
            const int p = static_cast<int>(cfg.ar_coeffs.size());
            const int m = static_cast<int>(cfg.exog_coeffs.size());
            std::vector<double> buf;
            buf.reserve(static_cast<std::size_t>(total));
            Series s{"y", kSimStart, {}};
            s.values.reserve(static_cast<std::size_t>(cfg.T));
            std::vector<Series> exog;
            for (int j = 1; j <= m; ++j)
                exog.push_back(Series{"x" + std::to_string(j), kSimStart, {}});
            for (int t = 0; t < total; ++t) {
                double v = cfg.intercept + cfg.noise_sd * rng.next_normal();
                for (int j = 0; j < m; ++j) {
                    const double x = rng.next_normal();
                    v += cfg.exog_coeffs[static_cast<std::size_t>(j)] * x;
                    if (t >= cfg.burn_in) exog[static_cast<std::size_t>(j)].values.push_back(x);
                }
                for (int i = 1; i <= p && t - i >= 0; ++i)
                    v += cfg.ar_coeffs[static_cast<std::size_t>(i - 1)] *
                         buf[static_cast<std::size_t>(t - i)];
                buf.push_back(v);
                if (t >= cfg.burn_in) s.values.push_back(v);
            }
            out.add(std::move(s));
            for (auto& x : exog) out.add(std::move(x));
            break;
        }
    }
    return out;
}

double quantile_type7(std::vector<double> values, double q) {
    if (values.empty()) throw InvalidConfig("quantile of an empty sample");
    std::sort(values.begin(), values.end());
    const double h = (static_cast<double>(values.size()) - 1.0) * q;
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (h - std::floor(h)) * (values[hi] - values[lo]);
}

void for_each_replication(int reps, Execution exec, const std::function<void(int)>& body) {
    if (exec == Execution::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
        for (int i = 0; i < reps; ++i) body(i);
        return;
#endif
    }
    for (int i = 0; i < reps; ++i) body(i);
}

namespace {

// Bounds-test regression on raw simulated levels: the difference of the
// first series on deterministics and all one-period lagged levels. This is
// the polar frame the PSS asymptotic tables are computed in (no short-run
// augmentation).
double pss_f_statistic(const std::vector<std::vector<double>>& levels, BoundsCase which_case) {
    const int T = static_cast<int>(levels[0].size());
    const int n = T - 1;
    const int k_plus_1 = static_cast<int>(levels.size());

    DesignMatrix X;
    std::vector<Eigen::Index> restricted;
    X.add_column("const", Eigen::VectorXd::Ones(n));
    if (which_case == BoundsCase::II) restricted.push_back(0);
    if (which_case == BoundsCase::IV || which_case == BoundsCase::V) {
        Eigen::VectorXd tr(n);
        for (int t = 0; t < n; ++t) tr[t] = static_cast<double>(t + 1);
        if (which_case == BoundsCase::IV) restricted.push_back(X.cols());
        X.add_column("trend", tr);
    }
    for (int j = 0; j < k_plus_1; ++j) {
        Eigen::VectorXd col(n);
        for (int t = 1; t < T; ++t) col[t - 1] = levels[static_cast<std::size_t>(j)][static_cast<std::size_t>(t - 1)];
        restricted.push_back(X.cols());
        X.add_column("lvl" + std::to_string(j), col);
    }
    Eigen::VectorXd dy(n);
    for (int t = 1; t < T; ++t)
        dy[t - 1] = levels[0][static_cast<std::size_t>(t)] - levels[0][static_cast<std::size_t>(t - 1)];

    const OlsFit fit = fit_ols(X, dy);
    return wald_f(fit, X, dy, restricted).f_value;
}

}  // namespace

std::map<double, BoundsPair> simulate_pss_cv(int k, BoundsCase which_case, int T, int reps,
                                             std::uint64_t seed, Execution exec) {
    if (reps < 1000) throw InvalidConfig("simulate_pss_cv needs at least 1000 replications");
    if (T < 100) throw InvalidConfig("simulate_pss_cv needs T >= 100");
    if (k < 0) throw InvalidConfig("k must be non-negative");

    std::vector<double> f_upper(static_cast<std::size_t>(reps));
    std::vector<double> f_lower(static_cast<std::size_t>(reps));

    for_each_replication(reps, exec, [&](int r) {
        // Upper bound frame: dependent and every regressor I(1).
        {
            Rng rng(stream_seed(seed, 1, static_cast<std::uint64_t>(r)));
            std::vector<std::vector<double>> levels(static_cast<std::size_t>(k + 1));
            for (auto& s : levels) {
                s.resize(static_cast<std::size_t>(T));
                double level = 0.0;
                for (int t = 0; t < T; ++t) {
                    level += rng.next_normal();
                    s[static_cast<std::size_t>(t)] = level;
                }
            }
            f_upper[static_cast<std::size_t>(r)] = pss_f_statistic(levels, which_case);
        }
        // Lower bound frame: dependent I(1), regressors white noise.
        {
            Rng rng(stream_seed(seed, 2, static_cast<std::uint64_t>(r)));
            std::vector<std::vector<double>> levels(static_cast<std::size_t>(k + 1));
            for (std::size_t j = 0; j < levels.size(); ++j) {
                auto& s = levels[j];
                s.resize(static_cast<std::size_t>(T));
                double level = 0.0;
                for (int t = 0; t < T; ++t) {
                    if (j == 0) {
                        level += rng.next_normal();
                        s[static_cast<std::size_t>(t)] = level;
                    } else {
                        s[static_cast<std::size_t>(t)] = rng.next_normal();
                    }
                }
            }
            f_lower[static_cast<std::size_t>(r)] = pss_f_statistic(levels, which_case);
        }
    });

    std::map<double, BoundsPair> out;
    for (double level : {0.10, 0.05, 0.025, 0.01})
        out[level] = BoundsPair{quantile_type7(f_lower, 1.0 - level),
                                quantile_type7(f_upper, 1.0 - level)};
    return out;
}

namespace {

constexpr double kStudyLevels[] = {0.10, 0.05, 0.01};

// Per-replication rejection flags at the three study levels.
struct RepOutcome {
    bool ok = false;
    bool reject[3] = {false, false, false};
};

RepOutcome run_named_test(const std::string& test, const Dataset& data) {
    RepOutcome out;
    if (test == "bounds") {
        ModelSpec spec;
        const auto& all = data.all();
        if (all.size() < 2) throw InvalidConfig("bounds study needs y plus regressors");
        spec.dependent = all[0].name;
        for (std::size_t j = 1; j < all.size(); ++j) spec.regressors.push_back(all[j].name);
        spec.max_lag = 1;
        ArdlOrder order{1, std::vector<int>(spec.regressors.size(), 1)};
        const CecmFit cecm = to_cecm(fit_ardl(data, spec, order));
        const double f = bounds_f(cecm).f_value;
        const int k = static_cast<int>(spec.regressors.size());
        for (int i = 0; i < 3; ++i)
            out.reject[i] = f > pss_critical(k, BoundsCase::III, kStudyLevels[i]).i1;
        out.ok = true;
        return out;
    }
    if (test == "adf") {
        const AdfResult res = adf_test(data.all()[0]);
        for (int i = 0; i < 3; ++i) out.reject[i] = res.reject_unit_root(kStudyLevels[i]);
        out.ok = true;
        return out;
    }

    // Diagnostic tests run on a regression of the first series on the rest.
    const auto& all = data.all();
    const int T = static_cast<int>(data.length());
    DesignMatrix X;
    X.add_column("const", Eigen::VectorXd::Ones(T));
    for (std::size_t j = 1; j < all.size(); ++j) {
        Eigen::VectorXd col(T);
        for (int t = 0; t < T; ++t) col[t] = all[j].values[static_cast<std::size_t>(t)];
        X.add_column(all[j].name, col);
    }
    Eigen::VectorXd y(T);
    for (int t = 0; t < T; ++t) y[t] = all[0].values[static_cast<std::size_t>(t)];
    const OlsFit fit = fit_ols(X, y);

    TestResult res;
    if (test == "bg") {
        res = breusch_godfrey(fit, X, 12);
    } else if (test == "bp") {
        res = heteroskedasticity_test(fit, X, HetKind::BreuschPagan);
    } else if (test == "arch") {
        res = heteroskedasticity_test(fit, X, HetKind::Arch, 1);
    } else if (test == "jb") {
        res = jarque_bera(fit.residuals);
    } else if (test == "reset") {
        res = ramsey_reset(fit, X, y);
    } else {
        throw InvalidConfig("unknown test '" + test + "'");
    }
    for (int i = 0; i < 3; ++i) out.reject[i] = res.p_value < kStudyLevels[i];
    out.ok = true;
    return out;
}

}  // namespace

RejectionTable power_study(const std::string& test, const DgpConfig& dgp, int reps,
                           std::uint64_t seed, Execution exec) {
    if (reps < 1) throw InvalidConfig("power_study needs at least one replication");
    static const char* known[] = {"bounds", "adf", "bg", "bp", "arch", "jb", "reset"};
    if (std::find_if(std::begin(known), std::end(known),
                     [&](const char* k) { return test == k; }) == std::end(known))
        throw InvalidConfig("unknown test '" + test + "'");
    dgp.validate();

    std::vector<RepOutcome> outcomes(static_cast<std::size_t>(reps));
    for_each_replication(reps, exec, [&](int r) {
        DgpConfig cfg = dgp;
        cfg.seed = derive_seed(seed, static_cast<std::uint64_t>(r));
        try {
            outcomes[static_cast<std::size_t>(r)] = run_named_test(test, gen_dgp(cfg));
        } catch (const Error&) {
            // counted as a failure below
        }
    });

    RejectionTable table;
    table.test = test;
    table.replications = reps;
    table.seed = seed;
    table.rng = kRngAlgorithm;
    int counts[3] = {0, 0, 0};
    int ok = 0;
    for (const RepOutcome& o : outcomes) {
        if (!o.ok) continue;
        ++ok;
        for (int i = 0; i < 3; ++i) counts[i] += o.reject[i] ? 1 : 0;
    }
    table.failures = reps - ok;
    for (int i = 0; i < 3; ++i)
        table.rejection_by_level.emplace_back(
            kStudyLevels[i], ok > 0 ? static_cast<double>(counts[i]) / ok : 0.0);
    return table;
}

}  // namespace ardl
