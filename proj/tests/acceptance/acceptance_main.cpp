// Acceptance suite: one pass/fail line per criterion, each checked at its
// stated tolerance with a wall-clock budget. Exit code 0 only when every
// criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <sys/stat.h>
#include <vector>

#include "ardl/ardl_model.hpp"
#include "ardl/checks.hpp"
#include "ardl/dist.hpp"
#include "ardl/forecast.hpp"
#include "ardl/report.hpp"
#include "ardl/rng.hpp"
#include "ardl/sim.hpp"

using namespace ardl;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct AcceptanceCheck {
    std::string label;
    double time_limit_s;
    std::function<std::string()> run;  // empty string = pass, else failure detail
};

void run_criterion(const AcceptanceCheck& c) {
    const auto t0 = Clock::now();
    std::string detail;
    try {
        detail = c.run();
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    if (detail.empty() && elapsed > c.time_limit_s) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "exceeded time limit (%.1f s > %.0f s)", elapsed,
                      c.time_limit_s);
        detail = buf;
    }
    if (detail.empty()) {
        std::printf("[PASS] %s (%.2f s)\n", c.label.c_str(), elapsed);
    } else {
        std::printf("[FAIL] %s (%.2f s): %s\n", c.label.c_str(), elapsed, detail.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

std::string fail_fmt(const char* fmt, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), fmt, a, b, c);
    return buf;
}

// ---------------------------------------------------------------- criterion 1

std::string ols_oracle_equivalence() {
    // hand example first
    {
        DesignMatrix X;
        Eigen::MatrixXd v(3, 2);
        v << 1, 0, 1, 1, 1, 2;
        X.values = v;
        X.names = {"const", "x"};
        Eigen::VectorXd y(3);
        y << 1, 3, 4;
        OlsFit fit = fit_ols(X, y);
        if (std::fabs(fit.coefficients[0] - 7.0 / 6.0) > 1e-12 ||
            std::fabs(fit.coefficients[1] - 1.5) > 1e-12)
            return "hand example off beyond 1e-12";
    }
    // 100 random well-conditioned 30x5 systems vs explicit normal equations
    for (int rep = 0; rep < 100; ++rep) {
        Rng rng(derive_seed(101, rep));
        Eigen::MatrixXd v(30, 5);
        for (int i = 0; i < 30; ++i) {
            v(i, 0) = 1.0;
            for (int j = 1; j < 5; ++j) v(i, j) = rng.next_normal();
        }
        Eigen::VectorXd y(30);
        for (int i = 0; i < 30; ++i) y[i] = rng.next_normal() * 2.0 + v(i, 1);
        DesignMatrix X;
        X.values = v;
        X.names = {"c", "a", "b", "d", "e"};
        OlsFit fit = fit_ols(X, y);

        // test-side oracle: Gauss-Jordan on X'X b = X'y
        Eigen::MatrixXd A = v.transpose() * v;
        Eigen::VectorXd b = v.transpose() * y;
        const Eigen::Index n = A.rows();
        for (Eigen::Index col = 0; col < n; ++col) {
            Eigen::Index pivot = col;
            for (Eigen::Index r = col + 1; r < n; ++r)
                if (std::fabs(A(r, col)) > std::fabs(A(pivot, col))) pivot = r;
            A.row(col).swap(A.row(pivot));
            std::swap(b[col], b[pivot]);
            const double dd = A(col, col);
            A.row(col) /= dd;
            b[col] /= dd;
            for (Eigen::Index r = 0; r < n; ++r) {
                if (r == col) continue;
                const double f = A(r, col);
                A.row(r) -= f * A.row(col);
                b[r] -= f * b[col];
            }
        }
        for (int j = 0; j < 5; ++j)
            if (std::fabs(fit.coefficients[j] - b[j]) > 1e-8)
                return fail_fmt("coefficient gap %.2e beyond 1e-8 at rep %g",
                                std::fabs(fit.coefficients[j] - b[j]), rep);
    }
    return "";
}

// ---------------------------------------------------------------- criterion 2

std::string reparameterization_identity() {
    Rng pick(202);
    for (int rep = 0; rep < 200; ++rep) {
        const int k = 1 + static_cast<int>(pick.next_u64() % 3);
        const int N = 1 + static_cast<int>(pick.next_u64() % 3);
        DgpConfig dgp;
        dgp.kind = DgpConfig::Kind::IndependentRandomWalks;
        dgp.n_series = k + 1;
        dgp.T = 150;
        dgp.seed = derive_seed(203, rep);
        Dataset d = gen_dgp(dgp);

        ModelSpec spec;
        spec.dependent = "v1";
        for (int j = 2; j <= k + 1; ++j) spec.regressors.push_back("v" + std::to_string(j));
        spec.max_lag = N;
        ArdlOrder order;
        order.p = 1 + static_cast<int>(pick.next_u64() % N);
        for (int j = 0; j < k; ++j)
            order.q.push_back(static_cast<int>(pick.next_u64() % (N + 1)));

        ArdlFit levels = fit_ardl(d, spec, order);
        CecmFit cecm = to_cecm(levels);
        if (std::fabs(levels.fit.rss - cecm.fit.rss) > 1e-8 * std::max(levels.fit.rss, 1e-30))
            return fail_fmt("RSS gap %.2e relative at rep %g",
                            std::fabs(levels.fit.rss - cecm.fit.rss) / levels.fit.rss, rep);
        LongRunResult lr = long_run(cecm);
        EcmResult ecm = ecm_restricted(cecm, lr);
        if (std::fabs(ecm.ect_coefficient - cecm.adjustment_coefficient()) > 1e-8)
            return fail_fmt("ECT gap %.2e at rep %g",
                            std::fabs(ecm.ect_coefficient - cecm.adjustment_coefficient()), rep);
    }
    return "";
}

// ---------------------------------------------------------------- criterion 3

std::string arithmetic_anchor() {
    CecmFit c;
    c.spec.dependent = "y";
    c.spec.regressors = {"gdp"};
    c.idx_dep_level = 0;
    c.idx_reg_levels = {1};
    c.fit.coefficients.resize(2);
    c.fit.coefficients << -0.090, 0.16632;
    c.fit.coef_covariance = Eigen::MatrixXd::Identity(2, 2) * 1e-6;
    c.fit.dof = 100;
    LongRunResult lr = long_run(c);
    const double got = lr.coefficients[0].estimate;
    if (std::fabs(got - 1.848) > 1e-6) return fail_fmt("theta %.8f differs from 1.848", got);
    return "";
}

// ---------------------------------------------------------------- criterion 4

std::string bounds_size_and_power() {
    DgpConfig null_cfg;
    null_cfg.kind = DgpConfig::Kind::IndependentRandomWalks;
    null_cfg.n_series = 3;  // dependent + k = 2
    null_cfg.T = 500;
    RejectionTable size = power_study("bounds", null_cfg, 1000, 404);
    double size5 = -1.0;
    for (auto [level, freq] : size.rejection_by_level)
        if (level == 0.05) size5 = freq;
    if (size.failures > 0) return fail_fmt("%g null replications failed", size.failures);
    if (size5 > 0.08) return fail_fmt("size %.3f above 0.08", size5);

    DgpConfig alt;
    alt.kind = DgpConfig::Kind::CointegratedArdl;
    alt.theta = {1.0};
    alt.adjustment = -0.2;
    alt.T = 300;
    RejectionTable power = power_study("bounds", alt, 500, 405);
    double power5 = -1.0;
    for (auto [level, freq] : power.rejection_by_level)
        if (level == 0.05) power5 = freq;
    if (power.failures > 0) return fail_fmt("%g alternative replications failed", power.failures);
    if (power5 < 0.90) return fail_fmt("power %.3f below 0.90", power5);
    return "";
}

// ---------------------------------------------------------------- criterion 5

std::string critical_value_cross_validation() {
    auto sim = simulate_pss_cv(1, BoundsCase::III, 1000, 20000, 505, Execution::Parallel);
    const BoundsPair table = pss_critical(1, BoundsCase::III, 0.05);
    const BoundsPair mc = sim.at(0.05);
    if (std::fabs(mc.i0 - table.i0) > 0.2)
        return fail_fmt("I(0) bound: simulated %.3f vs table %.2f", mc.i0, table.i0);
    if (std::fabs(mc.i1 - table.i1) > 0.2)
        return fail_fmt("I(1) bound: simulated %.3f vs table %.2f", mc.i1, table.i1);
    return "";
}

// ---------------------------------------------------------------- criterion 6

std::string adf_calibration() {
    DgpConfig rw;
    rw.kind = DgpConfig::Kind::IndependentRandomWalks;
    rw.n_series = 1;
    rw.T = 200;
    RejectionTable size = power_study("adf", rw, 1000, 606);
    double size5 = -1.0;
    for (auto [level, freq] : size.rejection_by_level)
        if (level == 0.05) size5 = freq;
    if (std::fabs(size5 - 0.05) > 0.025) return fail_fmt("size %.3f outside 0.05 +/- 0.025", size5);

    DgpConfig ar;
    ar.kind = DgpConfig::Kind::StableArx;
    ar.ar_coeffs = {0.5};
    ar.T = 500;
    RejectionTable power = power_study("adf", ar, 1000, 607);
    double power5 = -1.0;
    for (auto [level, freq] : power.rejection_by_level)
        if (level == 0.05) power5 = freq;
    if (power5 <= 0.99) return fail_fmt("power %.3f not above 0.99", power5);
    return "";
}

// ---------------------------------------------------------------- criterion 7

struct DiagRegression {
    DesignMatrix X;
    Eigen::VectorXd y;
    OlsFit fit;
};

// kinds: 0 iid null; 1 AR(0.6) errors; 2 variance proportional to a
// regressor; 3 ARCH(1); 4 exponential errors; 5 quadratic misspecification
DiagRegression diag_regression(std::uint64_t seed, int T, int kind) {
    Rng rng(seed);
    DiagRegression r;
    r.X.add_column("const", Eigen::VectorXd::Ones(T));
    Eigen::VectorXd x(T), z(T);
    for (int i = 0; i < T; ++i) {
        x[i] = rng.next_normal();
        const double u = rng.next_normal();
        z[i] = 0.3 + u * u;
    }
    r.X.add_column("x", x);
    r.X.add_column("z", z);
    r.y.resize(T);
    double prev = 0.0;
    for (int i = 0; i < T; ++i) {
        double e = 0.0;
        switch (kind) {
            case 1: e = 0.6 * prev + rng.next_normal(); prev = e; break;
            case 2: e = std::sqrt(1.5 * z[i]) * rng.next_normal(); break;
            case 3: {
                const double sd = std::sqrt(0.3 + 0.7 * prev * prev);
                e = sd * rng.next_normal();
                prev = e;
                break;
            }
            case 4: e = -std::log(rng.next_uniform()) - 1.0; break;
            default: e = rng.next_normal(); break;
        }
        r.y[i] = 1.0 + 0.5 * x[i] + 0.2 * z[i] + (kind == 5 ? 0.4 * x[i] * x[i] : 0.0) + e;
    }
    r.fit = fit_ols(r.X, r.y);
    return r;
}

double diag_rate(int kind, int which_test, int reps, int T, std::uint64_t tag) {
    std::vector<char> rejected(static_cast<std::size_t>(reps), 0);
    for_each_replication(reps, Execution::Parallel, [&](int r) {
        DiagRegression reg = diag_regression(derive_seed(tag, r), T, kind);
        TestResult res;
        switch (which_test) {
            case 0: res = breusch_godfrey(reg.fit, reg.X, 12); break;
            case 1: res = heteroskedasticity_test(reg.fit, reg.X, HetKind::BreuschPagan); break;
            case 2: res = heteroskedasticity_test(reg.fit, reg.X, HetKind::Arch, 1); break;
            case 3: res = jarque_bera(reg.fit.residuals); break;
            default: res = ramsey_reset(reg.fit, reg.X, reg.y); break;
        }
        rejected[static_cast<std::size_t>(r)] = res.pass_at_5pct() ? 0 : 1;
    });
    int count = 0;
    for (char c : rejected) count += c;
    return static_cast<double>(count) / reps;
}

std::string diagnostics_calibration() {
    // JB alternating-sign example
    Eigen::VectorXd alt(6);
    alt << -1, 1, -1, 1, -1, 1;
    if (jarque_bera(alt).statistic != 1.0) return "JB alternating example not exactly 1";

    const char* names[5] = {"BG", "BP", "ARCH", "JB", "RESET"};
    const int alt_kind[5] = {1, 2, 3, 4, 5};
    for (int t = 0; t < 5; ++t) {
        const double size = diag_rate(0, t, 1000, 300, 700 + t);
        if (std::fabs(size - 0.05) > 0.02)
            return fail_fmt((std::string(names[t]) + " size %.3f outside 0.05 +/- 0.02").c_str(),
                            size);
        const double power = diag_rate(alt_kind[t], t, 1000, 300, 750 + t);
        if (power <= 0.90)
            return fail_fmt((std::string(names[t]) + " power %.3f not above 0.90").c_str(), power);
    }
    return "";
}

// ---------------------------------------------------------------- criterion 8

std::string stability_calibration() {
    const int T = 300, reps = 1000;
    // size under a stable Gaussian regression
    std::vector<char> cross_cusum(reps, 0), cross_cusumsq(reps, 0), ends_at_one(reps, 1);
    for_each_replication(reps, Execution::Parallel, [&](int r) {
        Rng rng(derive_seed(808, r));
        DesignMatrix X;
        X.add_column("const", Eigen::VectorXd::Ones(T));
        Eigen::VectorXd x(T), y(T);
        for (int i = 0; i < T; ++i) x[i] = rng.next_normal();
        X.add_column("x", x);
        for (int i = 0; i < T; ++i) y[i] = 1.0 + 0.5 * x[i] + rng.next_normal();
        if (!cusum(X, y, 0.05).within) cross_cusum[static_cast<std::size_t>(r)] = 1;
        StabilityResult sq = cusumsq(X, y, 0.05);
        if (!sq.within) cross_cusumsq[static_cast<std::size_t>(r)] = 1;
        if (sq.path.back() != 1.0) ends_at_one[static_cast<std::size_t>(r)] = 0;
    });
    int c = 0, s = 0, e = 0;
    for (int r = 0; r < reps; ++r) {
        c += cross_cusum[static_cast<std::size_t>(r)];
        s += cross_cusumsq[static_cast<std::size_t>(r)];
        e += ends_at_one[static_cast<std::size_t>(r)];
    }
    if (e != reps) return "a CUSUMSQ path did not end exactly at 1";
    const double cusum_size = c / static_cast<double>(reps);
    const double cusumsq_size = s / static_cast<double>(reps);
    if (std::fabs(cusum_size - 0.05) > 0.02)
        return fail_fmt("CUSUM size %.3f outside 0.05 +/- 0.02", cusum_size);
    if (std::fabs(cusumsq_size - 0.05) > 0.02)
        return fail_fmt("CUSUMSQ size %.3f outside 0.05 +/- 0.02", cusumsq_size);

    // power: five-error-sd intercept break at mid sample; variance doubling
    std::vector<char> break_cusum(reps, 0), break_cusumsq(reps, 0);
    for_each_replication(reps, Execution::Parallel, [&](int r) {
        Rng rng(derive_seed(809, r));
        DesignMatrix X;
        X.add_column("const", Eigen::VectorXd::Ones(T));
        Eigen::VectorXd x(T), y(T), y2(T);
        for (int i = 0; i < T; ++i) x[i] = rng.next_normal();
        X.add_column("x", x);
        for (int i = 0; i < T; ++i) {
            y[i] = (i < T / 2 ? 0.0 : 5.0) + 0.5 * x[i] + rng.next_normal();
            y2[i] = 0.5 * x[i] + (i < T / 2 ? 1.0 : 2.0) * rng.next_normal();
        }
        if (!cusum(X, y, 0.05).within) break_cusum[static_cast<std::size_t>(r)] = 1;
        if (!cusumsq(X, y2, 0.05).within) break_cusumsq[static_cast<std::size_t>(r)] = 1;
    });
    int bc = 0, bs = 0;
    for (int r = 0; r < reps; ++r) {
        bc += break_cusum[static_cast<std::size_t>(r)];
        bs += break_cusumsq[static_cast<std::size_t>(r)];
    }
    if (bc / static_cast<double>(reps) <= 0.80)
        return fail_fmt("CUSUM break power %.3f not above 0.80", bc / static_cast<double>(reps));
    if (bs / static_cast<double>(reps) <= 0.80)
        return fail_fmt("CUSUMSQ break power %.3f not above 0.80", bs / static_cast<double>(reps));
    return "";
}

// ---------------------------------------------------------------- criterion 9

double t_upper_quantile(double p, double dof) {
    double lo = 0.0, hi = 50.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (dist::t_p_value_two_sided(mid, dof) > 2.0 * (1.0 - p))
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::string long_run_coverage() {
    const int reps = 500;
    std::vector<char> covered(reps, 0);
    std::vector<char> ok(reps, 0);
    for_each_replication(reps, Execution::Parallel, [&](int r) {
        DgpConfig cfg;
        cfg.kind = DgpConfig::Kind::CointegratedArdl;
        cfg.theta = {1.85};
        cfg.adjustment = -0.2;
        cfg.T = 300;
        cfg.seed = derive_seed(909, r);
        try {
            Dataset d = gen_dgp(cfg);
            ModelSpec spec;
            spec.dependent = "y";
            spec.regressors = {"x1"};
            spec.max_lag = 2;
            CecmFit cecm = to_cecm(fit_ardl(d, spec, ArdlOrder{1, {1}}));
            LongRunResult lr = long_run(cecm);
            const double t = t_upper_quantile(0.975, static_cast<double>(cecm.fit.dof));
            const double lo = lr.coefficients[0].estimate - t * lr.coefficients[0].std_error;
            const double hi = lr.coefficients[0].estimate + t * lr.coefficients[0].std_error;
            covered[static_cast<std::size_t>(r)] = (lo <= 1.85 && 1.85 <= hi) ? 1 : 0;
            ok[static_cast<std::size_t>(r)] = 1;
        } catch (const Error&) {
        }
    });
    int cov = 0, n_ok = 0;
    for (int r = 0; r < reps; ++r) {
        cov += covered[static_cast<std::size_t>(r)];
        n_ok += ok[static_cast<std::size_t>(r)];
    }
    if (n_ok != reps) return fail_fmt("%g replications failed", reps - n_ok);
    const double coverage = cov / static_cast<double>(reps);
    if (coverage < 0.93 || coverage > 0.97)
        return fail_fmt("coverage %.3f outside [0.93, 0.97]", coverage);
    return "";
}

// --------------------------------------------------------------- criterion 10

std::string forecast_contracts() {
    // geometric AR(1) example
    {
        ArdlFit f;
        f.spec.dependent = "y";
        f.spec.intercept = false;
        f.spec.max_lag = 1;
        f.order = ArdlOrder{1, {}};
        f.data.add(Series{"y", {2020, 1}, {8.0, 8.0, 8.0}});
        f.offset = 1;
        f.idx_dep_lags = {0};
        f.fit.coefficients.resize(1);
        f.fit.coefficients << 0.5;
        Forecast fc = dynamic_forecast(f, ExogScenario::hold_last(f, 3), 3);
        if (std::fabs(fc.point[0] - 4.0) > 1e-12 || std::fabs(fc.point[1] - 2.0) > 1e-12 ||
            std::fabs(fc.point[2] - 1.0) > 1e-12)
            return "AR(1) geometric example not exact";
    }
    // steady-state convergence on 50 random stable fits
    int checked = 0;
    for (int rep = 0; rep < 50; ++rep) {
        DgpConfig cfg;
        cfg.kind = DgpConfig::Kind::CointegratedArdl;
        cfg.theta = {1.5};
        cfg.adjustment = -0.3;
        cfg.T = 250;
        cfg.seed = derive_seed(1010, rep);
        Dataset d = gen_dgp(cfg);
        ModelSpec spec;
        spec.dependent = "y";
        spec.regressors = {"x1"};
        spec.max_lag = 2;
        ArdlFit f = fit_ardl(d, spec, ArdlOrder{1, {1}});
        Forecast probe = dynamic_forecast(f, ExogScenario::hold_last(f, 1), 1);
        if (!probe.stable) continue;
        const double rho = probe.spectral_radius;
        int H = 1;
        double decay = rho;
        while (decay >= 0.01 && H < 5000) {
            decay *= rho;
            ++H;
        }
        Forecast fc = dynamic_forecast(f, ExogScenario::hold_last(f, H), H);
        const double target = steady_state(f, {{"x1", d.at("x1").values.back()}});
        const double gap0 = std::fabs(d.at("y").values.back() - target);
        if (std::fabs(fc.point.back() - target) >
            0.01 * std::max({1.0, std::fabs(target), gap0}))
            return fail_fmt("no convergence at rep %g: err %.4f", rep,
                            std::fabs(fc.point.back() - target));
        ++checked;
    }
    if (checked < 45) return fail_fmt("only %g of 50 fits were stable", checked);
    return "";
}

// --------------------------------------------------------------- criterion 11

std::string determinism() {
    // full pipeline, byte-identical renderings across two runs
    PipelineConfig cfg =
        PipelineConfig::from_json_file(std::string(ARDL_SOURCE_DIR) + "/configs/demo.json");
    cfg.data_path = std::string(ARDL_SOURCE_DIR) + "/data/demo_monthly.csv";
    const std::string out_a = "/tmp/ardl_accept_a", out_b = "/tmp/ardl_accept_b";
    mkdir(out_a.c_str(), 0755);
    mkdir(out_b.c_str(), 0755);
    cfg.out_dir = out_a;
    RunReport first = run_pipeline(cfg);
    cfg.out_dir = out_b;
    RunReport second = run_pipeline(cfg);
    if (report_to_json(first) != report_to_json(second)) return "pipeline JSON differs across runs";
    if (report_to_text(first) != report_to_text(second)) return "pipeline text differs across runs";
    auto paths_a = render_report(first, ReportFormat::CsvBundle, out_a);
    auto paths_b = render_report(second, ReportFormat::CsvBundle, out_b);
    if (paths_a.size() != paths_b.size()) return "CSV bundle file count differs";
    for (std::size_t i = 0; i < paths_a.size(); ++i) {
        std::ifstream a(paths_a[i]), b(paths_b[i]);
        std::stringstream sa, sb;
        sa << a.rdbuf();
        sb << b.rdbuf();
        if (sa.str() != sb.str()) return "CSV bundle differs: " + paths_a[i];
    }

    // Monte Carlo studies bit-identical across serial and concurrent execution
    auto cv_serial = simulate_pss_cv(2, BoundsCase::III, 200, 2000, 1111, Execution::Serial);
    auto cv_parallel = simulate_pss_cv(2, BoundsCase::III, 200, 2000, 1111, Execution::Parallel);
    for (double level : {0.10, 0.05, 0.025, 0.01})
        if (cv_serial.at(level).i0 != cv_parallel.at(level).i0 ||
            cv_serial.at(level).i1 != cv_parallel.at(level).i1)
            return "simulated critical values differ between serial and parallel execution";

    DgpConfig dgp;
    dgp.kind = DgpConfig::Kind::CointegratedArdl;
    dgp.theta = {1.0};
    dgp.adjustment = -0.2;
    dgp.T = 200;
    RejectionTable study_serial = power_study("bounds", dgp, 400, 2222, Execution::Serial);
    RejectionTable study_parallel = power_study("bounds", dgp, 400, 2222, Execution::Parallel);
    for (std::size_t i = 0; i < study_serial.rejection_by_level.size(); ++i)
        if (study_serial.rejection_by_level[i].second !=
            study_parallel.rejection_by_level[i].second)
            return "rejection tables differ between serial and parallel execution";
    return "";
}

}  // namespace

int main() {
    std::printf("acceptance suite\n================\n");
    const std::vector<AcceptanceCheck> criteria = {
        {"1. OLS oracle equivalence (100 random systems + hand example)", 1.0,
         ols_oracle_equivalence},
        {"2. reparameterization identity (200 random specs)", 30.0, reparameterization_identity},
        {"3. long-run arithmetic anchor (-0.090, 0.16632 -> 1.848)", 1.0, arithmetic_anchor},
        {"4. bounds test size <= 0.08 and power >= 0.90", 180.0, bounds_size_and_power},
        {"5. simulated vs tabulated bounds, k=1 5% within 0.2", 300.0,
         critical_value_cross_validation},
        {"6. ADF size 5% +/- 2.5pp and power > 99%", 120.0, adf_calibration},
        {"7. diagnostics size 5% +/- 2pp, power > 90%, JB example exact", 180.0,
         diagnostics_calibration},
        {"8. stability size 5% +/- 2pp, break power > 80%, path ends at 1", 120.0,
         stability_calibration},
        {"9. long-run 95% interval coverage in [93%, 97%]", 180.0, long_run_coverage},
        {"10. forecast contracts (geometric example, steady states)", 30.0, forecast_contracts},
        {"11. determinism (pipeline bytes, serial == parallel)", 120.0, determinism},
    };
    for (const auto& c : criteria) run_criterion(c);
    if (failures == 0) {
        std::printf("\nall %zu criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("\n%d criterion(s) failed\n", failures);
    return 1;
}
