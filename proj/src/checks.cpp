#include "ardl/checks.hpp"

#include <algorithm>
#include <cmath>

#include "ardl/dist.hpp"

namespace ardl {

namespace {

// n R^2 of an auxiliary regression, with the total variation of the
// auxiliary dependent guarded against degeneracy.
double aux_n_r_squared(const DesignMatrix& X, const Eigen::VectorXd& y) {
    const double mean = y.mean();
    const double tss = (y.array() - mean).matrix().squaredNorm();
    if (tss <= 0.0) return 0.0;
    const OlsFit fit = fit_ols(X, y);
    const double r2 = std::max(0.0, 1.0 - fit.rss / tss);
    return static_cast<double>(y.size()) * r2;
}

bool has_intercept_column(const DesignMatrix& X) {
    for (Eigen::Index j = 0; j < X.cols(); ++j) {
        const auto col = X.values.col(j);
        if (col[0] != 0.0 && (col.array() - col[0]).abs().maxCoeff() <
                                 1e-12 * std::max(1.0, std::fabs(col[0])))
            return true;
    }
    return false;
}

}  // namespace

TestResult breusch_godfrey(const OlsFit& fit, const DesignMatrix& X, int lags) {
    if (lags < 1) throw InvalidConfig("Breusch-Godfrey needs at least one lag");
    const Eigen::Index T = X.rows();
    if (T <= X.cols() + lags)
        throw InsufficientSample("Breusch-Godfrey with " + std::to_string(lags) + " lags");

    TestResult out{"breusch_godfrey(" + std::to_string(lags) + ")", 0.0, 1.0, lags};
    const double resid_scale = fit.residuals.cwiseAbs().maxCoeff();
    const double fit_scale = std::max(1.0, fit.fitted.cwiseAbs().maxCoeff());
    if (resid_scale <= 1e-12 * fit_scale) return out;  // numerically exact fit

    DesignMatrix aux = X;
    for (int l = 1; l <= lags; ++l) {
        Eigen::VectorXd lagged = Eigen::VectorXd::Zero(T);
        lagged.tail(T - l) = fit.residuals.head(T - l);
        aux.add_column("resid(-" + std::to_string(l) + ")", lagged);
    }
    out.statistic = aux_n_r_squared(aux, fit.residuals);
    out.p_value = dist::chi2_p_value(out.statistic, lags);
    return out;
}

TestResult heteroskedasticity_test(const OlsFit& fit, const DesignMatrix& X, HetKind kind,
                                   int arch_lags) {
    const Eigen::Index T = X.rows();
    const Eigen::VectorXd e2 = fit.residuals.array().square();

    if (kind == HetKind::BreuschPagan) {
        DesignMatrix aux = X;
        int dof = static_cast<int>(X.cols());
        if (has_intercept_column(X)) {
            dof -= 1;
        } else {
            aux.add_column("const", Eigen::VectorXd::Ones(T));
        }
        if (dof < 1) throw InvalidConfig("Breusch-Pagan needs a non-constant regressor");
        TestResult out{"breusch_pagan", 0.0, 1.0, dof};
        out.statistic = aux_n_r_squared(aux, e2);
        out.p_value = dist::chi2_p_value(out.statistic, dof);
        return out;
    }

    if (arch_lags < 1) throw InvalidConfig("ARCH test needs at least one lag");
    const Eigen::Index n = T - arch_lags;
    if (n <= arch_lags + 1) throw InsufficientSample("ARCH test sample too small");
    DesignMatrix aux;
    aux.add_column("const", Eigen::VectorXd::Ones(n));
    for (int l = 1; l <= arch_lags; ++l)
        aux.add_column("e2(-" + std::to_string(l) + ")", e2.segment(arch_lags - l, n));
    TestResult out{"arch(" + std::to_string(arch_lags) + ")", 0.0, 1.0, arch_lags};
    out.statistic = aux_n_r_squared(aux, e2.tail(n));
    out.p_value = dist::chi2_p_value(out.statistic, arch_lags);
    return out;
}

TestResult jarque_bera(const Eigen::VectorXd& residuals) {
    const Eigen::Index n = residuals.size();
    if (n < 4) throw InsufficientSample("Jarque-Bera needs at least 4 observations");
    const double mean = residuals.mean();
    const Eigen::ArrayXd centered = residuals.array() - mean;
    const double m2 = centered.square().mean();
    if (m2 <= 0.0) throw ZeroVariance("residuals are constant");
    const double m3 = centered.cube().mean();
    const double m4 = centered.square().square().mean();
    const double skew = m3 / std::pow(m2, 1.5);
    const double kurt = m4 / (m2 * m2);
    TestResult out{"jarque_bera", 0.0, 1.0, 2};
    out.statistic =
        static_cast<double>(n) / 6.0 * (skew * skew + (kurt - 3.0) * (kurt - 3.0) / 4.0);
    out.p_value = dist::chi2_p_value(out.statistic, 2);
    return out;
}

TestResult ramsey_reset(const OlsFit& fit, const DesignMatrix& X, const Eigen::VectorXd& y,
                        const std::vector<int>& powers) {
    if (powers.empty()) throw InvalidConfig("RESET needs at least one power");
    TestResult out{"ramsey_reset", 0.0, 1.0, static_cast<int>(powers.size())};

    // Degenerate fits carry no information about functional form.
    const double y_scale = std::max(1.0, y.cwiseAbs().maxCoeff());
    if (fit.rss <= 1e-24 * y_scale * y_scale) return out;

    const double sd = std::sqrt((fit.fitted.array() - fit.fitted.mean()).square().mean());
    if (sd <= 0.0) throw CollinearAugmentation();
    const Eigen::ArrayXd z = (fit.fitted.array() - fit.fitted.mean()) / sd;

    DesignMatrix aux = X;
    std::vector<Eigen::Index> added;
    for (int p : powers) {
        if (p < 2) throw InvalidConfig("RESET powers must be >= 2");
        added.push_back(aux.cols());
        aux.add_column("fitted^" + std::to_string(p), z.pow(p).matrix());
    }
    try {
        const OlsFit augmented = fit_ols(aux, y);
        const FStatResult f = wald_f(augmented, aux, y, added);
        out.statistic = f.f_value;
        out.p_value = f.p_value;
    } catch (const RankDeficient&) {
        throw CollinearAugmentation();
    }
    return out;
}

namespace {

// Brown-Durbin-Evans boundary constants for the CUSUM test.
double cusum_constant(double level) {
    if (level == 0.10) return 0.850;
    if (level == 0.05) return 0.948;
    if (level == 0.01) return 1.143;
    throw InvalidConfig("CUSUM boundaries tabulated at 10%, 5%, 1% only");
}

struct QuantRow {
    int n;
    double c10, c05, c01;
};

// Simulated (1 - level) quantiles of max_t |sum_{s<=t} w_s^2 / sum w^2 - t/n|
// over t = 1..n-1 for i.i.d. Gaussian w; generated by tools/gen_cusumsq_table
// (200000 replications per row, type-7 quantiles). data/cusumsq_quantiles.txt
// carries the same values with full provenance.
constexpr QuantRow kCusumsqTable[] = {
#include "cusumsq_table.inc"
};
constexpr int kCusumsqRows = static_cast<int>(sizeof(kCusumsqTable) / sizeof(QuantRow));

}  // namespace

double cusumsq_critical(long n, double level) {
    auto pick = [&](const QuantRow& r) {
        if (level == 0.10) return r.c10;
        if (level == 0.05) return r.c05;
        if (level == 0.01) return r.c01;
        throw InvalidConfig("CUSUM-of-squares offsets tabulated at 10%, 5%, 1% only");
    };
    if (n < kCusumsqTable[0].n)
        throw InsufficientSample("CUSUM-of-squares needs at least " +
                                 std::to_string(kCusumsqTable[0].n) + " recursive residuals");
    const QuantRow& last = kCusumsqTable[kCusumsqRows - 1];
    if (n >= last.n) {
        // 1/sqrt(n) tail scaling past the table.
        return pick(last) * std::sqrt(static_cast<double>(last.n) / static_cast<double>(n));
    }
    for (int i = 1; i < kCusumsqRows; ++i) {
        if (n <= kCusumsqTable[i].n) {
            const QuantRow& lo = kCusumsqTable[i - 1];
            const QuantRow& hi = kCusumsqTable[i];
            const double w = static_cast<double>(n - lo.n) / static_cast<double>(hi.n - lo.n);
            return pick(lo) + w * (pick(hi) - pick(lo));
        }
    }
    return pick(last);
}

namespace {

// Recursive residuals are treated as identically zero when their energy is
// at rounding level relative to the data.
bool degenerate_w(const Eigen::VectorXd& w, const Eigen::VectorXd& y) {
    const double eps = 1e-12 * std::max(1.0, y.cwiseAbs().maxCoeff());
    return w.squaredNorm() <= static_cast<double>(w.size()) * eps * eps;
}

}  // namespace

StabilityResult cusum(const DesignMatrix& X, const Eigen::VectorXd& y, double level) {
    const double a = cusum_constant(level);
    const Eigen::VectorXd w = recursive_residuals(X, y);
    const long n = static_cast<long>(w.size());
    StabilityResult out;
    out.level = level;
    out.path.resize(n);
    out.upper_boundary.resize(n);
    out.lower_boundary.resize(n);

    const bool zero = degenerate_w(w, y);
    const double sigma = std::sqrt(w.squaredNorm() / static_cast<double>(n));
    const double root_n = std::sqrt(static_cast<double>(n));
    double cum = 0.0;
    for (long j = 0; j < n; ++j) {
        cum += zero ? 0.0 : w[j] / sigma;
        out.path[j] = cum;
        const double bound = a * (root_n + 2.0 * static_cast<double>(j + 1) / root_n);
        out.upper_boundary[j] = bound;
        out.lower_boundary[j] = -bound;
        if (!(out.path[j] > out.lower_boundary[j] && out.path[j] < out.upper_boundary[j]))
            out.within = false;
    }
    return out;
}

StabilityResult cusumsq(const DesignMatrix& X, const Eigen::VectorXd& y, double level) {
    const Eigen::VectorXd w = recursive_residuals(X, y);
    const long n = static_cast<long>(w.size());
    if (degenerate_w(w, y))
        throw DegenerateResiduals("sum of squared recursive residuals is zero");
    // Sequential sum, matching the accumulation below, so the path ends at
    // exactly 1.
    double total = 0.0;
    for (long j = 0; j < n; ++j) total += w[j] * w[j];
    const double c0 = cusumsq_critical(n, level);

    StabilityResult out;
    out.level = level;
    out.path.resize(n);
    out.upper_boundary.resize(n);
    out.lower_boundary.resize(n);
    double cum = 0.0;
    for (long j = 0; j < n; ++j) {
        cum += w[j] * w[j];
        out.path[j] = cum / total;
        const double line = static_cast<double>(j + 1) / static_cast<double>(n);
        out.upper_boundary[j] = line + c0;
        out.lower_boundary[j] = line - c0;
        if (!(out.path[j] > out.lower_boundary[j] && out.path[j] < out.upper_boundary[j]))
            out.within = false;
    }
    return out;
}

}  // namespace ardl
