#include "ardl/ols.hpp"

#include <cmath>
#include <limits>

#include "ardl/dist.hpp"

namespace ardl {

namespace {

constexpr double kRankTol = 1e-10;

bool is_intercept_column(const Eigen::VectorXd& col) {
    const double first = col[0];
    if (first == 0.0) return false;
    const double scale = std::max(1.0, std::fabs(first));
    return ((col.array() - first).abs() < 1e-12 * scale).all();
}

}  // namespace

void DesignMatrix::add_column(const std::string& name, const Eigen::VectorXd& col) {
    if (values.size() == 0) {
        values.resize(col.size(), 0);
    } else if (values.rows() != col.size()) {
        throw DimensionMismatch("column '" + name + "' has " + std::to_string(col.size()) +
                                " rows, design has " + std::to_string(values.rows()));
    }
    values.conservativeResize(Eigen::NoChange, values.cols() + 1);
    values.col(values.cols() - 1) = col;
    names.push_back(name);
}

Eigen::Index DesignMatrix::column(const std::string& name) const {
    for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(names.size()); ++j)
        if (names[static_cast<std::size_t>(j)] == name) return j;
    return -1;
}

DesignMatrix DesignMatrix::without_columns(const std::vector<Eigen::Index>& drop) const {
    std::vector<bool> dropped(static_cast<std::size_t>(cols()), false);
    for (Eigen::Index j : drop) {
        if (j < 0 || j >= cols())
            throw DimensionMismatch("column index " + std::to_string(j) + " out of range");
        dropped[static_cast<std::size_t>(j)] = true;
    }
    DesignMatrix out;
    out.values.resize(rows(), 0);
    for (Eigen::Index j = 0; j < cols(); ++j)
        if (!dropped[static_cast<std::size_t>(j)])
            out.add_column(names[static_cast<std::size_t>(j)], values.col(j));
    return out;
}

double OlsFit::p_value(Eigen::Index i) const {
    return dist::t_p_value_two_sided(t_stat(i), static_cast<double>(dof));
}

OlsFit fit_ols(const DesignMatrix& X, const Eigen::VectorXd& y) {
    const Eigen::Index T = X.rows();
    const Eigen::Index K = X.cols();
    if (T != y.size())
        throw DimensionMismatch("X has " + std::to_string(T) + " rows, y has " +
                                std::to_string(y.size()));
    if (K < 1) throw DimensionMismatch("design matrix has no columns");
    if (T <= K)
        throw DimensionMismatch("need more observations (" + std::to_string(T) +
                                ") than regressors (" + std::to_string(K) + ")");

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X.values);
    qr.setThreshold(kRankTol);
    if (qr.rank() < K) {
        // Columns permuted past the numerical rank are the dependent ones.
        std::vector<std::string> bad;
        const auto& perm = qr.colsPermutation().indices();
        for (Eigen::Index j = qr.rank(); j < K; ++j)
            bad.push_back(X.names[static_cast<std::size_t>(perm[j])]);
        throw RankDeficient(bad);
    }

    OlsFit fit;
    fit.names = X.names;
    fit.coefficients = qr.solve(y);
    fit.fitted = X.values * fit.coefficients;
    fit.residuals = y - fit.fitted;
    fit.rss = fit.residuals.squaredNorm();
    fit.dof = static_cast<long>(T - K);
    fit.sigma2 = fit.rss / static_cast<double>(fit.dof);

    // (X'X)^-1 from the R factor: X P = Q R, so (X'X)^-1 = P R^-1 R^-T P'.
    Eigen::MatrixXd r = qr.matrixR().topLeftCorner(K, K).triangularView<Eigen::Upper>();
    Eigen::MatrixXd r_inv =
        r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(K, K));
    Eigen::MatrixXd xtx_inv = r_inv * r_inv.transpose();
    const Eigen::MatrixXd perm = qr.colsPermutation();
    xtx_inv = perm * xtx_inv * perm.transpose();
    fit.coef_covariance = fit.sigma2 * xtx_inv;
    fit.coef_std_errors = fit.coef_covariance.diagonal().array().max(0.0).sqrt();

    for (Eigen::Index j = 0; j < K && !fit.has_intercept; ++j)
        fit.has_intercept = is_intercept_column(X.values.col(j));
    double tss;
    if (fit.has_intercept) {
        tss = (y.array() - y.mean()).matrix().squaredNorm();
    } else {
        tss = y.squaredNorm();
    }
    fit.r_squared = tss > 0.0 ? 1.0 - fit.rss / tss : 1.0;

    const double n = static_cast<double>(T);
    const double sigma2_ml = std::max(fit.rss, std::numeric_limits<double>::min()) / n;
    fit.log_likelihood = -0.5 * n * (std::log(2.0 * M_PI) + std::log(sigma2_ml) + 1.0);
    fit.aic = -2.0 * fit.log_likelihood + 2.0 * static_cast<double>(K);
    fit.bic = -2.0 * fit.log_likelihood + static_cast<double>(K) * std::log(n);
    return fit;
}

FStatResult f_from_rss(double rss_unrestricted, double rss_restricted, int num_restrictions,
                       long dof_denominator) {
    FStatResult out;
    out.num_restrictions = num_restrictions;
    out.dof_denominator = dof_denominator;
    const double num = (rss_restricted - rss_unrestricted) / num_restrictions;
    const double den = rss_unrestricted / static_cast<double>(dof_denominator);
    if (den <= 0.0) {
        out.f_value = num <= 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    } else {
        out.f_value = std::max(0.0, num / den);
    }
    out.p_value = dist::f_p_value(out.f_value, num_restrictions, static_cast<double>(dof_denominator));
    return out;
}

FStatResult wald_f(const OlsFit& fit, const DesignMatrix& X, const Eigen::VectorXd& y,
                   const std::vector<Eigen::Index>& restricted_columns) {
    if (restricted_columns.empty()) throw EmptyRestriction();
    DesignMatrix restricted = X.without_columns(restricted_columns);
    double rss_r;
    if (restricted.cols() == 0) {
        rss_r = y.squaredNorm();
    } else {
        rss_r = fit_ols(restricted, y).rss;
    }
    return f_from_rss(fit.rss, rss_r, static_cast<int>(restricted_columns.size()), fit.dof);
}

Eigen::VectorXd recursive_residuals(const DesignMatrix& X, const Eigen::VectorXd& y) {
    const Eigen::Index T = X.rows();
    const Eigen::Index K = X.cols();
    if (T != y.size()) throw DimensionMismatch("recursive_residuals: X/y row mismatch");
    if (T <= K) throw DimensionMismatch("recursive_residuals: need T > K");

    // Initialize on the shortest leading window with full column rank
    // (exactly K rows for a well-behaved design; indicator variables that
    // switch on late push the start out until they vary).
    Eigen::Index t0 = K;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr;
    while (true) {
        qr.compute(X.values.topRows(t0));
        qr.setThreshold(kRankTol);
        if (qr.rank() == K) break;
        if (++t0 >= T) {
            std::vector<std::string> bad;
            const auto& perm = qr.colsPermutation().indices();
            for (Eigen::Index j = qr.rank(); j < K; ++j)
                bad.push_back(X.names[static_cast<std::size_t>(perm[j])]);
            throw RankDeficient(bad);
        }
    }
    Eigen::VectorXd beta = qr.solve(y.head(t0));
    Eigen::MatrixXd r = qr.matrixR().topLeftCorner(K, K).triangularView<Eigen::Upper>();
    Eigen::MatrixXd r_inv = r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(K, K));
    Eigen::MatrixXd p_mat = r_inv * r_inv.transpose();
    const Eigen::MatrixXd perm = qr.colsPermutation();
    p_mat = perm * p_mat * perm.transpose();

    Eigen::VectorXd w(T - t0);
    for (Eigen::Index t = t0; t < T; ++t) {
        const Eigen::VectorXd x_t = X.values.row(t).transpose();
        const Eigen::VectorXd px = p_mat * x_t;
        const double f_t = 1.0 + x_t.dot(px);
        if (!(f_t > 0.0))
            throw RankDeficient({"recursive update became singular at row " + std::to_string(t)});
        const double err = y[t] - x_t.dot(beta);
        w[t - t0] = err / std::sqrt(f_t);
        const Eigen::VectorXd gain = px / f_t;
        beta += gain * err;
        p_mat -= gain * px.transpose();
        p_mat = 0.5 * (p_mat + p_mat.transpose()).eval();  // keep symmetric
    }
    return w;
}

std::pair<double, double> information_criteria(const OlsFit& fit) {
    return {fit.aic, fit.bic};
}

}  // namespace ardl
