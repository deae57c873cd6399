#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "ardl/errors.hpp"

namespace ardl {

/// Named regression design, T observations by K regressors.
struct DesignMatrix {
    Eigen::MatrixXd values;
    std::vector<std::string> names;

    [[nodiscard]] Eigen::Index rows() const { return values.rows(); }
    [[nodiscard]] Eigen::Index cols() const { return values.cols(); }

    void add_column(const std::string& name, const Eigen::VectorXd& col);
    [[nodiscard]] Eigen::Index column(const std::string& name) const;  // -1 when absent
    [[nodiscard]] DesignMatrix without_columns(const std::vector<Eigen::Index>& drop) const;
};

struct OlsFit {
    std::vector<std::string> names;
    Eigen::VectorXd coefficients;
    Eigen::VectorXd coef_std_errors;
    Eigen::VectorXd residuals;
    Eigen::VectorXd fitted;
    Eigen::MatrixXd coef_covariance;  // sigma2 * (X'X)^-1
    double rss = 0.0;
    double sigma2 = 0.0;       // rss / (T - K)
    double r_squared = 0.0;
    double log_likelihood = 0.0;  // Gaussian, ML variance rss/T
    double aic = 0.0;          // -2 ll + 2K
    double bic = 0.0;          // -2 ll + K ln T
    long dof = 0;              // T - K
    bool has_intercept = false;

    [[nodiscard]] double t_stat(Eigen::Index i) const {
        return coefficients[i] / coef_std_errors[i];
    }
    [[nodiscard]] double p_value(Eigen::Index i) const;
};

struct FStatResult {
    double f_value = 0.0;
    int num_restrictions = 0;
    long dof_denominator = 0;
    double p_value = 1.0;
};

/// Least squares by rank-revealing Householder QR. Throws RankDeficient when
/// the relative diagonal ratio of R drops below 1e-10, DimensionMismatch on
/// shape errors. R^2 uses centered total variation when an intercept-like
/// (constant, nonzero) column is present, uncentered otherwise.
OlsFit fit_ols(const DesignMatrix& X, const Eigen::VectorXd& y);

/// F test that the coefficients of `restricted_columns` are jointly zero:
/// F = [(RSS_r - RSS_u)/m] / [RSS_u/(T-K)], the restricted model refit with
/// those columns deleted.
FStatResult wald_f(const OlsFit& fit, const DesignMatrix& X, const Eigen::VectorXd& y,
                   const std::vector<Eigen::Index>& restricted_columns);

/// F statistic from the two-regression sums of squares.
FStatResult f_from_rss(double rss_unrestricted, double rss_restricted, int num_restrictions,
                       long dof_denominator);

/// Standardized one-step-ahead prediction errors w_t for t = K+1..T
/// (Brown, Durbin & Evans 1975). Under a stable Gaussian model they are
/// i.i.d. N(0, sigma^2) and sum(w^2) equals the full-sample RSS. When the
/// leading K rows are rank deficient (an indicator that switches on later),
/// the recursion starts at the shortest full-rank window instead and the
/// result is correspondingly shorter.
Eigen::VectorXd recursive_residuals(const DesignMatrix& X, const Eigen::VectorXd& y);

/// (aic, bic) of a fit, exposed for lag-order grid searches.
std::pair<double, double> information_criteria(const OlsFit& fit);

}  // namespace ardl
