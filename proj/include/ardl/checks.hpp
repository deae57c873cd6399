#pragma once

#include <string>
#include <vector>

#include "ardl/ols.hpp"

namespace ardl {

struct TestResult {
    std::string name;
    double statistic = 0.0;
    double p_value = 1.0;
    int dof = 0;

    /// Pass = the null of "no problem" is not rejected at 5%.
    [[nodiscard]] bool pass_at_5pct() const { return p_value > 0.05; }
};

enum class HetKind { BreuschPagan, Arch };

/// Breusch-Godfrey LM test for residual serial correlation up to `lags`.
/// Auxiliary regression of the residuals on X and their own lags
/// (pre-sample residuals zero-padded); statistic n R^2 ~ chi2(lags).
TestResult breusch_godfrey(const OlsFit& fit, const DesignMatrix& X, int lags = 12);

/// Breusch-Pagan (Koenker n R^2 form) or ARCH(q) heteroskedasticity LM test.
TestResult heteroskedasticity_test(const OlsFit& fit, const DesignMatrix& X,
                                   HetKind kind = HetKind::BreuschPagan, int arch_lags = 1);

/// Jarque-Bera normality test, chi2(2).
TestResult jarque_bera(const Eigen::VectorXd& residuals);

/// Ramsey RESET: F test of powers of the fitted values added to the design.
TestResult ramsey_reset(const OlsFit& fit, const DesignMatrix& X, const Eigen::VectorXd& y,
                        const std::vector<int>& powers = {2, 3});

struct StabilityResult {
    std::vector<double> path;            // indexed t = K+1..T
    std::vector<double> upper_boundary;
    std::vector<double> lower_boundary;
    bool within = true;                  // every point strictly between boundaries
    double level = 0.05;
};

/// CUSUM of recursive residuals with the Brown-Durbin-Evans straight-line
/// boundaries (a = 0.850 / 0.948 / 1.143 at 10/5/1%).
StabilityResult cusum(const DesignMatrix& X, const Eigen::VectorXd& y, double level = 0.05);

/// CUSUM of squared recursive residuals around the mean line
/// (t-K)/(T-K), with critical offsets from an embedded simulated quantile
/// table (see data/cusumsq_quantiles.txt for provenance).
StabilityResult cusumsq(const DesignMatrix& X, const Eigen::VectorXd& y, double level = 0.05);

/// Critical offset c0 for the CUSUM-of-squares test with n = T - K
/// recursive residuals; linear interpolation between tabulated sample sizes.
double cusumsq_critical(long n, double level);

}  // namespace ardl
