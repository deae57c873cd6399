#pragma once

namespace ardl::dist {

/// Regularized incomplete beta I_x(a, b), continued-fraction evaluation
/// (Lentz), accurate to ~1e-14 for a, b in the ranges used by t/F tests.
double incomplete_beta(double a, double b, double x);

/// Regularized lower incomplete gamma P(a, x).
double incomplete_gamma_lower(double a, double x);
/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double incomplete_gamma_upper(double a, double x);

/// Standard normal CDF.
double normal_cdf(double x);
/// Standard normal quantile (inverse CDF), full double precision.
double normal_quantile(double p);

/// P(F(d1, d2) > f) — upper tail of the F distribution.
double f_p_value(double f, double d1, double d2);

/// P(chi2(k) > x) — upper tail of the chi-square distribution.
double chi2_p_value(double x, double k);

/// Two-sided p-value of a t statistic with `dof` degrees of freedom.
double t_p_value_two_sided(double t, double dof);

}  // namespace ardl::dist
