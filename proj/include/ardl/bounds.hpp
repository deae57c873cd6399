#pragma once

#include <map>
#include <string>
#include <vector>

#include "ardl/ardl_model.hpp"

namespace ardl {

/// Deterministic-term configuration of the bounds test, Pesaran, Shin &
/// Smith (2001) cases II-V. Case III (unrestricted intercept, no trend) is
/// the default.
enum class BoundsCase { II, III, IV, V };

enum class CointDecision { Cointegrated, NotCointegrated, Inconclusive };

struct BoundsPair {
    double i0 = 0.0;  // all-I(0) lower bound
    double i1 = 0.0;  // all-I(1) upper bound
};

struct BoundsResult {
    double f_statistic = 0.0;
    int k = 0;  // level regressors under the null, excluding the dependent
    BoundsCase which_case = BoundsCase::III;
    std::map<double, BoundsPair> bounds;          // level -> pair
    std::map<double, CointDecision> decisions;    // level -> verdict
    int num_restrictions = 0;
    long dof_denominator = 0;
};

/// F statistic for joint nullity of every lagged-level coefficient in the
/// conditional ECM (the dependent's level plus all k regressor levels).
FStatResult bounds_f(const CecmFit& c);

/// Asymptotic critical bounds transcribed from Pesaran, Shin & Smith (2001),
/// Tables CI(ii)-CI(v), k in 0..10, level in {0.01, 0.025, 0.05, 0.10}.
/// At k = 0 the two bounds coincide. Throws UnsupportedCombination.
BoundsPair pss_critical(int k, BoundsCase which_case, double level);

/// Three-way decision rule: above the upper bound rejects no-cointegration,
/// below the lower bound accepts it, inside (boundary values included) is
/// inconclusive. Throws InvalidBounds when i0 > i1.
CointDecision decide(double f, const BoundsPair& bounds);

/// Full bounds test at every tabulated level.
BoundsResult bounds_test(const CecmFit& c, BoundsCase which_case = BoundsCase::III);

std::string to_string(BoundsCase c);
std::string to_string(CointDecision d);

}  // namespace ardl
