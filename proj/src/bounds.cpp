#include "ardl/bounds.hpp"

namespace ardl {

namespace {

// Asymptotic bounds transcribed from Pesaran, Shin & Smith (2001),
// "Bounds testing approaches to the analysis of level relationships",
// Tables CI(ii)-CI(v). Rows k = 0..10; per row the pairs are
// (I0, I1) at 10%, 5%, 2.5%, 1%. The same values ship as
// data/pss_bounds.txt; a unit test keeps the two in sync.
constexpr double kTableCaseII[11][8] = {
    {3.80, 3.80, 4.60, 4.60, 5.39, 5.39, 6.44, 6.44},
    {3.02, 3.51, 3.62, 4.16, 4.18, 4.79, 4.94, 5.58},
    {2.63, 3.35, 3.10, 3.87, 3.55, 4.38, 4.13, 5.00},
    {2.37, 3.20, 2.79, 3.67, 3.15, 4.08, 3.65, 4.66},
    {2.20, 3.09, 2.56, 3.49, 2.88, 3.87, 3.29, 4.37},
    {2.08, 3.00, 2.39, 3.38, 2.70, 3.73, 3.06, 4.15},
    {1.99, 2.94, 2.27, 3.28, 2.55, 3.61, 2.88, 3.99},
    {1.92, 2.89, 2.17, 3.21, 2.43, 3.51, 2.73, 3.90},
    {1.85, 2.85, 2.11, 3.15, 2.33, 3.42, 2.62, 3.77},
    {1.80, 2.80, 2.04, 3.08, 2.24, 3.35, 2.50, 3.68},
    {1.76, 2.77, 1.98, 3.04, 2.18, 3.28, 2.41, 3.61},
};

constexpr double kTableCaseIII[11][8] = {
    {6.58, 6.58, 8.21, 8.21, 9.80, 9.80, 11.79, 11.79},
    {4.04, 4.78, 4.94, 5.73, 5.77, 6.68, 6.84, 7.84},
    {3.17, 4.14, 3.79, 4.85, 4.41, 5.52, 5.15, 6.36},
    {2.72, 3.77, 3.23, 4.35, 3.69, 4.89, 4.29, 5.61},
    {2.45, 3.52, 2.86, 4.01, 3.25, 4.49, 3.74, 5.06},
    {2.26, 3.35, 2.62, 3.79, 2.96, 4.18, 3.41, 4.68},
    {2.12, 3.23, 2.45, 3.61, 2.75, 3.99, 3.15, 4.43},
    {2.03, 3.13, 2.32, 3.50, 2.60, 3.84, 2.96, 4.26},
    {1.95, 3.06, 2.22, 3.39, 2.48, 3.70, 2.79, 4.10},
    {1.88, 2.99, 2.14, 3.30, 2.37, 3.60, 2.65, 3.97},
    {1.83, 2.94, 2.06, 3.24, 2.28, 3.50, 2.54, 3.86},
};

constexpr double kTableCaseIV[11][8] = {
    {5.37, 5.37, 6.29, 6.29, 7.14, 7.14, 8.26, 8.26},
    {4.05, 4.49, 4.68, 5.15, 5.30, 5.83, 6.10, 6.73},
    {3.38, 4.02, 3.88, 4.61, 4.37, 5.16, 4.99, 5.85},
    {2.97, 3.74, 3.38, 4.23, 3.80, 4.68, 4.30, 5.23},
    {2.68, 3.53, 3.05, 3.97, 3.40, 4.36, 3.81, 4.92},
    {2.49, 3.38, 2.81, 3.76, 3.11, 4.13, 3.50, 4.63},
    {2.33, 3.25, 2.63, 3.62, 2.90, 3.94, 3.27, 4.39},
    {2.22, 3.17, 2.50, 3.50, 2.76, 3.81, 3.07, 4.23},
    {2.13, 3.09, 2.38, 3.41, 2.62, 3.70, 2.93, 4.06},
    {2.05, 3.02, 2.30, 3.33, 2.52, 3.60, 2.79, 3.93},
    {1.98, 2.97, 2.21, 3.25, 2.42, 3.52, 2.68, 3.84},
};

constexpr double kTableCaseV[11][8] = {
    {9.81, 9.81, 11.64, 11.64, 13.36, 13.36, 15.73, 15.73},
    {5.59, 6.26, 6.56, 7.30, 7.46, 8.27, 8.74, 9.63},
    {4.19, 5.06, 4.87, 5.85, 5.49, 6.59, 6.34, 7.52},
    {3.47, 4.45, 4.01, 5.07, 4.52, 5.62, 5.17, 6.36},
    {3.03, 4.06, 3.47, 4.57, 3.89, 5.07, 4.40, 5.72},
    {2.75, 3.79, 3.12, 4.25, 3.47, 4.67, 3.93, 5.23},
    {2.53, 3.59, 2.87, 4.00, 3.19, 4.38, 3.60, 4.90},
    {2.38, 3.45, 2.69, 3.83, 2.98, 4.16, 3.34, 4.63},
    {2.26, 3.34, 2.55, 3.68, 2.82, 4.02, 3.15, 4.43},
    {2.16, 3.24, 2.43, 3.56, 2.67, 3.87, 2.97, 4.24},
    {2.07, 3.16, 2.33, 3.46, 2.56, 3.76, 2.84, 4.10},
};

int level_offset(double level) {
    if (level == 0.10) return 0;
    if (level == 0.05) return 2;
    if (level == 0.025) return 4;
    if (level == 0.01) return 6;
    return -1;
}

}  // namespace

BoundsPair pss_critical(int k, BoundsCase which_case, double level) {
    const int off = level_offset(level);
    if (k < 0 || k > 10 || off < 0)
        throw UnsupportedCombination("k = " + std::to_string(k) + ", level " +
                                     std::to_string(level));
    const double(*table)[8] = nullptr;
    switch (which_case) {
        case BoundsCase::II: table = kTableCaseII; break;
        case BoundsCase::III: table = kTableCaseIII; break;
        case BoundsCase::IV: table = kTableCaseIV; break;
        case BoundsCase::V: table = kTableCaseV; break;
    }
    return {table[k][off], table[k][off + 1]};
}

FStatResult bounds_f(const CecmFit& c) {
    std::vector<Eigen::Index> restricted;
    restricted.push_back(c.idx_dep_level);
    for (Eigen::Index idx : c.idx_reg_levels) restricted.push_back(idx);
    return wald_f(c.fit, c.X, c.y, restricted);
}

CointDecision decide(double f, const BoundsPair& bounds) {
    if (bounds.i0 > bounds.i1) throw InvalidBounds(bounds.i0, bounds.i1);
    if (f > bounds.i1) return CointDecision::Cointegrated;
    if (f < bounds.i0) return CointDecision::NotCointegrated;
    return CointDecision::Inconclusive;
}

BoundsResult bounds_test(const CecmFit& c, BoundsCase which_case) {
    BoundsResult out;
    const FStatResult f = bounds_f(c);
    out.f_statistic = f.f_value;
    out.num_restrictions = f.num_restrictions;
    out.dof_denominator = f.dof_denominator;
    out.k = static_cast<int>(c.idx_reg_levels.size());
    out.which_case = which_case;
    for (double level : {0.10, 0.05, 0.025, 0.01}) {
        const BoundsPair pair = pss_critical(out.k, which_case, level);
        out.bounds[level] = pair;
        out.decisions[level] = decide(out.f_statistic, pair);
    }
    return out;
}

std::string to_string(BoundsCase c) {
    switch (c) {
        case BoundsCase::II: return "II";
        case BoundsCase::III: return "III";
        case BoundsCase::IV: return "IV";
        case BoundsCase::V: return "V";
    }
    return "?";
}

std::string to_string(CointDecision d) {
    switch (d) {
        case CointDecision::Cointegrated: return "Cointegrated";
        case CointDecision::NotCointegrated: return "NotCointegrated";
        case CointDecision::Inconclusive: return "Inconclusive";
    }
    return "?";
}

}  // namespace ardl
