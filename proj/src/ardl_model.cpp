#include "ardl/ardl_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ardl/dist.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ardl {

namespace {

Eigen::VectorXd level_column(const std::vector<double>& v, int offset, int lag, int n) {
    Eigen::VectorXd col(n);
    for (int i = 0; i < n; ++i) col[i] = v[static_cast<std::size_t>(offset + i - lag)];
    return col;
}

Eigen::VectorXd diff_column(const std::vector<double>& v, int offset, int lag, int n) {
    Eigen::VectorXd col(n);
    for (int i = 0; i < n; ++i) {
        const std::size_t t = static_cast<std::size_t>(offset + i - lag);
        col[i] = v[t] - v[t - 1];
    }
    return col;
}

std::string lag_name(const std::string& base, int lag) {
    return lag > 0 ? base + "(-" + std::to_string(lag) + ")" : base;
}

void add_deterministics(DesignMatrix& X, const ModelSpec& spec, int offset, int n,
                        Eigen::Index& idx_intercept, Eigen::Index& idx_trend) {
    if (spec.intercept) {
        idx_intercept = X.cols();
        X.add_column("const", Eigen::VectorXd::Ones(n));
    }
    if (spec.trend) {
        Eigen::VectorXd tr(n);
        for (int i = 0; i < n; ++i) tr[i] = static_cast<double>(offset + i + 1);
        idx_trend = X.cols();
        X.add_column("trend", tr);
    }
}

int max_fixed_lag(const ModelSpec& spec) {
    int m = 0;
    for (const auto& f : spec.fixed_regressors) m = std::max(m, f.lags);
    return m;
}

Eigen::Index deterministic_cols(const ModelSpec& spec) {
    return (spec.intercept ? 1 : 0) + (spec.trend ? 1 : 0);
}

struct Candidate {
    double value = std::numeric_limits<double>::infinity();
    int total = 0;
    std::uint64_t index = 0;

    // Strict total order: criterion value, then parameter count, then the
    // lexicographic (p, q...) position encoded in the index.
    [[nodiscard]] bool better_than(const Candidate& o) const {
        if (value != o.value) return value < o.value;
        if (total != o.total) return total < o.total;
        return index < o.index;
    }
};

}  // namespace

void ModelSpec::validate(const Dataset& d) const {
    if (dependent.empty()) throw InvalidConfig("no dependent variable");
    if (!d.contains(dependent)) throw UnknownSeries(dependent);
    for (const auto& r : regressors) {
        if (r == dependent) throw InvalidConfig("dependent '" + r + "' also listed as regressor");
        if (!d.contains(r)) throw UnknownSeries(r);
    }
    for (const auto& f : fixed_regressors) {
        if (!d.contains(f.name)) throw UnknownSeries(f.name);
        if (f.lags < 0) throw InvalidConfig("negative lag depth for '" + f.name + "'");
        if (f.name == dependent) throw InvalidConfig("dependent cannot be a fixed regressor");
    }
    if (max_lag < 1) throw InvalidConfig("max_lag must be at least 1");
}

int ArdlOrder::total_lag_terms() const {
    int total = p;
    for (int qi : q) total += qi + 1;
    return total;
}

std::string ArdlOrder::to_string() const {
    std::string s = "(" + std::to_string(p);
    for (int qi : q) s += "," + std::to_string(qi);
    return s + ")";
}

ArdlFit fit_ardl(const Dataset& d, const ModelSpec& spec, const ArdlOrder& order) {
    spec.validate(d);
    if (order.p < 1 || order.p > spec.max_lag)
        throw InvalidConfig("dependent lag order " + std::to_string(order.p) +
                            " outside 1.." + std::to_string(spec.max_lag));
    if (order.q.size() != spec.regressors.size())
        throw InvalidConfig("order has " + std::to_string(order.q.size()) + " q entries for " +
                            std::to_string(spec.regressors.size()) + " regressors");
    for (int qi : order.q)
        if (qi < 0 || qi > spec.max_lag)
            throw InvalidConfig("regressor lag order " + std::to_string(qi) + " outside 0.." +
                                std::to_string(spec.max_lag));

    ArdlFit out;
    out.spec = spec;
    out.order = order;
    out.data.add(d.at(spec.dependent));
    for (const auto& r : spec.regressors) out.data.add(d.at(r));
    for (const auto& f : spec.fixed_regressors)
        if (!out.data.contains(f.name)) out.data.add(d.at(f.name));

    int offset = std::max(order.p, 1);
    for (int qi : order.q) offset = std::max(offset, qi);
    offset = std::max(offset, max_fixed_lag(spec));
    out.offset = offset;
    const int n = static_cast<int>(d.length()) - offset;
    const Eigen::Index cols = deterministic_cols(spec) + order.total_lag_terms() +
                              [&] {
                                  Eigen::Index c = 0;
                                  for (const auto& f : spec.fixed_regressors) c += f.lags + 1;
                                  return c;
                              }();
    if (n <= cols)
        throw InsufficientSample("ARDL" + order.to_string() + " needs more than " +
                                 std::to_string(offset + cols) + " observations, have " +
                                 std::to_string(d.length()));
    out.sample_start = d.start().plus_months(offset);

    const auto& dep = out.data.at(spec.dependent).values;
    add_deterministics(out.X, spec, offset, n, out.idx_intercept, out.idx_trend);
    for (int i = 1; i <= order.p; ++i) {
        out.idx_dep_lags.push_back(out.X.cols());
        out.X.add_column(lag_name(spec.dependent, i), level_column(dep, offset, i, n));
    }
    for (std::size_t j = 0; j < spec.regressors.size(); ++j) {
        const auto& reg = out.data.at(spec.regressors[j]).values;
        std::vector<Eigen::Index> idx;
        for (int l = 0; l <= order.q[j]; ++l) {
            idx.push_back(out.X.cols());
            out.X.add_column(lag_name(spec.regressors[j], l), level_column(reg, offset, l, n));
        }
        out.idx_reg_lags.push_back(std::move(idx));
    }
    for (const auto& f : spec.fixed_regressors) {
        const auto& fx = out.data.at(f.name).values;
        std::vector<Eigen::Index> idx;
        for (int l = 0; l <= f.lags; ++l) {
            idx.push_back(out.X.cols());
            out.X.add_column(lag_name(f.name, l), level_column(fx, offset, l, n));
        }
        out.idx_fixed_lags.push_back(std::move(idx));
    }

    out.y = level_column(dep, offset, 0, n);
    out.fit = fit_ols(out.X, out.y);
    return out;
}

ArdlOrder select_order(const Dataset& d, const ModelSpec& spec, Execution exec,
                       std::size_t grid_cap) {
    spec.validate(d);
    const int N = spec.max_lag;
    const std::size_t k = spec.regressors.size();

    std::uint64_t grid = static_cast<std::uint64_t>(N);
    for (std::size_t j = 0; j < k; ++j) {
        if (grid > grid_cap || grid > UINT64_MAX / static_cast<std::uint64_t>(N + 1)) {
            grid = grid_cap + 1;
            break;
        }
        grid *= static_cast<std::uint64_t>(N + 1);
    }
    if (grid > grid_cap) throw GridTooLarge(grid, grid_cap);

    const int offset = std::max({N, max_fixed_lag(spec), 1});
    const int n = static_cast<int>(d.length()) - offset;
    Eigen::Index max_cols = deterministic_cols(spec) + N + static_cast<Eigen::Index>(k) * (N + 1);
    for (const auto& f : spec.fixed_regressors) max_cols += f.lags + 1;
    if (n <= max_cols)
        throw InsufficientSample("grid search at max_lag " + std::to_string(N) + " needs more than " +
                                 std::to_string(offset + max_cols) + " observations, have " +
                                 std::to_string(d.length()));

    // One full design holding every candidate column; candidates fit subsets.
    DesignMatrix full;
    Eigen::Index idx_intercept = -1, idx_trend = -1;
    add_deterministics(full, spec, offset, n, idx_intercept, idx_trend);
    const auto& dep = d.at(spec.dependent).values;
    std::vector<Eigen::Index> dep_cols;
    for (int i = 1; i <= N; ++i) {
        dep_cols.push_back(full.cols());
        full.add_column(lag_name(spec.dependent, i), level_column(dep, offset, i, n));
    }
    std::vector<std::vector<Eigen::Index>> reg_cols(k);
    for (std::size_t j = 0; j < k; ++j) {
        const auto& reg = d.at(spec.regressors[j]).values;
        for (int l = 0; l <= N; ++l) {
            reg_cols[j].push_back(full.cols());
            full.add_column(lag_name(spec.regressors[j], l), level_column(reg, offset, l, n));
        }
    }
    std::vector<Eigen::Index> fixed_cols;
    for (const auto& f : spec.fixed_regressors) {
        const auto& fx = d.at(f.name).values;
        for (int l = 0; l <= f.lags; ++l) {
            fixed_cols.push_back(full.cols());
            full.add_column(lag_name(f.name, l), level_column(fx, offset, l, n));
        }
    }
    const Eigen::VectorXd y = level_column(dep, offset, 0, n);

    std::uint64_t pow_k = 1;
    for (std::size_t j = 0; j < k; ++j) pow_k *= static_cast<std::uint64_t>(N + 1);
    const std::uint64_t n_candidates = static_cast<std::uint64_t>(N) * pow_k;

    auto decode = [&](std::uint64_t idx, int& p, std::vector<int>& q) {
        p = 1 + static_cast<int>(idx / pow_k);
        std::uint64_t rem = idx % pow_k;
        std::uint64_t base = pow_k;
        q.resize(k);
        for (std::size_t j = 0; j < k; ++j) {
            base /= static_cast<std::uint64_t>(N + 1);
            q[j] = static_cast<int>(rem / base);
            rem %= base;
        }
    };

    auto evaluate = [&](std::uint64_t idx) -> Candidate {
        int p;
        std::vector<int> q;
        decode(idx, p, q);
        std::vector<Eigen::Index> cols;
        if (idx_intercept >= 0) cols.push_back(idx_intercept);
        if (idx_trend >= 0) cols.push_back(idx_trend);
        for (int i = 0; i < p; ++i) cols.push_back(dep_cols[static_cast<std::size_t>(i)]);
        for (std::size_t j = 0; j < k; ++j)
            for (int l = 0; l <= q[j]; ++l)
                cols.push_back(reg_cols[j][static_cast<std::size_t>(l)]);
        for (Eigen::Index c : fixed_cols) cols.push_back(c);

        DesignMatrix sub;
        sub.values.resize(n, static_cast<Eigen::Index>(cols.size()));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            sub.values.col(static_cast<Eigen::Index>(c)) = full.values.col(cols[c]);
            sub.names.push_back(full.names[static_cast<std::size_t>(cols[c])]);
        }
        Candidate cand;
        cand.index = idx;
        cand.total = p;
        for (int qi : q) cand.total += qi + 1;
        try {
            OlsFit fit = fit_ols(sub, y);
            cand.value = spec.criterion == Criterion::Aic ? fit.aic : fit.bic;
        } catch (const RankDeficient&) {
            // candidate excluded; value stays +inf
        }
        return cand;
    };

    Candidate best;
    bool have_best = false;
    if (exec == Execution::Parallel) {
#ifdef _OPENMP
#pragma omp parallel
        {
            Candidate local;
            bool have_local = false;
#pragma omp for schedule(static)
            for (long long i = 0; i < static_cast<long long>(n_candidates); ++i) {
                Candidate c = evaluate(static_cast<std::uint64_t>(i));
                if (!have_local || c.better_than(local)) {
                    local = c;
                    have_local = true;
                }
            }
#pragma omp critical
            if (have_local && (!have_best || local.better_than(best))) {
                best = local;
                have_best = true;
            }
        }
#else
        exec = Execution::Serial;
#endif
    }
    if (exec == Execution::Serial) {
        for (std::uint64_t i = 0; i < n_candidates; ++i) {
            Candidate c = evaluate(i);
            if (!have_best || c.better_than(best)) {
                best = c;
                have_best = true;
            }
        }
    }
    if (!have_best || std::isinf(best.value))
        throw RankDeficient({"every candidate order was rank deficient"});

    ArdlOrder order;
    order.q.resize(k);
    decode(best.index, order.p, order.q);
    return order;
}

CecmFit to_cecm(const ArdlFit& f) {
    CecmFit out;
    out.spec = f.spec;
    out.order = f.order;
    out.data = f.data;
    out.offset = f.offset;
    out.sample_start = f.sample_start;

    const int n = static_cast<int>(f.y.size());
    const int offset = f.offset;
    const auto& dep = f.data.at(f.spec.dependent).values;

    add_deterministics(out.X, f.spec, offset, n, out.idx_intercept, out.idx_trend);

    out.idx_dep_level = out.X.cols();
    out.X.add_column(lag_name(f.spec.dependent, 1), level_column(dep, offset, 1, n));
    for (std::size_t j = 0; j < f.spec.regressors.size(); ++j) {
        const auto& reg = f.data.at(f.spec.regressors[j]).values;
        out.idx_reg_levels.push_back(out.X.cols());
        // With q_j = 0 the regressor enters only contemporaneously, so its
        // level term is the current value; the reparameterization stays exact.
        const int level_lag = f.order.q[j] >= 1 ? 1 : 0;
        out.X.add_column(lag_name(f.spec.regressors[j], level_lag),
                         level_column(reg, offset, level_lag, n));
    }
    for (int i = 1; i <= f.order.p - 1; ++i) {
        out.idx_diff_terms.push_back(out.X.cols());
        out.X.add_column("d." + lag_name(f.spec.dependent, i), diff_column(dep, offset, i, n));
    }
    for (std::size_t j = 0; j < f.spec.regressors.size(); ++j) {
        const auto& reg = f.data.at(f.spec.regressors[j]).values;
        for (int l = 0; l <= f.order.q[j] - 1; ++l) {
            out.idx_diff_terms.push_back(out.X.cols());
            out.X.add_column("d." + lag_name(f.spec.regressors[j], l),
                             diff_column(reg, offset, l, n));
        }
    }
    for (const auto& fx : f.spec.fixed_regressors) {
        const auto& v = f.data.at(fx.name).values;
        for (int l = 0; l <= fx.lags; ++l) {
            out.idx_fixed_terms.push_back(out.X.cols());
            out.X.add_column(lag_name(fx.name, l), level_column(v, offset, l, n));
        }
    }

    out.y = diff_column(dep, offset, 0, n);
    out.fit = fit_ols(out.X, out.y);
    return out;
}

namespace {

LongRunCoefficient delta_method_ratio(const CecmFit& c, Eigen::Index idx_num,
                                      const std::string& name) {
    const double b1 = c.fit.coefficients[c.idx_dep_level];
    const double bj = c.fit.coefficients[idx_num];
    LongRunCoefficient out;
    out.name = name;
    out.estimate = -bj / b1;
    // theta = -bj/b1: d/dbj = -1/b1, d/db1 = bj/b1^2
    const double g_num = -1.0 / b1;
    const double g_b1 = bj / (b1 * b1);
    const auto& V = c.fit.coef_covariance;
    const double var = g_num * g_num * V(idx_num, idx_num) + g_b1 * g_b1 * V(c.idx_dep_level, c.idx_dep_level) +
                       2.0 * g_num * g_b1 * V(idx_num, c.idx_dep_level);
    out.std_error = std::sqrt(std::max(var, 0.0));
    out.p_value = out.std_error > 0.0
                      ? dist::t_p_value_two_sided(out.estimate / out.std_error,
                                                  static_cast<double>(c.fit.dof))
                      : 0.0;
    return out;
}

}  // namespace

LongRunResult long_run(const CecmFit& c) {
    const double b1 = c.fit.coefficients[c.idx_dep_level];
    if (std::fabs(b1) <= 1e-12) throw DegenerateAdjustment();
    LongRunResult out;
    out.dof = c.fit.dof;
    for (std::size_t j = 0; j < c.spec.regressors.size(); ++j)
        out.coefficients.push_back(
            delta_method_ratio(c, c.idx_reg_levels[j], c.spec.regressors[j]));
    if (c.idx_intercept >= 0)
        out.intercept = delta_method_ratio(c, c.idx_intercept, "const");
    if (c.idx_trend >= 0) out.trend = delta_method_ratio(c, c.idx_trend, "trend");
    return out;
}

EcmResult ecm_restricted(const CecmFit& c, const LongRunResult& lr) {
    if (lr.coefficients.size() != c.idx_reg_levels.size())
        throw DimensionMismatch("long-run result does not match the conditional ECM");

    const int n = static_cast<int>(c.y.size());
    Eigen::VectorXd ect = c.X.values.col(c.idx_dep_level);
    for (std::size_t j = 0; j < c.idx_reg_levels.size(); ++j)
        ect -= lr.coefficients[j].estimate * c.X.values.col(c.idx_reg_levels[j]);

    DesignMatrix X;
    X.values.resize(n, 0);
    if (c.idx_intercept >= 0) X.add_column("const", c.X.values.col(c.idx_intercept));
    if (c.idx_trend >= 0) X.add_column("trend", c.X.values.col(c.idx_trend));
    for (Eigen::Index idx : c.idx_diff_terms)
        X.add_column(c.X.names[static_cast<std::size_t>(idx)], c.X.values.col(idx));
    for (Eigen::Index idx : c.idx_fixed_terms)
        X.add_column(c.X.names[static_cast<std::size_t>(idx)], c.X.values.col(idx));
    const Eigen::Index ect_idx = X.cols();
    X.add_column("ECT(-1)", ect);

    OlsFit fit = fit_ols(X, c.y);

    EcmResult out;
    out.dof = fit.dof;
    out.r_squared = fit.r_squared;
    out.ect_coefficient = fit.coefficients[ect_idx];
    out.ect_std_error = fit.coef_std_errors[ect_idx];
    out.ect_p_value = fit.p_value(ect_idx);
    for (Eigen::Index i = 0; i < ect_idx; ++i)
        out.short_run.push_back({fit.names[static_cast<std::size_t>(i)], fit.coefficients[i],
                                 fit.coef_std_errors[i], fit.p_value(i)});
    return out;
}

std::string significance_stars(double p_value) {
    if (p_value <= 0.01) return "***";
    if (p_value <= 0.05) return "**";
    if (p_value <= 0.10) return "*";
    return "";
}

}  // namespace ardl
