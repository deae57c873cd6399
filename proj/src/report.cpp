#include "ardl/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ardl/rng.hpp"

namespace ardl {

using nlohmann::json;

namespace {

std::string format_double(double v, const char* fmt = "%.6g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MissingFile(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Criterion criterion_from_string(const std::string& s) {
    if (s == "aic") return Criterion::Aic;
    if (s == "bic") return Criterion::Bic;
    throw InvalidConfig("criterion must be 'aic' or 'bic', got '" + s + "'");
}

std::string criterion_to_string(Criterion c) { return c == Criterion::Aic ? "aic" : "bic"; }

Deterministic deterministic_from_string(const std::string& s) {
    if (s == "none") return Deterministic::None;
    if (s == "constant") return Deterministic::Constant;
    if (s == "constant+trend") return Deterministic::ConstantTrend;
    throw InvalidConfig("deterministic must be none|constant|constant+trend, got '" + s + "'");
}

std::string deterministic_to_string(Deterministic d) {
    switch (d) {
        case Deterministic::None: return "none";
        case Deterministic::Constant: return "constant";
        case Deterministic::ConstantTrend: return "constant+trend";
    }
    return "?";
}

BoundsCase bounds_case_from_string(const std::string& s) {
    if (s == "II") return BoundsCase::II;
    if (s == "III") return BoundsCase::III;
    if (s == "IV") return BoundsCase::IV;
    if (s == "V") return BoundsCase::V;
    throw InvalidConfig("bounds case must be II|III|IV|V, got '" + s + "'");
}

LagSelection selection_from_string(const std::string& s) {
    if (s == "aic") return LagSelection::aic();
    if (s == "bic") return LagSelection::bic();
    if (s.rfind("fixed:", 0) == 0) return LagSelection::fixed_order(std::stoi(s.substr(6)));
    throw InvalidConfig("selection must be aic|bic|fixed:<p>, got '" + s + "'");
}

std::string selection_to_string(const LagSelection& s) {
    switch (s.mode) {
        case LagSelection::Mode::Aic: return "aic";
        case LagSelection::Mode::Bic: return "bic";
        case LagSelection::Mode::Fixed: return "fixed:" + std::to_string(s.fixed);
    }
    return "?";
}

}  // namespace

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// ---- configuration ----------------------------------------------------------

PipelineConfig PipelineConfig::from_json_file(const std::string& path) {
    return from_json_text(read_file(path), path);
}

PipelineConfig PipelineConfig::from_json_text(const std::string& text,
                                              const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidConfig(origin + ": " + e.what());
    }
    try {
        PipelineConfig cfg;
        cfg.data_path = j.at("data").get<std::string>();
        cfg.date_column = j.value("date_column", std::string("date"));

        if (j.contains("construct")) {
            const json& c = j["construct"];
            for (const json& r : c.value("ratios", json::array()))
                cfg.ratios.push_back({r.at("name").get<std::string>(),
                                      r.at("numerator").get<std::string>(),
                                      r.at("denominator").get<std::string>()});
            for (const json& d : c.value("dummies", json::array())) {
                PipelineConfig::DummyDef def;
                def.name = d.at("name").get<std::string>();
                if (d.contains("regime_from")) {
                    def.rule = RegimeFrom{TimePoint::parse(d["regime_from"].get<std::string>())};
                } else if (d.contains("event_months")) {
                    EventMonths ev;
                    for (const json& m : d["event_months"])
                        ev.months.push_back(TimePoint::parse(m.get<std::string>()));
                    def.rule = ev;
                } else {
                    throw InvalidConfig("dummy '" + def.name +
                                        "' needs regime_from or event_months");
                }
                cfg.dummies.push_back(std::move(def));
            }
        }
        for (const json& v : j.value("log", json::array()))
            cfg.log_vars.push_back(v.get<std::string>());

        const json& m = j.at("model");
        cfg.model.dependent = m.at("dependent").get<std::string>();
        for (const json& r : m.at("regressors")) cfg.model.regressors.push_back(r.get<std::string>());
        for (const json& f : m.value("fixed", json::array()))
            cfg.model.fixed_regressors.push_back(
                {f.at("name").get<std::string>(), f.value("lags", 0)});
        cfg.model.max_lag = m.value("max_lag", 3);
        cfg.model.criterion = criterion_from_string(m.value("criterion", std::string("aic")));
        cfg.model.intercept = m.value("intercept", true);
        cfg.model.trend = m.value("trend", false);

        for (const json& p : j.value("psi_candidates", json::array()))
            cfg.psi_candidates.push_back(p.get<std::string>());

        if (j.contains("bounds")) {
            cfg.bounds_case = bounds_case_from_string(j["bounds"].value("case", std::string("III")));
            cfg.h0_with_dummies = j["bounds"].value("h0_with_dummies", false);
        }
        if (j.contains("adf")) {
            const json& a = j["adf"];
            cfg.adf.deterministic =
                deterministic_from_string(a.value("deterministic", std::string("constant")));
            cfg.adf.selection = selection_from_string(a.value("selection", std::string("aic")));
            cfg.adf.max_lag = a.value("max_lag", -1);
            cfg.adf.level = a.value("level", 0.05);
            for (const json& v : a.value("variables", json::array()))
                cfg.adf.variables.push_back(v.get<std::string>());
        }
        if (j.contains("diagnostics")) {
            const json& d = j["diagnostics"];
            cfg.diagnostics.bg_lags = d.value("bg_lags", 12);
            const std::string het = d.value("het", std::string("bp"));
            if (het == "bp") cfg.diagnostics.het = HetKind::BreuschPagan;
            else if (het == "arch") cfg.diagnostics.het = HetKind::Arch;
            else throw InvalidConfig("het must be 'bp' or 'arch'");
            cfg.diagnostics.arch_lags = d.value("arch_lags", 1);
            if (d.contains("reset_powers")) {
                cfg.diagnostics.reset_powers.clear();
                for (const json& p : d["reset_powers"])
                    cfg.diagnostics.reset_powers.push_back(p.get<int>());
            }
        }
        if (j.contains("stability")) cfg.stability_level = j["stability"].value("level", 0.05);
        if (j.contains("forecast")) {
            const json& f = j["forecast"];
            cfg.forecast.horizon = f.value("horizon", 0);
            cfg.forecast.scenario = f.value("scenario", std::string("hold-last"));
            if (f.contains("drift"))
                for (auto it = f["drift"].begin(); it != f["drift"].end(); ++it)
                    cfg.forecast.drift[it.key()] = it.value().get<double>();
        }
        cfg.seed = j.value("seed", 0ULL);
        cfg.out_dir = j.value("out", std::string("."));
        return cfg;
    } catch (const json::exception& e) {
        throw InvalidConfig(origin + ": " + e.what());
    }
}

std::string PipelineConfig::canonical_json() const {
    json j;
    j["data"] = data_path;
    j["date_column"] = date_column;
    json ratios_j = json::array();
    for (const auto& r : ratios)
        ratios_j.push_back({{"name", r.name}, {"numerator", r.numerator},
                            {"denominator", r.denominator}});
    json dummies_j = json::array();
    for (const auto& d : dummies) {
        json dj{{"name", d.name}};
        if (const auto* reg = std::get_if<RegimeFrom>(&d.rule)) {
            dj["regime_from"] = reg->threshold.to_string();
        } else {
            json months = json::array();
            for (const auto& m : std::get<EventMonths>(d.rule).months)
                months.push_back(m.to_string());
            dj["event_months"] = months;
        }
        dummies_j.push_back(dj);
    }
    j["construct"] = {{"ratios", ratios_j}, {"dummies", dummies_j}};
    j["log"] = log_vars;
    json fixed_j = json::array();
    for (const auto& f : model.fixed_regressors)
        fixed_j.push_back({{"name", f.name}, {"lags", f.lags}});
    j["model"] = {{"dependent", model.dependent}, {"regressors", model.regressors},
                  {"fixed", fixed_j},             {"max_lag", model.max_lag},
                  {"criterion", criterion_to_string(model.criterion)},
                  {"intercept", model.intercept}, {"trend", model.trend}};
    j["psi_candidates"] = psi_candidates;
    j["bounds"] = {{"case", to_string(bounds_case)}, {"h0_with_dummies", h0_with_dummies}};
    j["adf"] = {{"deterministic", deterministic_to_string(adf.deterministic)},
                {"selection", selection_to_string(adf.selection)},
                {"max_lag", adf.max_lag},
                {"level", adf.level},
                {"variables", adf.variables}};
    j["diagnostics"] = {{"bg_lags", diagnostics.bg_lags},
                        {"het", diagnostics.het == HetKind::BreuschPagan ? "bp" : "arch"},
                        {"arch_lags", diagnostics.arch_lags},
                        {"reset_powers", diagnostics.reset_powers}};
    j["stability"] = {{"level", stability_level}};
    j["forecast"] = {{"horizon", forecast.horizon},
                     {"scenario", forecast.scenario},
                     {"drift", forecast.drift}};
    j["seed"] = seed;
    // out_dir deliberately excluded: the output location does not affect any
    // result, and identical analyses must hash identically.
    return j.dump();
}

// ---- pipeline ----------------------------------------------------------------

Dataset prepare_dataset(const PipelineConfig& cfg) {
    Dataset d = load_csv(cfg.data_path, cfg.date_column);
    for (const auto& r : cfg.ratios) d.add(ratio(r.name, d.at(r.numerator), d.at(r.denominator)));
    for (const auto& dm : cfg.dummies)
        d.add(make_dummy(dm.name, d.start(), d.length(), dm.rule));
    for (const auto& v : cfg.log_vars) d.add(log_transform(d.at(v)));
    return d;
}

namespace {

std::vector<ModelSpec> expand_models(const PipelineConfig& cfg, std::vector<std::string>& psis) {
    const bool has_placeholder =
        std::find(cfg.model.regressors.begin(), cfg.model.regressors.end(), "psi") !=
        cfg.model.regressors.end();
    std::vector<ModelSpec> out;
    if (!has_placeholder) {
        out.push_back(cfg.model);
        psis.emplace_back();
        return out;
    }
    if (cfg.psi_candidates.empty())
        throw InvalidConfig("model uses the 'psi' placeholder but psi_candidates is empty");
    for (const auto& cand : cfg.psi_candidates) {
        ModelSpec spec = cfg.model;
        for (auto& r : spec.regressors)
            if (r == "psi") r = cand;
        out.push_back(std::move(spec));
        psis.push_back(cand);
    }
    return out;
}

std::vector<std::string> model_variables(const ModelSpec& spec) {
    std::vector<std::string> vars{spec.dependent};
    for (const auto& r : spec.regressors) vars.push_back(r);
    for (const auto& f : spec.fixed_regressors) vars.push_back(f.name);
    return vars;
}

BoundsResult bounds_with_options(const CecmFit& cecm, const PipelineConfig& cfg,
                                 std::vector<std::string>& warnings) {
    if (!cfg.h0_with_dummies) return bounds_test(cecm, cfg.bounds_case);

    // Literal joint null including the indicator terms. Tabulated bounds
    // assume purely stochastic level regressors, so they are approximate.
    std::vector<Eigen::Index> restricted{cecm.idx_dep_level};
    for (Eigen::Index idx : cecm.idx_reg_levels) restricted.push_back(idx);
    for (Eigen::Index idx : cecm.idx_fixed_terms) restricted.push_back(idx);
    const FStatResult f = wald_f(cecm.fit, cecm.X, cecm.y, restricted);
    BoundsResult out;
    out.f_statistic = f.f_value;
    out.num_restrictions = f.num_restrictions;
    out.dof_denominator = f.dof_denominator;
    out.k = static_cast<int>(cecm.idx_reg_levels.size());
    out.which_case = cfg.bounds_case;
    for (double level : {0.10, 0.05, 0.025, 0.01}) {
        const BoundsPair pair = pss_critical(out.k, cfg.bounds_case, level);
        out.bounds[level] = pair;
        out.decisions[level] = decide(out.f_statistic, pair);
    }
    warnings.push_back(
        "bounds restriction includes indicator variables; tabulated critical bounds are "
        "approximate under this null");
    return out;
}

ExogScenario build_scenario(const PipelineConfig& cfg, const ArdlFit& fit) {
    ExogScenario scenario;
    const int H = cfg.forecast.horizon;
    if (cfg.forecast.scenario == "hold-last") {
        scenario = ExogScenario::hold_last(fit, H);
    } else if (cfg.forecast.scenario == "drift") {
        scenario = ExogScenario::drift(fit, H, cfg.forecast.drift);
    } else {
        // CSV file with a date column and one column per exogenous variable,
        // starting the month after the estimation sample ends.
        Dataset future = load_csv(cfg.forecast.scenario, cfg.date_column);
        const TimePoint expected =
            fit.data.start().plus_months(static_cast<int>(fit.data.length()));
        if (future.start() != expected)
            throw IncompleteScenario("scenario file starts at " + future.start().to_string() +
                                     ", expected " + expected.to_string());
        scenario.provenance = "user-supplied: " + cfg.forecast.scenario;
        for (const auto& s : future.all()) {
            scenario.futures[s.name] = s.values;
        }
    }
    // Indicator variables follow their construction rules over the horizon.
    for (const auto& dm : cfg.dummies)
        if (scenario.futures.count(dm.name)) scenario.apply_dummy_rule(fit, dm.name, dm.rule, H);
    return scenario;
}

}  // namespace

RunReport run_pipeline(const PipelineConfig& cfg, const StageSelection& stages) {
    Dataset data = prepare_dataset(cfg);

    std::vector<std::string> psis;
    std::vector<ModelSpec> specs = expand_models(cfg, psis);
    for (const auto& spec : specs) spec.validate(data);  // fail before any computation

    std::vector<std::string> variables = cfg.adf.variables;
    if (variables.empty()) {
        for (const auto& spec : specs)
            for (const auto& v : model_variables(spec))
                if (std::find(variables.begin(), variables.end(), v) == variables.end())
                    variables.push_back(v);
    } else {
        for (const auto& v : variables)
            if (!data.contains(v)) throw UnknownSeries(v);
    }

    RunReport report;
    report.tool_version = kToolVersion;
    report.rng = kRngAlgorithm;
    report.config_hash = fnv1a_hex(cfg.canonical_json());
    report.seed = cfg.seed;

    for (const auto& v : variables)
        report.stats.emplace_back(v, descriptive_stats(data.at(v)));

    if (stages.unit_roots) {
        for (const auto& v : variables) {
            IntegrationOrder order = classify_integration(data.at(v), cfg.adf.deterministic,
                                                          cfg.adf.level, cfg.adf.max_lag,
                                                          cfg.adf.selection);
            if (order.order == IntegrationClass::I2plus) throw I2Detected(v);
            report.unit_roots.emplace_back(v, std::move(order));
        }
    }

    for (std::size_t i = 0; stages.models && i < specs.size(); ++i) {
        ModelReport m;
        m.label = "model" + std::to_string(i + 1);
        m.psi = psis[i];
        m.order = select_order(data, specs[i]);
        m.levels = fit_ardl(data, specs[i], m.order);
        m.cecm = to_cecm(m.levels);
        m.bounds = bounds_with_options(m.cecm, cfg, m.warnings);
        m.long_run = long_run(m.cecm);
        m.ecm = ecm_restricted(m.cecm, m.long_run);

        m.sample_start = m.levels.sample_start.to_string();
        m.nobs = static_cast<long>(m.cecm.y.size());
        m.cecm_r_squared = m.cecm.fit.r_squared;
        const double n_obs = static_cast<double>(m.nobs);
        const double k_cols = static_cast<double>(m.cecm.X.cols());
        m.cecm_adj_r_squared =
            1.0 - (1.0 - m.cecm_r_squared) * (n_obs - 1.0) / (n_obs - k_cols);
        for (Eigen::Index c = 0; c < m.levels.X.cols(); ++c)
            m.levels_table.push_back({m.levels.fit.names[static_cast<std::size_t>(c)],
                                      m.levels.fit.coefficients[c],
                                      m.levels.fit.coef_std_errors[c], m.levels.fit.p_value(c)});

        // Joint significance of everything but the constant.
        {
            std::vector<Eigen::Index> restricted;
            for (Eigen::Index j = 0; j < m.cecm.X.cols(); ++j)
                if (j != m.cecm.idx_intercept) restricted.push_back(j);
            m.regression_f = wald_f(m.cecm.fit, m.cecm.X, m.cecm.y, restricted);
        }

        if (stages.diagnostics) {
            m.diagnostics.push_back(
                breusch_godfrey(m.cecm.fit, m.cecm.X, cfg.diagnostics.bg_lags));
            m.diagnostics.push_back(heteroskedasticity_test(
                m.cecm.fit, m.cecm.X, cfg.diagnostics.het, cfg.diagnostics.arch_lags));
            m.diagnostics.push_back(jarque_bera(m.cecm.fit.residuals));
            m.diagnostics.push_back(
                ramsey_reset(m.cecm.fit, m.cecm.X, m.cecm.y, cfg.diagnostics.reset_powers));
        }

        if (stages.stability) {
            m.cusum_result = cusum(m.cecm.X, m.cecm.y, cfg.stability_level);
            m.cusumsq_result = cusumsq(m.cecm.X, m.cecm.y, cfg.stability_level);
        }

        if (stages.forecast && cfg.forecast.horizon > 0) {
            ExogScenario scenario = build_scenario(cfg, m.levels);
            m.forecast = dynamic_forecast(m.levels, scenario, cfg.forecast.horizon);
        }
        report.models.push_back(std::move(m));
    }
    return report;
}

// ---- JSON rendering ------------------------------------------------------------

namespace {

json stats_to_json(const RunReport& r) {
    json arr = json::array();
    for (const auto& [name, s] : r.stats)
        arr.push_back({{"variable", name},
                       {"mean", s.mean},
                       {"min", s.min},
                       {"max", s.max},
                       {"std_dev", s.std_dev}});
    return arr;
}

json adf_to_json(const AdfResult& a) {
    json cvs = json::object();
    for (const auto& [level, cv] : a.critical_values)
        cvs[format_double(level, "%g")] = cv;
    return {{"statistic", a.statistic},
            {"lags", a.lags_used},
            {"deterministic", deterministic_to_string(a.deterministic)},
            {"nobs", a.nobs},
            {"critical_values", cvs}};
}

AdfResult adf_from_json(const json& j) {
    AdfResult a;
    a.statistic = j.at("statistic").get<double>();
    a.lags_used = j.at("lags").get<int>();
    a.deterministic = deterministic_from_string(j.at("deterministic").get<std::string>());
    a.nobs = j.at("nobs").get<long>();
    for (auto it = j.at("critical_values").begin(); it != j.at("critical_values").end(); ++it)
        a.critical_values[std::stod(it.key())] = it.value().get<double>();
    return a;
}

json unit_roots_to_json(const RunReport& r) {
    json arr = json::array();
    for (const auto& [name, io] : r.unit_roots) {
        json entry{{"variable", name},
                   {"order", io.order == IntegrationClass::I0   ? "I0"
                             : io.order == IntegrationClass::I1 ? "I1"
                                                                : "I2plus"},
                   {"level", adf_to_json(io.level_result)}};
        if (io.diff_result) entry["first_difference"] = adf_to_json(*io.diff_result);
        arr.push_back(entry);
    }
    return arr;
}

json coef_to_json(const LongRunCoefficient& c) {
    return {{"name", c.name}, {"estimate", c.estimate}, {"std_error", c.std_error},
            {"p_value", c.p_value}};
}

LongRunCoefficient coef_from_json(const json& j) {
    return {j.at("name").get<std::string>(), j.at("estimate").get<double>(),
            j.at("std_error").get<double>(), j.at("p_value").get<double>()};
}

json stability_to_json(const StabilityResult& s) {
    return {{"path", s.path},
            {"upper", s.upper_boundary},
            {"lower", s.lower_boundary},
            {"within", s.within},
            {"level", s.level}};
}

StabilityResult stability_from_json(const json& j) {
    StabilityResult s;
    s.path = j.at("path").get<std::vector<double>>();
    s.upper_boundary = j.at("upper").get<std::vector<double>>();
    s.lower_boundary = j.at("lower").get<std::vector<double>>();
    s.within = j.at("within").get<bool>();
    s.level = j.at("level").get<double>();
    return s;
}

json model_to_json(const ModelReport& m) {
    json bounds_j = json::object();
    for (const auto& [level, pair] : m.bounds.bounds) {
        bounds_j[format_double(level, "%g")] = {
            {"i0", pair.i0},
            {"i1", pair.i1},
            {"decision", to_string(m.bounds.decisions.at(level))}};
    }
    json long_run_j = json::array();
    for (const auto& c : m.long_run.coefficients) long_run_j.push_back(coef_to_json(c));
    json short_run_j = json::array();
    for (const auto& t : m.ecm.short_run)
        short_run_j.push_back({{"name", t.name}, {"estimate", t.coefficient},
                               {"std_error", t.std_error}, {"p_value", t.p_value}});
    json diag_j = json::array();
    for (const auto& t : m.diagnostics)
        diag_j.push_back({{"name", t.name}, {"statistic", t.statistic},
                          {"p_value", t.p_value}, {"dof", t.dof},
                          {"verdict", t.pass_at_5pct() ? "Pass" : "Fail"}});
    json levels_j = json::array();
    for (std::size_t i = 0; i < m.levels_table.size(); ++i)
        levels_j.push_back({{"name", m.levels_table[i].name},
                            {"estimate", m.levels_table[i].estimate},
                            {"std_error", m.levels_table[i].std_error},
                            {"p_value", m.levels_table[i].p_value}});

    json out{{"label", m.label},
             {"psi", m.psi},
             {"order", {{"p", m.order.p}, {"q", m.order.q}}},
             {"sample_start", m.sample_start},
             {"nobs", m.nobs},
             {"levels_coefficients", levels_j},
             {"bounds",
              {{"f_statistic", m.bounds.f_statistic},
               {"k", m.bounds.k},
               {"case", to_string(m.bounds.which_case)},
               {"num_restrictions", m.bounds.num_restrictions},
               {"dof_denominator", m.bounds.dof_denominator},
               {"critical", bounds_j}}},
             {"long_run", long_run_j},
             {"ecm",
              {{"short_run", short_run_j},
               {"ect_coefficient", m.ecm.ect_coefficient},
               {"ect_std_error", m.ecm.ect_std_error},
               {"ect_p_value", m.ecm.ect_p_value},
               {"r_squared", m.ecm.r_squared}}},
             {"r_squared", m.cecm_r_squared},
             {"adj_r_squared", m.cecm_adj_r_squared},
             {"regression_f", {{"f_value", m.regression_f.f_value},
                               {"p_value", m.regression_f.p_value},
                               {"num_restrictions", m.regression_f.num_restrictions},
                               {"dof_denominator", m.regression_f.dof_denominator}}},
             {"diagnostics", diag_j},
             {"cusum", stability_to_json(m.cusum_result)},
             {"cusumsq", stability_to_json(m.cusumsq_result)},
             {"warnings", m.warnings}};
    if (m.long_run.intercept) out["long_run_intercept"] = coef_to_json(*m.long_run.intercept);
    if (m.long_run.trend) out["long_run_trend"] = coef_to_json(*m.long_run.trend);
    if (m.forecast) {
        out["forecast"] = {{"horizon", m.forecast->horizon},
                           {"origin", m.forecast->origin.to_string()},
                           {"point", m.forecast->point},
                           {"spectral_radius", m.forecast->spectral_radius},
                           {"stable", m.forecast->stable},
                           {"scenario_provenance", m.forecast->scenario.provenance}};
    }
    return out;
}

}  // namespace

std::string report_to_json(const RunReport& r) {
    json models = json::array();
    for (const auto& m : r.models) models.push_back(model_to_json(m));
    json j{{"schema_version", kReportSchemaVersion},
           {"provenance",
            {{"tool_version", r.tool_version},
             {"rng", r.rng},
             {"config_hash", r.config_hash},
             {"seed", r.seed}}},
           {"descriptive_statistics", stats_to_json(r)},
           {"unit_roots", unit_roots_to_json(r)},
           {"models", models}};
    return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string& text) {
    const json j = json::parse(text);
    RunReport r;
    const json& prov = j.at("provenance");
    r.tool_version = prov.at("tool_version").get<std::string>();
    r.rng = prov.at("rng").get<std::string>();
    r.config_hash = prov.at("config_hash").get<std::string>();
    r.seed = prov.at("seed").get<std::uint64_t>();

    for (const json& s : j.at("descriptive_statistics")) {
        StatsSummary sum;
        sum.mean = s.at("mean").get<double>();
        sum.min = s.at("min").get<double>();
        sum.max = s.at("max").get<double>();
        sum.std_dev = s.at("std_dev").get<double>();
        r.stats.emplace_back(s.at("variable").get<std::string>(), sum);
    }
    for (const json& u : j.at("unit_roots")) {
        IntegrationOrder io;
        const std::string ord = u.at("order").get<std::string>();
        io.order = ord == "I0" ? IntegrationClass::I0
                   : ord == "I1" ? IntegrationClass::I1
                                 : IntegrationClass::I2plus;
        io.level_result = adf_from_json(u.at("level"));
        if (u.contains("first_difference")) io.diff_result = adf_from_json(u["first_difference"]);
        r.unit_roots.emplace_back(u.at("variable").get<std::string>(), std::move(io));
    }
    for (const json& mj : j.at("models")) {
        ModelReport m;
        m.label = mj.at("label").get<std::string>();
        m.psi = mj.at("psi").get<std::string>();
        m.order.p = mj.at("order").at("p").get<int>();
        m.order.q = mj.at("order").at("q").get<std::vector<int>>();
        m.sample_start = mj.at("sample_start").get<std::string>();
        m.nobs = mj.at("nobs").get<long>();
        for (const json& c : mj.at("levels_coefficients"))
            m.levels_table.push_back(coef_from_json(c));
        const json& b = mj.at("bounds");
        m.bounds.f_statistic = b.at("f_statistic").get<double>();
        m.bounds.k = b.at("k").get<int>();
        m.bounds.which_case = bounds_case_from_string(b.at("case").get<std::string>());
        m.bounds.num_restrictions = b.at("num_restrictions").get<int>();
        m.bounds.dof_denominator = b.at("dof_denominator").get<long>();
        for (auto it = b.at("critical").begin(); it != b.at("critical").end(); ++it) {
            const double level = std::stod(it.key());
            m.bounds.bounds[level] = {it.value().at("i0").get<double>(),
                                      it.value().at("i1").get<double>()};
            const std::string d = it.value().at("decision").get<std::string>();
            m.bounds.decisions[level] = d == "Cointegrated" ? CointDecision::Cointegrated
                                        : d == "NotCointegrated" ? CointDecision::NotCointegrated
                                                                 : CointDecision::Inconclusive;
        }
        for (const json& c : mj.at("long_run")) m.long_run.coefficients.push_back(coef_from_json(c));
        if (mj.contains("long_run_intercept"))
            m.long_run.intercept = coef_from_json(mj["long_run_intercept"]);
        if (mj.contains("long_run_trend")) m.long_run.trend = coef_from_json(mj["long_run_trend"]);
        const json& e = mj.at("ecm");
        for (const json& t : e.at("short_run"))
            m.ecm.short_run.push_back({t.at("name").get<std::string>(),
                                       t.at("estimate").get<double>(),
                                       t.at("std_error").get<double>(),
                                       t.at("p_value").get<double>()});
        m.ecm.ect_coefficient = e.at("ect_coefficient").get<double>();
        m.ecm.ect_std_error = e.at("ect_std_error").get<double>();
        m.ecm.ect_p_value = e.at("ect_p_value").get<double>();
        m.ecm.r_squared = e.at("r_squared").get<double>();
        m.cecm_r_squared = mj.at("r_squared").get<double>();
        m.cecm_adj_r_squared = mj.at("adj_r_squared").get<double>();
        const json& f = mj.at("regression_f");
        m.regression_f.f_value = f.at("f_value").get<double>();
        m.regression_f.p_value = f.at("p_value").get<double>();
        m.regression_f.num_restrictions = f.at("num_restrictions").get<int>();
        m.regression_f.dof_denominator = f.at("dof_denominator").get<long>();
        for (const json& t : mj.at("diagnostics")) {
            TestResult tr;
            tr.name = t.at("name").get<std::string>();
            tr.statistic = t.at("statistic").get<double>();
            tr.p_value = t.at("p_value").get<double>();
            tr.dof = t.at("dof").get<int>();
            m.diagnostics.push_back(tr);
        }
        m.cusum_result = stability_from_json(mj.at("cusum"));
        m.cusumsq_result = stability_from_json(mj.at("cusumsq"));
        m.warnings = mj.at("warnings").get<std::vector<std::string>>();
        if (mj.contains("forecast")) {
            Forecast fc;
            fc.horizon = mj["forecast"].at("horizon").get<int>();
            fc.origin = TimePoint::parse(mj["forecast"].at("origin").get<std::string>());
            fc.point = mj["forecast"].at("point").get<std::vector<double>>();
            fc.spectral_radius = mj["forecast"].at("spectral_radius").get<double>();
            fc.stable = mj["forecast"].at("stable").get<bool>();
            fc.scenario.provenance =
                mj["forecast"].at("scenario_provenance").get<std::string>();
            m.forecast = std::move(fc);
        }
        r.models.push_back(std::move(m));
    }
    return r;
}

// ---- text rendering -------------------------------------------------------------

namespace {

class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}
    void add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    [[nodiscard]] std::string render() const {
        std::vector<std::size_t> widths(header_.size());
        for (std::size_t c = 0; c < header_.size(); ++c) widths[c] = header_[c].size();
        for (const auto& row : rows_)
            for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c)
                widths[c] = std::max(widths[c], row[c].size());
        std::string out = line(header_, widths);
        std::size_t total = 0;
        for (std::size_t w : widths) total += w + 2;
        out += std::string(total, '-') + "\n";
        for (const auto& row : rows_) out += line(row, widths);
        return out;
    }

private:
    static std::string line(const std::vector<std::string>& cells,
                            const std::vector<std::size_t>& widths) {
        std::string out;
        for (std::size_t c = 0; c < widths.size(); ++c) {
            std::string cell = c < cells.size() ? cells[c] : "";
            if (c == 0) {
                cell.resize(widths[c], ' ');
                out += cell + "  ";
            } else {
                out += std::string(widths[c] - cell.size(), ' ') + cell + "  ";
            }
        }
        out += "\n";
        return out;
    }

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

std::string starred(double estimate, double p_value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f%s [%.3f]", estimate,
                  significance_stars(p_value).c_str(), p_value);
    return buf;
}

// cell lookup for per-model columns keyed by row label
std::string cell_or_blank(const std::map<std::string, std::string>& cells,
                          const std::string& key) {
    auto it = cells.find(key);
    return it == cells.end() ? "" : it->second;
}

}  // namespace

std::string report_to_text(const RunReport& r) {
    std::string out;
    out += "ARDL bounds-testing pipeline report\n";
    out += "===================================\n\n";
    out += "provenance: tool " + r.tool_version + ", config " + r.config_hash + ", seed " +
           std::to_string(r.seed) + "\n";
    out += "rng: " + r.rng + "\n\n";

    out += "Descriptive statistics\n";
    {
        TextTable t({"variable", "Mean", "Min", "Max", "Stand. Dev."});
        for (const auto& [name, s] : r.stats)
            t.add_row({name, format_double(s.mean, "%.3f"), format_double(s.min, "%.3f"),
                       format_double(s.max, "%.3f"), format_double(s.std_dev, "%.3f")});
        out += t.render() + "\n";
    }

    out += "Unit-root pretests (x = unit root kept, v = rejected at the test level)\n";
    {
        TextTable t({"variable", "level stat", "level", "1st diff stat", "1st diff", "class"});
        for (const auto& [name, io] : r.unit_roots) {
            const bool lvl = io.level_result.reject_unit_root(0.05);
            std::string diff_stat = "-", diff_mark = "-";
            if (io.diff_result) {
                diff_stat = format_double(io.diff_result->statistic, "%.3f");
                diff_mark = io.diff_result->reject_unit_root(0.05) ? "v" : "x";
            }
            t.add_row({name, format_double(io.level_result.statistic, "%.3f"),
                       lvl ? "v" : "x", diff_stat, diff_mark,
                       io.order == IntegrationClass::I0   ? "I(0)"
                       : io.order == IntegrationClass::I1 ? "I(1)"
                                                          : "I(2+)"});
        }
        out += t.render() + "\n";
    }

    if (!r.models.empty()) {
        out += "Bounds test for cointegration\n";
        {
            TextTable t({"model", "psi", "order", "F-statistic", "5% I(0)", "5% I(1)",
                         "decision at 5%"});
            for (const auto& m : r.models) {
                const auto& pair = m.bounds.bounds.at(0.05);
                std::string stars;  // tightest level that rejects no-cointegration
                for (const auto& [level, p] : m.bounds.bounds)
                    if (m.bounds.decisions.at(level) == CointDecision::Cointegrated &&
                        (level == 0.01 || level == 0.05 || level == 0.10)) {
                        stars = significance_stars(level);
                        break;
                    }
                t.add_row({m.label, m.psi.empty() ? "-" : m.psi, "ARDL" + m.order.to_string(),
                           format_double(m.bounds.f_statistic, "%.3f") + stars,
                           format_double(pair.i0, "%.2f"), format_double(pair.i1, "%.2f"),
                           to_string(m.bounds.decisions.at(0.05))});
            }
            out += t.render() + "\n";
        }

        out += "Long-run coefficients (estimate, stars at 1/5/10%, [p-value])\n";
        {
            std::vector<std::string> header{"term"};
            for (const auto& m : r.models) header.push_back(m.label);
            TextTable t(header);
            std::vector<std::string> terms;
            std::vector<std::map<std::string, std::string>> cells(r.models.size());
            for (std::size_t i = 0; i < r.models.size(); ++i) {
                const auto& lr = r.models[i].long_run;
                for (const auto& c : lr.coefficients) {
                    if (std::find(terms.begin(), terms.end(), c.name) == terms.end())
                        terms.push_back(c.name);
                    cells[i][c.name] = starred(c.estimate, c.p_value);
                }
                if (lr.intercept) {
                    if (std::find(terms.begin(), terms.end(), "const") == terms.end())
                        terms.push_back("const");
                    cells[i]["const"] = starred(lr.intercept->estimate, lr.intercept->p_value);
                }
            }
            for (const auto& term : terms) {
                std::vector<std::string> row{term};
                for (std::size_t i = 0; i < r.models.size(); ++i)
                    row.push_back(cell_or_blank(cells[i], term));
                t.add_row(row);
            }
            out += t.render() + "\n";
        }

        out += "Error-correction (short-run) estimates\n";
        {
            std::vector<std::string> header{"term"};
            for (const auto& m : r.models) header.push_back(m.label);
            TextTable t(header);
            std::vector<std::string> terms;
            std::vector<std::map<std::string, std::string>> cells(r.models.size());
            for (std::size_t i = 0; i < r.models.size(); ++i) {
                for (const auto& term : r.models[i].ecm.short_run) {
                    if (std::find(terms.begin(), terms.end(), term.name) == terms.end())
                        terms.push_back(term.name);
                    cells[i][term.name] = starred(term.coefficient, term.p_value);
                }
            }
            for (const auto& term : terms) {
                std::vector<std::string> row{term};
                for (std::size_t i = 0; i < r.models.size(); ++i)
                    row.push_back(cell_or_blank(cells[i], term));
                t.add_row(row);
            }
            std::vector<std::string> ect_row{"ECT(-1)"};
            std::vector<std::string> r2_row{"R-squared"};
            for (const auto& m : r.models) {
                ect_row.push_back(starred(m.ecm.ect_coefficient, m.ecm.ect_p_value));
                r2_row.push_back(format_double(m.ecm.r_squared, "%.3f"));
            }
            t.add_row(ect_row);
            t.add_row(r2_row);
            out += t.render() + "\n";
        }

        out += "Diagnostics (p-values; Pass = null of no problem kept at 5%)\n";
        {
            std::vector<std::string> header{"check"};
            for (const auto& m : r.models) header.push_back(m.label);
            TextTable t(header);
            std::vector<std::string> rows;
            std::vector<std::map<std::string, std::string>> cells(r.models.size());
            for (std::size_t i = 0; i < r.models.size(); ++i) {
                const auto& m = r.models[i];
                cells[i]["R-squared"] = format_double(m.cecm_r_squared, "%.3f");
                cells[i]["Adjusted R-squared"] = format_double(m.cecm_adj_r_squared, "%.3f");
                cells[i]["F-statistic (p)"] = format_double(m.regression_f.p_value, "%.3f") +
                                              significance_stars(m.regression_f.p_value);
                for (const auto& d : m.diagnostics)
                    cells[i][d.name] = format_double(d.p_value, "%.3f") +
                                       (d.pass_at_5pct() ? "" : " (fail)");
                if (!m.cusum_result.path.empty())
                    cells[i]["CUSUM"] = m.cusum_result.within ? "Stable" : "Unstable";
                if (!m.cusumsq_result.path.empty())
                    cells[i]["CUSUMSQ"] = m.cusumsq_result.within ? "Stable" : "Unstable";
                cells[i]["Bounds F"] = format_double(m.bounds.f_statistic, "%.3f");
            }
            rows = {"R-squared", "Adjusted R-squared", "F-statistic (p)"};
            for (const auto& d : r.models.front().diagnostics) rows.push_back(d.name);
            if (!r.models.front().cusum_result.path.empty()) rows.push_back("CUSUM");
            if (!r.models.front().cusumsq_result.path.empty()) rows.push_back("CUSUMSQ");
            rows.push_back("Bounds F");
            for (const auto& row : rows) {
                std::vector<std::string> cells_row{row};
                for (std::size_t i = 0; i < r.models.size(); ++i)
                    cells_row.push_back(cell_or_blank(cells[i], row));
                t.add_row(cells_row);
            }
            out += t.render() + "\n";
        }

        for (const auto& m : r.models) {
            if (!m.forecast) continue;
            out += "Forecast (" + m.label + "): horizon " +
                   std::to_string(m.forecast->horizon) + " from " +
                   m.forecast->origin.to_string() + ", spectral radius " +
                   format_double(m.forecast->spectral_radius, "%.3f") +
                   (m.forecast->stable ? " (stable)" : " (UNSTABLE)") + "\n";
            out += "  scenario: " + m.forecast->scenario.provenance + "\n";
        }
        for (const auto& m : r.models)
            for (const auto& w : m.warnings) out += "warning (" + m.label + "): " + w + "\n";
    }
    return out;
}

// ---- CSV bundle -----------------------------------------------------------------

namespace {

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IoError("failed writing '" + path + "'");
}

std::string csv_num(double v) { return format_double(v, "%.10g"); }

std::vector<std::string> write_csv_bundle(const RunReport& r, const std::string& out_dir) {
    std::vector<std::string> paths;
    auto emit = [&](const std::string& name, const std::string& content) {
        const std::string path = out_dir + "/" + name;
        write_text_file(path, content);
        paths.push_back(path);
    };

    {
        std::string s = "variable,mean,min,max,std_dev\n";
        for (const auto& [name, st] : r.stats)
            s += name + "," + csv_num(st.mean) + "," + csv_num(st.min) + "," + csv_num(st.max) +
                 "," + csv_num(st.std_dev) + "\n";
        emit("stats.csv", s);
    }
    {
        std::string s = "variable,order,level_stat,level_cv_5pct,diff_stat,diff_cv_5pct\n";
        for (const auto& [name, io] : r.unit_roots) {
            s += name + ",";
            s += io.order == IntegrationClass::I0   ? "I0"
                 : io.order == IntegrationClass::I1 ? "I1"
                                                    : "I2plus";
            s += "," + csv_num(io.level_result.statistic) + "," +
                 csv_num(io.level_result.critical_values.at(0.05));
            if (io.diff_result)
                s += "," + csv_num(io.diff_result->statistic) + "," +
                     csv_num(io.diff_result->critical_values.at(0.05));
            else
                s += ",,";
            s += "\n";
        }
        emit("unit_roots.csv", s);
    }
    if (!r.models.empty()) {
        std::string s = "model,psi,order,f_statistic,i0_5pct,i1_5pct,decision_5pct\n";
        for (const auto& m : r.models) {
            const auto& pair = m.bounds.bounds.at(0.05);
            s += m.label + "," + m.psi + ",ARDL" + m.order.to_string() + "," +
                 csv_num(m.bounds.f_statistic) + "," + csv_num(pair.i0) + "," + csv_num(pair.i1) +
                 "," + to_string(m.bounds.decisions.at(0.05)) + "\n";
        }
        emit("bounds.csv", s);
    }
    for (const auto& m : r.models) {
        {
            std::string s = "term,estimate,std_error,p_value\n";
            for (const auto& c : m.long_run.coefficients)
                s += c.name + "," + csv_num(c.estimate) + "," + csv_num(c.std_error) + "," +
                     csv_num(c.p_value) + "\n";
            if (m.long_run.intercept)
                s += "const," + csv_num(m.long_run.intercept->estimate) + "," +
                     csv_num(m.long_run.intercept->std_error) + "," +
                     csv_num(m.long_run.intercept->p_value) + "\n";
            emit("longrun_" + m.label + ".csv", s);
        }
        {
            std::string s = "term,estimate,std_error,p_value\n";
            for (const auto& t : m.ecm.short_run)
                s += t.name + "," + csv_num(t.coefficient) + "," + csv_num(t.std_error) + "," +
                     csv_num(t.p_value) + "\n";
            s += "ECT(-1)," + csv_num(m.ecm.ect_coefficient) + "," +
                 csv_num(m.ecm.ect_std_error) + "," + csv_num(m.ecm.ect_p_value) + "\n";
            emit("ecm_" + m.label + ".csv", s);
        }
        auto stability_csv = [&](const StabilityResult& st, const std::string& name) {
            if (st.path.empty()) return;
            std::string s = "t,path,lower,upper\n";
            for (std::size_t i = 0; i < st.path.size(); ++i)
                s += std::to_string(i + 1) + "," + csv_num(st.path[i]) + "," +
                     csv_num(st.lower_boundary[i]) + "," + csv_num(st.upper_boundary[i]) + "\n";
            emit(name + "_" + m.label + ".csv", s);
        };
        stability_csv(m.cusum_result, "cusum");
        stability_csv(m.cusumsq_result, "cusumsq");
        if (m.forecast) {
            std::string s = "month,forecast\n";
            TimePoint tp = m.forecast->origin;
            for (double v : m.forecast->point) {
                tp = tp.next();
                s += tp.to_string() + "," + csv_num(v) + "\n";
            }
            emit("forecast_" + m.label + ".csv", s);
        }
    }
    return paths;
}

}  // namespace

std::vector<std::string> render_report(const RunReport& r, ReportFormat format,
                                       const std::string& out_dir) {
    switch (format) {
        case ReportFormat::Text: {
            const std::string path = out_dir + "/report.txt";
            write_text_file(path, report_to_text(r));
            return {path};
        }
        case ReportFormat::Json: {
            const std::string path = out_dir + "/report.json";
            write_text_file(path, report_to_json(r));
            return {path};
        }
        case ReportFormat::CsvBundle:
            return write_csv_bundle(r, out_dir);
    }
    return {};
}

}  // namespace ardl
