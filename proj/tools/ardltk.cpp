// ardltk - ARDL bounds-testing toolkit command line.
//
// Subcommands: ingest, adf, fit, bounds, diagnose, stability, forecast,
// simulate (cv | power), report. Most read a JSON pipeline config; simulate
// is self-contained. Exit codes: 0 ok, 2 configuration/validation error,
// 3 numerical failure, 4 integration-order abort.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ardl/report.hpp"
#include "ardl/rng.hpp"
#include "ardl/sim.hpp"

using namespace ardl;

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
    std::string format = "text";
    std::uint64_t seed = 0;
    bool seed_set = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "pipeline config (JSON)")->required();
    cmd->add_option("--out", args.out_dir, "output directory (default: config's 'out')");
    cmd->add_option("--format", args.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--seed", args.seed, "override the config seed")
        ->each([&args](const std::string&) { args.seed_set = true; });
}

PipelineConfig load_config(const CommonArgs& args) {
    PipelineConfig cfg = PipelineConfig::from_json_file(args.config_path);
    if (!args.out_dir.empty()) cfg.out_dir = args.out_dir;
    if (args.seed_set) cfg.seed = args.seed;
    return cfg;
}

void emit(const RunReport& report, const PipelineConfig& cfg, const std::string& format) {
    if (format == "json") {
        std::cout << report_to_json(report);
    } else if (format == "csv") {
        for (const auto& path : render_report(report, ReportFormat::CsvBundle, cfg.out_dir))
            std::cout << path << "\n";
    } else {
        std::cout << report_to_text(report);
    }
}

int cmd_ingest(const CommonArgs& args) {
    PipelineConfig cfg = load_config(args);
    Dataset data = prepare_dataset(cfg);
    RunReport report = run_pipeline(cfg, StageSelection::stats_only());
    emit(report, cfg, args.format);
    const std::string path = cfg.out_dir + "/dataset.csv";
    write_csv(data, path);
    std::cout << "transformed dataset: " << path << "\n";
    return 0;
}

int cmd_adf(const CommonArgs& args) {
    PipelineConfig cfg = load_config(args);
    RunReport report = run_pipeline(cfg, StageSelection::through_adf());
    emit(report, cfg, args.format);
    return 0;
}

int cmd_models(const CommonArgs& args, bool diagnostics, bool h0_with_dummies = false) {
    PipelineConfig cfg = load_config(args);
    if (h0_with_dummies) cfg.h0_with_dummies = true;
    StageSelection stages = StageSelection::through_models();
    stages.diagnostics = diagnostics;
    RunReport report = run_pipeline(cfg, stages);
    emit(report, cfg, args.format);
    return 0;
}

int cmd_stability(const CommonArgs& args) {
    PipelineConfig cfg = load_config(args);
    StageSelection stages = StageSelection::through_models();
    stages.stability = true;
    RunReport report = run_pipeline(cfg, stages);
    if (args.format == "json") {
        std::cout << report_to_json(report);
        return 0;
    }
    for (const auto& path : render_report(report, ReportFormat::CsvBundle, cfg.out_dir))
        if (path.find("cusum") != std::string::npos) std::cout << path << "\n";
    for (const auto& m : report.models) {
        std::cout << m.label << " CUSUM: " << (m.cusum_result.within ? "Stable" : "Unstable")
                  << "\n";
        std::cout << m.label << " CUSUMSQ: " << (m.cusumsq_result.within ? "Stable" : "Unstable")
                  << "\n";
    }
    return 0;
}

int cmd_forecast(const CommonArgs& args, int horizon, const std::string& scenario) {
    PipelineConfig cfg = load_config(args);
    if (horizon > 0) cfg.forecast.horizon = horizon;
    if (!scenario.empty()) cfg.forecast.scenario = scenario;
    if (cfg.forecast.horizon <= 0)
        throw InvalidConfig("forecast horizon must be positive (--horizon or config)");
    StageSelection stages = StageSelection::through_models();
    stages.forecast = true;
    RunReport report = run_pipeline(cfg, stages);

    if (args.format == "json") {
        std::cout << report_to_json(report);
        return 0;
    }
    // per-model forecast CSV plus a plot-ready actual-vs-forecast file
    Dataset data = prepare_dataset(cfg);
    for (const auto& m : report.models) {
        if (!m.forecast) continue;
        const std::string path = cfg.out_dir + "/forecast_plot_" + m.label + ".csv";
        std::ofstream out(path);
        if (!out) throw IoError("cannot open '" + path + "'");
        out << "month,actual,forecast\n";
        const Series& dep = data.at(m.levels.spec.dependent);
        char buf[40];
        for (std::size_t t = 0; t < dep.length(); ++t) {
            std::snprintf(buf, sizeof(buf), "%.10g", dep.values[t]);
            out << dep.time_at(t).to_string() << "," << buf << ",\n";
        }
        TimePoint tp = m.forecast->origin;
        for (double v : m.forecast->point) {
            tp = tp.next();
            std::snprintf(buf, sizeof(buf), "%.10g", v);
            out << tp.to_string() << ",," << buf << "\n";
        }
        std::cout << path << "\n";
        std::cout << m.label << ": spectral radius " << m.forecast->spectral_radius
                  << (m.forecast->stable ? " (stable)" : " (UNSTABLE)")
                  << ", scenario: " << m.forecast->scenario.provenance << "\n";
    }
    render_report(report, ReportFormat::CsvBundle, cfg.out_dir);
    return 0;
}

BoundsCase parse_case(const std::string& s) {
    if (s == "II") return BoundsCase::II;
    if (s == "III") return BoundsCase::III;
    if (s == "IV") return BoundsCase::IV;
    if (s == "V") return BoundsCase::V;
    throw InvalidConfig("bounds case must be II|III|IV|V");
}

int cmd_simulate_cv(int k, const std::string& case_name, int T, int reps, std::uint64_t seed,
                    const std::string& out_path) {
    auto bounds = simulate_pss_cv(k, parse_case(case_name), T, reps, seed);
    std::ostringstream csv;
    csv << "# simulated bounds critical values\n";
    csv << "# k=" << k << " case=" << case_name << " T=" << T << " reps=" << reps
        << " seed=" << seed << "\n";
    csv << "# rng: " << kRngAlgorithm << "\n";
    csv << "level,i0,i1\n";
    for (const auto& [level, pair] : bounds) {
        char buf[80];
        std::snprintf(buf, sizeof(buf), "%g,%.4f,%.4f\n", level, pair.i0, pair.i1);
        csv << buf;
    }
    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw IoError("cannot open '" + out_path + "'");
        out << csv.str();
        std::cout << out_path << "\n";
    }
    return 0;
}

int cmd_simulate_power(const std::string& test, const std::string& dgp_name, int T, int reps,
                       std::uint64_t seed, const std::string& theta_csv, double adjustment,
                       double noise_sd, const std::string& ar_csv, int n_series,
                       const std::string& out_path) {
    DgpConfig dgp;
    dgp.T = T;
    if (dgp_name == "rw") {
        dgp.kind = DgpConfig::Kind::IndependentRandomWalks;
        dgp.n_series = n_series;
    } else if (dgp_name == "coint") {
        dgp.kind = DgpConfig::Kind::CointegratedArdl;
        dgp.adjustment = adjustment;
        dgp.noise_sd = noise_sd;
        std::stringstream ss(theta_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) dgp.theta.push_back(std::stod(tok));
    } else if (dgp_name == "arx") {
        dgp.kind = DgpConfig::Kind::StableArx;
        dgp.noise_sd = noise_sd;
        if (!ar_csv.empty()) {
            std::stringstream ss(ar_csv);
            std::string tok;
            while (std::getline(ss, tok, ',')) dgp.ar_coeffs.push_back(std::stod(tok));
        }
        dgp.exog_coeffs.assign(static_cast<std::size_t>(std::max(0, n_series - 1)), 0.5);
    } else {
        throw InvalidConfig("dgp must be rw|coint|arx");
    }

    RejectionTable table = power_study(test, dgp, reps, seed);
    std::ostringstream csv;
    csv << "# rejection-rate study\n";
    csv << "# test=" << test << " dgp=" << dgp_name << " T=" << T << " reps=" << reps
        << " seed=" << seed << " failures=" << table.failures << "\n";
    csv << "# rng: " << table.rng << "\n";
    csv << "level,rejection_rate\n";
    for (const auto& [level, freq] : table.rejection_by_level) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%g,%.6f\n", level, freq);
        csv << buf;
    }
    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw IoError("cannot open '" + out_path + "'");
        out << csv.str();
        std::cout << out_path << "\n";
    }
    return 0;
}

int cmd_report(const CommonArgs& args) {
    PipelineConfig cfg = load_config(args);
    RunReport report = run_pipeline(cfg);
    render_report(report, ReportFormat::Text, cfg.out_dir);
    render_report(report, ReportFormat::Json, cfg.out_dir);
    render_report(report, ReportFormat::CsvBundle, cfg.out_dir);
    std::cout << report_to_text(report);
    std::cout << "\nreports written to " << cfg.out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ARDL bounds-testing toolkit"};
    app.require_subcommand(1);

    CommonArgs ingest_args, adf_args, fit_args, bounds_args, diag_args, stab_args, fc_args,
        report_args;

    auto* ingest = app.add_subcommand("ingest", "load data, build variables, print statistics");
    add_common(ingest, ingest_args);

    auto* adf = app.add_subcommand("adf", "unit-root pretests per variable");
    add_common(adf, adf_args);

    auto* fit = app.add_subcommand("fit", "select order, estimate, long-run and ECM tables");
    add_common(fit, fit_args);
    std::string fit_psi, fit_criterion;
    int fit_max_lag = 0;
    fit->add_option("--psi", fit_psi, "use a single payment-innovation proxy");
    fit->add_option("--max-lag", fit_max_lag, "override the model max lag");
    fit->add_option("--criterion", fit_criterion, "aic | bic")
        ->check(CLI::IsMember({"aic", "bic"}));

    auto* bounds = app.add_subcommand("bounds", "bounds F test for cointegration");
    add_common(bounds, bounds_args);
    bool bounds_h0_dummies = false;
    bounds->add_flag("--h0-with-dummies", bounds_h0_dummies,
                     "restrict indicator variables too (tabulated bounds approximate)");

    auto* diagnose = app.add_subcommand("diagnose", "residual diagnostic battery");
    add_common(diagnose, diag_args);

    auto* stability = app.add_subcommand("stability", "CUSUM / CUSUM-of-squares paths");
    add_common(stability, stab_args);

    auto* forecast = app.add_subcommand("forecast", "dynamic out-of-sample forecast");
    add_common(forecast, fc_args);
    int fc_horizon = 0;
    std::string fc_scenario;
    forecast->add_option("--horizon", fc_horizon, "months ahead");
    forecast->add_option("--scenario", fc_scenario, "hold-last | drift | CSV path");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo studies");
    simulate->require_subcommand(1);
    auto* sim_cv = simulate->add_subcommand("cv", "simulate bounds critical values");
    int cv_k = 1, cv_T = 1000, cv_reps = 20000;
    std::uint64_t cv_seed = 1;
    std::string cv_case = "III", cv_out;
    sim_cv->add_option("--k", cv_k, "level regressors excluding the dependent")->required();
    sim_cv->add_option("--case", cv_case, "II | III | IV | V");
    sim_cv->add_option("--T", cv_T, "sample length");
    sim_cv->add_option("--reps", cv_reps, "replications");
    sim_cv->add_option("--seed", cv_seed, "base seed");
    sim_cv->add_option("--out", cv_out, "write CSV here instead of stdout");

    auto* sim_power = simulate->add_subcommand("power", "size/power study for a named test");
    std::string pw_test, pw_dgp = "rw", pw_theta = "1.0", pw_ar = "0.5", pw_out;
    int pw_T = 300, pw_reps = 1000, pw_n = 2;
    double pw_adj = -0.2, pw_noise = 1.0;
    std::uint64_t pw_seed = 1;
    sim_power->add_option("--test", pw_test, "bounds|adf|bg|bp|arch|jb|reset")->required();
    sim_power->add_option("--dgp", pw_dgp, "rw | coint | arx");
    sim_power->add_option("--T", pw_T, "sample length");
    sim_power->add_option("--reps", pw_reps, "replications");
    sim_power->add_option("--seed", pw_seed, "base seed");
    sim_power->add_option("--theta", pw_theta, "coint: long-run vector, comma separated");
    sim_power->add_option("--adjustment", pw_adj, "coint: adjustment in (-1,0)");
    sim_power->add_option("--noise-sd", pw_noise, "innovation scale");
    sim_power->add_option("--ar", pw_ar, "arx: AR coefficients, comma separated");
    sim_power->add_option("--n-series", pw_n, "rw: series count; arx: 1 + exogenous count");
    sim_power->add_option("--out", pw_out, "write CSV here instead of stdout");

    auto* report = app.add_subcommand("report", "full pipeline: all stages, all formats");
    add_common(report, report_args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ingest) return cmd_ingest(ingest_args);
        if (*adf) return cmd_adf(adf_args);
        if (*fit) {
            PipelineConfig cfg = load_config(fit_args);
            if (!fit_psi.empty()) cfg.psi_candidates = {fit_psi};
            if (fit_max_lag > 0) cfg.model.max_lag = fit_max_lag;
            if (fit_criterion == "aic") cfg.model.criterion = Criterion::Aic;
            if (fit_criterion == "bic") cfg.model.criterion = Criterion::Bic;
            RunReport rep = run_pipeline(cfg, StageSelection::through_models());
            emit(rep, cfg, fit_args.format);
            return 0;
        }
        if (*bounds) return cmd_models(bounds_args, false, bounds_h0_dummies);
        if (*diagnose) return cmd_models(diag_args, true);
        if (*stability) return cmd_stability(stab_args);
        if (*forecast) return cmd_forecast(fc_args, fc_horizon, fc_scenario);
        if (*sim_cv) return cmd_simulate_cv(cv_k, cv_case, cv_T, cv_reps, cv_seed, cv_out);
        if (*sim_power)
            return cmd_simulate_power(pw_test, pw_dgp, pw_T, pw_reps, pw_seed, pw_theta, pw_adj,
                                      pw_noise, pw_ar, pw_n, pw_out);
        if (*report) return cmd_report(report_args);
    } catch (const I2Detected& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const InvalidConfig& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MissingFile& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownSeries& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
