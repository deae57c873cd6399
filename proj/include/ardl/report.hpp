#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ardl/ardl_model.hpp"
#include "ardl/bounds.hpp"
#include "ardl/checks.hpp"
#include "ardl/csv.hpp"
#include "ardl/forecast.hpp"
#include "ardl/unit_root.hpp"

namespace ardl {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchemaVersion = "1";

/// Declarative description of a full pipeline run, loaded from a JSON config
/// file. Defaults are explicit in the rendered provenance so reports are
/// self-describing.
struct PipelineConfig {
    std::string data_path;
    std::string date_column = "date";

    struct RatioRule {
        std::string name, numerator, denominator;
    };
    std::vector<RatioRule> ratios;

    struct DummyDef {
        std::string name;
        DummyRule rule;
    };
    std::vector<DummyDef> dummies;

    std::vector<std::string> log_vars;  // each becomes "L" + name

    ModelSpec model;  // regressors may contain the placeholder "psi"
    std::vector<std::string> psi_candidates;

    BoundsCase bounds_case = BoundsCase::III;
    bool h0_with_dummies = false;  // include indicators in the bounds restriction

    struct AdfConfig {
        Deterministic deterministic = Deterministic::Constant;
        LagSelection selection = LagSelection::aic();
        int max_lag = -1;  // Schwert default
        double level = 0.05;
        std::vector<std::string> variables;  // empty = model variables
    } adf;

    struct DiagnosticsConfig {
        int bg_lags = 12;
        HetKind het = HetKind::BreuschPagan;
        int arch_lags = 1;
        std::vector<int> reset_powers{2, 3};
    } diagnostics;

    double stability_level = 0.05;

    struct ForecastConfig {
        int horizon = 0;  // 0 disables the stage
        std::string scenario = "hold-last";  // "hold-last" | "drift" | CSV path
        std::map<std::string, double> drift;
    } forecast;

    std::uint64_t seed = 0;
    std::string out_dir = ".";

    static PipelineConfig from_json_file(const std::string& path);
    static PipelineConfig from_json_text(const std::string& text, const std::string& origin);
    [[nodiscard]] std::string canonical_json() const;
};

struct ModelReport {
    std::string label;
    std::string psi;  // substituted proxy, empty when none
    ArdlOrder order;
    ArdlFit levels;   // full fit objects for programmatic use; not serialized
    CecmFit cecm;
    BoundsResult bounds;
    LongRunResult long_run;
    EcmResult ecm;
    FStatResult regression_f;  // joint significance of all non-constant terms
    std::vector<TestResult> diagnostics;
    StabilityResult cusum_result;
    StabilityResult cusumsq_result;
    std::optional<Forecast> forecast;
    std::vector<std::string> warnings;

    // serialized summaries (everything rendering needs)
    std::string sample_start;  // "YYYY-MM"
    long nobs = 0;
    std::vector<LongRunCoefficient> levels_table;  // levels-fit coefficient table
    double cecm_r_squared = 0.0;
    double cecm_adj_r_squared = 0.0;
};

struct RunReport {
    std::vector<std::pair<std::string, StatsSummary>> stats;
    std::vector<std::pair<std::string, IntegrationOrder>> unit_roots;
    std::vector<ModelReport> models;

    // provenance
    std::string tool_version;
    std::string rng;
    std::string config_hash;
    std::uint64_t seed = 0;
};

enum class ReportFormat { Text, Json, CsvBundle };

/// Which pipeline stages to run; the partial CLI subcommands switch the
/// later stages off.
struct StageSelection {
    bool unit_roots = true;
    bool models = true;  // order selection, estimation, bounds, long run, ECM
    bool diagnostics = true;
    bool stability = true;
    bool forecast = true;  // additionally gated by a positive horizon

    static StageSelection stats_only() { return {false, false, false, false, false}; }
    static StageSelection through_adf() { return {true, false, false, false, false}; }
    static StageSelection through_models() { return {false, true, false, false, false}; }
};

/// Execute the pipeline in the workflow order: descriptive statistics,
/// unit-root pretests (aborting on any I(2+) variable), order selection,
/// estimation, bounds test, long-run and error-correction estimates,
/// diagnostics, stability, forecast.
RunReport run_pipeline(const PipelineConfig& cfg, const StageSelection& stages = {});

/// Build the working dataset: load, construct ratios and dummies, apply log
/// transforms. Exposed for the partial CLI subcommands.
Dataset prepare_dataset(const PipelineConfig& cfg);

/// Render to files under out_dir. Returns the paths written. Identical
/// reports render byte-identically.
std::vector<std::string> render_report(const RunReport& r, ReportFormat format,
                                       const std::string& out_dir);

/// JSON document for the whole report (schema docs/report.schema.json).
std::string report_to_json(const RunReport& r);
RunReport report_from_json(const std::string& text);

/// Human-readable report (tables shaped like the rendered JSON content).
std::string report_to_text(const RunReport& r);

/// FNV-1a 64-bit hash, printed as 16 hex digits; used for config provenance.
std::string fnv1a_hex(const std::string& text);

}  // namespace ardl
