#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <sys/stat.h>

#include "ardl/report.hpp"
#include "ardl/rng.hpp"
#include "ardl/sim.hpp"

using namespace ardl;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Minimal structural validator for the subset of JSON Schema the shipped
// schema uses: type, required, properties, items, #/definitions refs.
void validate_schema_impl(const json& value, const json& schema, const json& root,
                          const std::string& where, std::vector<std::string>& errors);

void validate_schema(const json& value, const json& schema, const std::string& where,
                     std::vector<std::string>& errors) {
    validate_schema_impl(value, schema, schema, where, errors);
}

void validate_schema_impl(const json& value, const json& schema_in, const json& root,
                          const std::string& where, std::vector<std::string>& errors) {
    json schema = schema_in;
    if (schema.contains("$ref")) {
        const std::string ref = schema["$ref"].get<std::string>();
        const std::string prefix = "#/definitions/";
        REQUIRE(ref.rfind(prefix, 0) == 0);
        schema = root.at("definitions").at(ref.substr(prefix.size()));
    }
    if (schema.contains("type")) {
        const std::string type = schema["type"].get<std::string>();
        const bool ok = (type == "object" && value.is_object()) ||
                        (type == "array" && value.is_array()) ||
                        (type == "string" && value.is_string()) ||
                        (type == "number" && value.is_number()) ||
                        (type == "integer" && value.is_number_integer()) ||
                        (type == "boolean" && value.is_boolean());
        if (!ok) errors.push_back(where + ": expected " + type);
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"])
            if (!value.contains(key.get<std::string>()))
                errors.push_back(where + ": missing required key " + key.get<std::string>());
    if (schema.contains("properties") && value.is_object())
        for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
            if (value.contains(it.key()))
                validate_schema_impl(value[it.key()], it.value(), root, where + "." + it.key(),
                                     errors);
    if (schema.contains("items") && value.is_array())
        for (std::size_t i = 0; i < value.size(); ++i)
            validate_schema_impl(value[i], schema["items"], root,
                                 where + "[" + std::to_string(i) + "]", errors);
}

std::string write_test_dataset(const std::string& dir) {
    DgpConfig cfg;
    cfg.kind = DgpConfig::Kind::CointegratedArdl;
    cfg.theta = {1.8, -0.3, 0.5};
    cfg.adjustment = -0.25;
    cfg.T = 140;
    cfg.seed = 20240131;
    Dataset d = gen_dgp(cfg);
    d.add(make_dummy("shock", d.start(), d.length(),
                     RegimeFrom{d.start().plus_months(90)}));
    const std::string path = dir + "/data.csv";
    write_csv(d, path);
    return path;
}

std::string config_json(const std::string& data_path, int horizon,
                        const std::string& extra_model_key = "") {
    std::string psi = R"json("psi_candidates": ["x2", "x3"],)json";
    return std::string(R"json({
  "data": ")json") + data_path + R"json(",
  "model": {
    "dependent": "y",
    "regressors": ["x1", "psi"],
    "fixed": [{"name": "shock", "lags": 0}],
    "max_lag": 2,
    "criterion": "aic"
  },
)json" + psi + extra_model_key + R"json(
  "adf": {"max_lag": 6},
  "forecast": {"horizon": )json" + std::to_string(horizon) + R"json(},
  "seed": 7,
  "out": "."
})json";
}

}  // namespace

TEST_CASE("pipeline end to end with psi expansion") {
    const std::string dir = "/tmp/ardl_report_test";
    mkdir(dir.c_str(), 0755);
    const std::string data = write_test_dataset(dir);
    PipelineConfig cfg = PipelineConfig::from_json_text(config_json(data, 6), "test");
    RunReport report = run_pipeline(cfg);

    REQUIRE(report.models.size() == 2);
    CHECK(report.models[0].psi == "x2");
    CHECK(report.models[1].psi == "x3");
    CHECK(!report.stats.empty());
    CHECK(report.unit_roots.size() == report.stats.size());
    for (const auto& m : report.models) {
        CHECK(m.bounds.k == 2);
        CHECK(m.long_run.coefficients.size() == 2);
        CHECK(m.ecm.ect_coefficient ==
              doctest::Approx(m.cecm.adjustment_coefficient()).epsilon(1e-8));
        CHECK(m.diagnostics.size() == 4);
        REQUIRE(m.forecast.has_value());
        CHECK(m.forecast->point.size() == 6);
        CHECK(m.nobs > 0);
        CHECK(!m.levels_table.empty());
    }

    // strongly cointegrated DGP: the bounds test should find the relation
    CHECK(report.models[0].bounds.decisions.at(0.05) == CointDecision::Cointegrated);

    SUBCASE("JSON round trip is byte-stable") {
        const std::string text = report_to_json(report);
        RunReport parsed = report_from_json(text);
        CHECK(report_to_json(parsed) == text);
    }

    SUBCASE("rendering is deterministic") {
        RunReport again = run_pipeline(cfg);
        CHECK(report_to_json(again) == report_to_json(report));
        CHECK(report_to_text(again) == report_to_text(report));
    }

    SUBCASE("rendered files exist and carry headers") {
        auto paths = render_report(report, ReportFormat::CsvBundle, dir);
        CHECK(paths.size() >= 10);
        const std::string stats = slurp(dir + "/stats.csv");
        CHECK(stats.rfind("variable,mean,min,max,std_dev", 0) == 0);
        const std::string cusum_csv = slurp(dir + "/cusum_model1.csv");
        CHECK(cusum_csv.rfind("t,path,lower,upper", 0) == 0);

        render_report(report, ReportFormat::Text, dir);
        const std::string text = slurp(dir + "/report.txt");
        CHECK(text.find("Bounds test") != std::string::npos);
        CHECK(text.find("ECT(-1)") != std::string::npos);
        CHECK(text.find("[0.") != std::string::npos);  // bracketed p-values

        render_report(report, ReportFormat::Json, dir);
        CHECK(json::parse(slurp(dir + "/report.json")).contains("models"));
    }

    SUBCASE("report validates against the shipped schema") {
        const json schema = json::parse(slurp(std::string(ARDL_SOURCE_DIR) +
                                              "/docs/report.schema.json"));
        const json doc = json::parse(report_to_json(report));
        std::vector<std::string> errors;
        validate_schema(doc, schema, "$", errors);
        for (const auto& e : errors) MESSAGE(e);
        CHECK(errors.empty());
    }
}

TEST_CASE("pipeline validates before computing") {
    const std::string dir = "/tmp/ardl_report_test";
    mkdir(dir.c_str(), 0755);
    const std::string data = write_test_dataset(dir);
    std::string bad = config_json(data, 0);
    bad.replace(bad.find("\"x1\""), 4, "\"zz\"");
    PipelineConfig cfg = PipelineConfig::from_json_text(bad, "test");
    CHECK_THROWS_AS(run_pipeline(cfg), UnknownSeries);
}

TEST_CASE("horizon zero skips the forecast stage") {
    const std::string dir = "/tmp/ardl_report_test";
    mkdir(dir.c_str(), 0755);
    const std::string data = write_test_dataset(dir);
    PipelineConfig cfg = PipelineConfig::from_json_text(config_json(data, 0), "test");
    RunReport report = run_pipeline(cfg);
    for (const auto& m : report.models) CHECK(!m.forecast.has_value());
    const std::string text = report_to_json(report);
    CHECK(text.find("\"forecast\"") == std::string::npos);
}

TEST_CASE("pipeline aborts on an I(2) variable") {
    const std::string dir = "/tmp/ardl_report_test";
    mkdir(dir.c_str(), 0755);
    Rng rng(5150);
    Dataset d;
    Series dbl{"y", {2000, 1}, {}}, x{"x1", {2000, 1}, {}};
    double level = 0.0, cum = 0.0, xl = 0.0;
    for (int t = 0; t < 200; ++t) {
        level += rng.next_normal();
        cum += level;
        dbl.values.push_back(cum);  // integrated twice
        xl += rng.next_normal();
        x.values.push_back(xl);
    }
    d.add(dbl);
    d.add(x);
    const std::string path = dir + "/i2.csv";
    write_csv(d, path);

    const std::string cfg_text = std::string(R"json({
  "data": ")json") + path + R"json(",
  "model": {"dependent": "y", "regressors": ["x1"], "max_lag": 2}
})json";
    PipelineConfig cfg = PipelineConfig::from_json_text(cfg_text, "test");
    CHECK_THROWS_AS(run_pipeline(cfg), I2Detected);
}

TEST_CASE("config parsing errors carry context") {
    CHECK_THROWS_AS(PipelineConfig::from_json_text("{not json", "origin"), InvalidConfig);
    CHECK_THROWS_AS(PipelineConfig::from_json_text("{}", "origin"), InvalidConfig);
    CHECK_THROWS_AS(PipelineConfig::from_json_file("/nonexistent.json"), MissingFile);
}

TEST_CASE("fnv1a is stable") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") != fnv1a_hex("b"));
}
