#include <cmath>
#include <string>

#include <doctest.h>

#include "ordfuzz/pipeline.hpp"

using namespace ordfuzz;

namespace {

const char* kGradesConfig = R"({
  "columns": [
    {"name": "math", "labels": ["Poor", "Fair", "Good", "Excellent"]},
    {"name": "physics", "labels": ["Poor", "Fair", "Good", "Excellent"]}
  ]
})";

// Counts per rank: math (2,3,4,1), physics (1,2,3,4). Fitting this dataset
// reproduces the worked example: math centers 0.10/0.35/0.70/0.95 and
// physics centers 0.05/0.20/0.45/0.80.
const char* kGradesCsv =
    "math,physics\n"
    "Poor,Poor\n"
    "Poor,Fair\n"
    "Fair,Fair\n"
    "Fair,Good\n"
    "Fair,Good\n"
    "Good,Good\n"
    "Good,Excellent\n"
    "Good,Excellent\n"
    "Good,Excellent\n"
    "Excellent,Excellent\n";

ScaleConfig grades_config() { return parse_config(kGradesConfig); }

}  // namespace

TEST_CASE("parse_config reads columns and options") {
    const ScaleConfig config = parse_config(R"({
      "columns": [{"name": "a", "labels": ["x", "y"], "probs": [0.5, 0.5]}],
      "smoothing": 0.25,
      "metric": "manhattan",
      "seed": 7,
      "baseline": {"beta": 2.5, "tol": 1e-6, "max_iter": 50, "encoding": "ranks", "init": "random"}
    })");
    CHECK(config.columns.size() == 1);
    CHECK(config.columns[0].probs == std::vector<double>{0.5, 0.5});
    CHECK(config.smoothing == 0.25);
    CHECK(config.metric == Metric::manhattan);
    CHECK(config.seed == 7);
    CHECK(config.baseline.beta == 2.5);
    CHECK(config.baseline.encoding == BaselineEncoding::ranks);
    CHECK(config.baseline.init == FcmInit::random);
}

TEST_CASE("parse_config rejects malformed documents") {
    CHECK_THROWS_AS(parse_config("not json"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"columns": []})"), ConfigError);
    // Duplicate labels on one scale.
    CHECK_THROWS_AS(parse_config(R"({"columns": [{"name":"a","labels":["x","x"]}]})"),
                    ConfigError);
    // Rank counts differ between columns.
    CHECK_THROWS_AS(parse_config(R"({"columns": [
        {"name":"a","labels":["x","y"]}, {"name":"b","labels":["x","y","z"]}]})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"columns": [{"name":"a","labels":["x","y"]}],
                                     "metric": "cosine"})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"columns": [{"name":"a","labels":["x","y"]}],
                                     "typo_key": 1})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"columns": [{"name":"a","labels":["x","y"]}],
                                     "baseline": {"beta": 0.5}})"),
                    ConfigError);
}

TEST_CASE("config_hash is canonical and sensitive to content") {
    const ScaleConfig a = parse_config(kGradesConfig);
    const ScaleConfig b = parse_config(
        "{\"columns\":[{\"name\":\"math\",\"labels\":[\"Poor\",\"Fair\",\"Good\",\"Excellent\"]},"
        "{\"name\":\"physics\",\"labels\":[\"Poor\",\"Fair\",\"Good\",\"Excellent\"]}]}");
    CHECK(config_hash(a) == config_hash(b));  // whitespace does not matter

    ScaleConfig c = a;
    c.smoothing = 0.5;
    CHECK(config_hash(a) != config_hash(c));
}

TEST_CASE("ingest_csv maps labels through the configured order") {
    const ScaleConfig config = grades_config();
    const Dataset data = ingest_csv("math,physics\nFair,Excellent\nExcellent,Poor\n", config);
    CHECK(data.n_obs == 2);
    CHECK(data.rank(0, 0) == 2);
    CHECK(data.rank(0, 1) == 4);
    CHECK(data.rank(1, 0) == 4);
    CHECK(data.rank(1, 1) == 1);
}

TEST_CASE("ingest_csv ignores extra columns and handles quoting") {
    const ScaleConfig config = grades_config();
    const Dataset data = ingest_csv(
        "id,math,comment,physics\n"
        "1,Fair,\"likes, commas\",Good\n"
        "2,\"Poor\",plain,\"Excellent\"\n",
        config);
    CHECK(data.n_obs == 2);
    CHECK(data.rank(0, 0) == 2);
    CHECK(data.rank(0, 1) == 3);
    CHECK(data.rank(1, 0) == 1);
    CHECK(data.rank(1, 1) == 4);
}

TEST_CASE("ingest_csv reports precise failures") {
    const ScaleConfig config = grades_config();

    try {
        ingest_csv("math,physics\nFair,Awesome\n", config);
        FAIL("expected IngestError");
    } catch (const IngestError& err) {
        const std::string message = err.what();
        CHECK(message.find("row 1") != std::string::npos);
        CHECK(message.find("physics") != std::string::npos);
        CHECK(message.find("Awesome") != std::string::npos);
    }

    CHECK_THROWS_AS(ingest_csv("math,physics\n", config), IngestError);   // no data rows
    CHECK_THROWS_AS(ingest_csv("", config), IngestError);                 // empty input
    CHECK_THROWS_AS(ingest_csv("math\nFair\n", config), ConfigError);     // missing column
    CHECK_THROWS_AS(ingest_csv("math,physics\nFair\n", config), IngestError);  // short row
}

TEST_CASE("report rows serialize in the documented CSV shape") {
    const ScaleConfig config = grades_config();
    const Dataset data = ingest_csv(kGradesCsv, config);
    const Report report = cluster_report(data, config);

    const std::string csv = emit_report(report, ReportFormat::csv);
    CHECK(csv.find("# algo=mbfcm\n") != std::string::npos);
    CHECK(csv.find("\n3,crisp,2,1.000000\n") != std::string::npos);
    CHECK(csv.find("\n4,fuzzy,2:0.662162,3:0.337838\n") != std::string::npos);
    CHECK(csv.find("# config_hash=" + report.config_hash) != std::string::npos);

    // Emitting twice yields identical bytes.
    CHECK(csv == emit_report(report, ReportFormat::csv));
}

TEST_CASE("JSON reports round-trip losslessly") {
    const ScaleConfig config = grades_config();
    const Dataset data = ingest_csv(kGradesCsv, config);
    const Report report = compare_report(data, config);

    const std::string text = emit_report(report, ReportFormat::json);
    const Report back = parse_report(text);

    CHECK(back.config_hash == report.config_hash);
    CHECK(back.seed == report.seed);
    CHECK(back.smoothing == report.smoothing);
    CHECK(back.metric == report.metric);
    REQUIRE(back.baseline.has_value());
    CHECK(back.baseline->beta == report.baseline->beta);

    REQUIRE(back.model.n_dims() == report.model.n_dims());
    for (std::size_t i = 0; i < report.model.n_dims(); ++i) {
        CHECK(back.model.tables[i].rel_freq == report.model.tables[i].rel_freq);
        CHECK(back.model.tables[i].centers == report.model.tables[i].centers);
        CHECK(back.model.tables[i].cumulative == report.model.tables[i].cumulative);
        CHECK(back.model.scales[i].labels == report.model.scales[i].labels);
    }
    CHECK(back.model.centroids.coords == report.model.centroids.coords);

    REQUIRE(back.mbfcm.size() == report.mbfcm.size());
    REQUIRE(back.fcm.size() == report.fcm.size());
    for (std::size_t k = 0; k < report.mbfcm.size(); ++k) {
        CHECK(back.mbfcm[k].obs_index == report.mbfcm[k].obs_index);
        CHECK(back.mbfcm[k].mode == report.mbfcm[k].mode);
        CHECK(back.mbfcm[k].entries == report.mbfcm[k].entries);
        CHECK(back.mbfcm[k].adjacency_override == report.mbfcm[k].adjacency_override);
    }
    for (const MembershipRow& row : back.fcm) {
        double sum = 0.0;
        for (const auto& [cluster, weight] : row.entries) sum += weight;
        CHECK(std::abs(sum - 1.0) <= 1e-9);
    }
}

TEST_CASE("compare reports carry both rows for every observation") {
    const ScaleConfig config = grades_config();
    const Dataset data = ingest_csv(kGradesCsv, config);
    const Report report = compare_report(data, config);

    REQUIRE(report.mbfcm.size() == data.n_obs);
    REQUIRE(report.fcm.size() == data.n_obs);
    for (std::size_t k = 0; k < data.n_obs; ++k) {
        const MembershipRow* pair_row = report.mbfcm_row(k);
        const MembershipRow* full_row = report.fcm_row(k);
        REQUIRE(pair_row != nullptr);
        REQUIRE(full_row != nullptr);
        CHECK(pair_row->entries.size() <= 2);
        CHECK(full_row->entries.size() == 4);
    }
}

TEST_CASE("compare can run the baseline on raw ranks") {
    ScaleConfig config = grades_config();
    config.baseline.encoding = BaselineEncoding::ranks;
    const Dataset data = ingest_csv(kGradesCsv, config);
    const Report report = compare_report(data, config);

    REQUIRE(report.fcm.size() == data.n_obs);
    for (const MembershipRow& row : report.fcm) {
        CHECK(row.mode == MembershipRow::Mode::full);
        CHECK(row.entries.size() == 4);
    }
    const std::string csv = emit_report(report, ReportFormat::csv);
    CHECK(csv.find("# algo=fcm encoding=ranks\n") != std::string::npos);
}

TEST_CASE("plot data lists knots, zone edges and thresholds") {
    const ScaleConfig config = grades_config();
    const Dataset data = ingest_csv(kGradesCsv, config);
    const Report report = fit_report(data, config);

    const std::string csv = emit_plot_data(report.model);
    CHECK(csv.rfind("dim,name,rank,label,f,center,support_lo,support_hi,zone_lo,zone_hi,alpha_left,alpha_right\n", 0) == 0);
    for (const char* needle : {"0.100000", "0.350000", "0.700000", "0.950000",  // math centers
                               "0.200000", "0.500000", "0.900000"}) {           // math zone edges
        CHECK(csv.find(needle) != std::string::npos);
    }
    CHECK(csv.find("Excellent") != std::string::npos);

    // Minimal scale: exactly two plateau functions.
    const ScaleConfig two = parse_config(R"({"columns": [{"name": "c", "labels": ["lo", "hi"]}]})");
    const Dataset small = ingest_csv("c\nlo\nhi\nlo\n", two);
    const std::string small_csv = emit_plot_data(fit_report(small, two).model);
    std::size_t lines = 0;
    for (char ch : small_csv) lines += ch == '\n';
    CHECK(lines == 3);  // header + one row per rank

    // Uniform frequencies produce mirror-symmetric knots.
    const ScaleConfig uniform = parse_config(R"({
      "columns": [{"name": "c", "labels": ["a", "b", "d", "e"]}]})");
    const Dataset balanced = ingest_csv("c\na\nb\nd\ne\n", uniform);
    const FuzzyModel model = fit_report(balanced, uniform).model;
    const FrequencyTable& table = model.tables[0];
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(table.centers[j] + table.centers[3 - j] == doctest::Approx(1.0).epsilon(1e-12));
        const Interval& zone = model.zone_specs[0].zones[j].interval;
        const Interval& mirror = model.zone_specs[0].zones[3 - j].interval;
        CHECK(zone.lo + mirror.hi == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("model summary table lists counts and statistics") {
    const ScaleConfig config = grades_config();
    const Dataset data = ingest_csv(kGradesCsv, config);
    const Report report = fit_report(data, config);
    const std::string csv = emit_model_summary(report.model);
    CHECK(csv.rfind("dim,name,rank,label,count,f,c,F,zone_lo,zone_hi,alpha_left,alpha_right\n", 0) == 0);
    CHECK(csv.find("1,math,2,Fair,3,0.300000,0.350000,0.350000,0.200000,0.500000,") !=
          std::string::npos);
}

TEST_CASE("synth_dataset reproduces the requested frequencies") {
    const ScaleConfig config = parse_config(R"({
      "columns": [
        {"name": "a", "labels": ["r1", "r2", "r3", "r4"], "probs": [0.25, 0.25, 0.25, 0.25]},
        {"name": "b", "labels": ["r1", "r2", "r3", "r4"], "probs": [0.25, 0.25, 0.25, 0.25]}
      ]
    })");
    const SynthResult synth = synth_dataset(config, 4000, 99);
    CHECK(synth.data.n_obs == 4000);

    for (std::size_t i = 0; i < 2; ++i) {
        std::vector<int> tally(4, 0);
        for (std::size_t k = 0; k < synth.data.n_obs; ++k) ++tally[synth.data.rank(k, i) - 1];
        for (int count : tally) {
            CHECK(std::abs(count / 4000.0 - 0.25) < 0.05);
        }
    }

    // Determinism: identical bytes for the same seed.
    CHECK(synth.csv == synth_dataset(config, 4000, 99).csv);
    CHECK(synth.csv != synth_dataset(config, 4000, 100).csv);
}

TEST_CASE("synth_dataset validates its inputs") {
    const ScaleConfig no_probs = grades_config();
    CHECK_THROWS_AS(synth_dataset(no_probs, 10, 1), ConfigError);

    const ScaleConfig bad_sum = parse_config(R"({
      "columns": [{"name": "a", "labels": ["x", "y"], "probs": [0.5, 0.6]}]
    })");
    CHECK_THROWS_AS(synth_dataset(bad_sum, 10, 1), ConfigError);

    const ScaleConfig good = parse_config(R"({
      "columns": [{"name": "a", "labels": ["x", "y"], "probs": [0.5, 0.5]}]
    })");
    CHECK_THROWS_AS(synth_dataset(good, 0, 1), ConfigError);
}

TEST_CASE("ingesting an emitted synthetic CSV reproduces the dataset") {
    const ScaleConfig config = parse_config(R"({
      "columns": [
        {"name": "a", "labels": ["u", "v", "w"], "probs": [0.3, 0.4, 0.3]},
        {"name": "b", "labels": ["u", "v", "w"], "probs": [0.2, 0.3, 0.5]}
      ]
    })");
    const SynthResult synth = synth_dataset(config, 200, 7);
    const Dataset round = ingest_csv(synth.csv, config);
    CHECK(round.n_obs == synth.data.n_obs);
    CHECK(round.ranks == synth.data.ranks);
}
