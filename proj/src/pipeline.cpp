#include "ordfuzz/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include <json.hpp>

#include "csv.hpp"

namespace ordfuzz {

using nlohmann::json;
using detail::csv_escape;
using detail::fixed6;
using detail::full_precision;

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) throw ConfigError("unknown key '" + item.key() + "' in " + where);
    }
}

double require_number(const json& obj, const char* key, double fallback,
                      const std::string& where) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number()) throw ConfigError(std::string(key) + " in " + where + " must be a number");
    return obj[key].get<double>();
}

std::string mode_name(MembershipRow::Mode mode) {
    switch (mode) {
        case MembershipRow::Mode::crisp: return "crisp";
        case MembershipRow::Mode::fuzzy_pair: return "fuzzy";
        case MembershipRow::Mode::full: return "full";
    }
    return "crisp";
}

MembershipRow::Mode mode_from_name(const std::string& name) {
    if (name == "crisp") return MembershipRow::Mode::crisp;
    if (name == "fuzzy") return MembershipRow::Mode::fuzzy_pair;
    if (name == "full") return MembershipRow::Mode::full;
    throw ConfigError("unknown membership mode '" + name + "' in report");
}

json rows_to_json(const std::vector<MembershipRow>& rows) {
    json out = json::array();
    for (const MembershipRow& row : rows) {
        json entries = json::array();
        for (const auto& [cluster, weight] : row.entries) {
            entries.push_back(json::array({cluster, weight}));
        }
        out.push_back({{"obs", row.obs_index + 1},
                       {"mode", mode_name(row.mode)},
                       {"entries", std::move(entries)},
                       {"adjacency_override", row.adjacency_override}});
    }
    return out;
}

std::vector<MembershipRow> rows_from_json(const json& arr) {
    std::vector<MembershipRow> rows;
    rows.reserve(arr.size());
    for (const json& item : arr) {
        MembershipRow row;
        row.obs_index = item.at("obs").get<std::size_t>() - 1;
        row.mode = mode_from_name(item.at("mode").get<std::string>());
        row.adjacency_override = item.value("adjacency_override", false);
        for (const json& entry : item.at("entries")) {
            row.entries.emplace_back(entry.at(0).get<int>(), entry.at(1).get<double>());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json double_or_null(double v) {
    if (std::isnan(v)) return nullptr;
    return v;
}

json model_to_json(const FuzzyModel& model) {
    json dims = json::array();
    for (std::size_t i = 0; i < model.n_dims(); ++i) {
        const FrequencyTable& table = model.tables[i];
        const InfluenceZoneSpec& spec = model.zone_specs[i];
        json dim;
        dim["name"] = model.scales[i].name;
        dim["labels"] = model.scales[i].labels;
        dim["counts"] = table.counts;
        dim["f"] = table.rel_freq;
        dim["c"] = table.centers;
        dim["F"] = table.cumulative;
        json zone_lo = json::array();
        json zone_hi = json::array();
        json alpha_left = json::array();
        json alpha_right = json::array();
        for (const auto& zone : spec.zones) {
            zone_lo.push_back(zone.interval.lo);
            zone_hi.push_back(zone.interval.hi);
            alpha_left.push_back(double_or_null(zone.alpha_left));
            alpha_right.push_back(double_or_null(zone.alpha_right));
        }
        dim["zone_lo"] = std::move(zone_lo);
        dim["zone_hi"] = std::move(zone_hi);
        dim["alpha_left"] = std::move(alpha_left);
        dim["alpha_right"] = std::move(alpha_right);
        dims.push_back(std::move(dim));
    }
    return json{{"dims", std::move(dims)}};
}

FuzzyModel model_from_json(const json& obj, double smoothing, Metric metric) {
    FuzzyModel model;
    model.smoothing = smoothing;
    model.metric = metric;
    for (const json& dim : obj.at("dims")) {
        OrdinalScale scale;
        scale.name = dim.at("name").get<std::string>();
        scale.labels = dim.at("labels").get<std::vector<std::string>>();
        model.scales.push_back(std::move(scale));

        FrequencyTable table;
        table.counts = dim.at("counts").get<std::vector<std::int64_t>>();
        table.rel_freq = dim.at("f").get<std::vector<double>>();
        table.centers = dim.at("c").get<std::vector<double>>();
        table.cumulative = dim.at("F").get<std::vector<double>>();
        model.tables.push_back(std::move(table));
    }
    // Zones and centroids are pure functions of the tables; rebuilding them
    // from the round-tripped doubles reproduces them bit for bit.
    for (const auto& table : model.tables) {
        model.zone_specs.push_back(influence_spec(table));
    }
    model.centroids = build_centroids(model.tables);
    return model;
}

json baseline_to_json(const BaselineConfig& baseline) {
    return json{{"beta", baseline.beta},
                {"tol", baseline.tol},
                {"max_iter", baseline.max_iter},
                {"encoding", to_string(baseline.encoding)},
                {"init", to_string(baseline.init)}};
}

BaselineConfig baseline_from_json(const json& obj, const std::string& where) {
    reject_unknown_keys(obj, {"beta", "tol", "max_iter", "encoding", "init"}, where);
    BaselineConfig baseline;
    baseline.beta = require_number(obj, "beta", baseline.beta, where);
    baseline.tol = require_number(obj, "tol", baseline.tol, where);
    if (obj.contains("max_iter")) baseline.max_iter = obj["max_iter"].get<int>();
    if (obj.contains("encoding")) {
        baseline.encoding = encoding_from_string(obj["encoding"].get<std::string>());
    }
    if (obj.contains("init")) baseline.init = init_from_string(obj["init"].get<std::string>());
    return baseline;
}

void append_row_lines(std::string& out, const std::vector<MembershipRow>& rows) {
    for (const MembershipRow& row : rows) {
        out += std::to_string(row.obs_index + 1);
        out += ',';
        out += mode_name(row.mode);
        if (row.mode == MembershipRow::Mode::crisp) {
            out += ',' + std::to_string(row.entries.front().first) + ',' +
                   fixed6(row.entries.front().second);
        } else {
            for (const auto& [cluster, weight] : row.entries) {
                out += ',' + std::to_string(cluster) + ':' + fixed6(weight);
            }
        }
        out += '\n';
    }
}

std::string join_fixed6(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ';';
        out += std::isnan(values[i]) ? "-" : fixed6(values[i]);
    }
    return out;
}

}  // namespace

std::string to_string(Metric metric) {
    return metric == Metric::euclidean ? "euclidean" : "manhattan";
}

std::string to_string(BaselineEncoding encoding) {
    return encoding == BaselineEncoding::fuzzified ? "fuzzified" : "ranks";
}

std::string to_string(FcmInit init) {
    return init == FcmInit::quantile ? "quantile" : "random";
}

Metric metric_from_string(const std::string& text) {
    if (text == "euclidean") return Metric::euclidean;
    if (text == "manhattan") return Metric::manhattan;
    throw ConfigError("unknown metric '" + text + "' (expected euclidean or manhattan)");
}

BaselineEncoding encoding_from_string(const std::string& text) {
    if (text == "fuzzified") return BaselineEncoding::fuzzified;
    if (text == "ranks") return BaselineEncoding::ranks;
    throw ConfigError("unknown baseline encoding '" + text + "' (expected fuzzified or ranks)");
}

FcmInit init_from_string(const std::string& text) {
    if (text == "quantile") return FcmInit::quantile;
    if (text == "random") return FcmInit::random;
    throw ConfigError("unknown init '" + text + "' (expected quantile or random)");
}

std::size_t ScaleConfig::rank_count() const {
    if (columns.empty()) throw ConfigError("config declares no columns");
    return columns.front().labels.size();
}

std::vector<OrdinalScale> ScaleConfig::scales() const {
    std::vector<OrdinalScale> out;
    out.reserve(columns.size());
    for (const ColumnConfig& column : columns) {
        out.push_back(OrdinalScale{column.name, column.labels});
    }
    return out;
}

void ScaleConfig::validate() const {
    if (columns.empty()) throw ConfigError("config declares no columns");
    const std::size_t m = columns.front().labels.size();
    for (const ColumnConfig& column : columns) {
        if (column.name.empty()) throw ConfigError("every column needs a name");
        OrdinalScale scale{column.name, column.labels};
        scale.validate();
        if (column.labels.size() != m) {
            throw ConfigError("column '" + column.name + "' declares " +
                              std::to_string(column.labels.size()) + " labels but column '" +
                              columns.front().name + "' declares " + std::to_string(m) +
                              "; all columns must share one rank count");
        }
    }
    if (!(smoothing >= 0.0)) throw ConfigError("smoothing must be nonnegative");
    if (!(baseline.beta > 1.0)) throw ConfigError("baseline beta must exceed 1");
    if (!(baseline.tol >= 0.0)) throw ConfigError("baseline tol must be nonnegative");
    if (baseline.max_iter < 1) throw ConfigError("baseline max_iter must be at least 1");
}

namespace {

ScaleConfig parse_config_object(const json& doc) {
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    reject_unknown_keys(doc, {"columns", "smoothing", "metric", "baseline", "seed"}, "config");
    if (!doc.contains("columns") || !doc["columns"].is_array()) {
        throw ConfigError("config needs a 'columns' array");
    }

    ScaleConfig config;
    for (const json& col : doc["columns"]) {
        if (!col.is_object()) throw ConfigError("every column entry must be an object");
        reject_unknown_keys(col, {"name", "labels", "probs"}, "column");
        ColumnConfig column;
        column.name = col.value("name", std::string{});
        if (!col.contains("labels") || !col["labels"].is_array()) {
            throw ConfigError("column '" + column.name + "' needs a 'labels' array");
        }
        column.labels = col["labels"].get<std::vector<std::string>>();
        if (col.contains("probs")) column.probs = col["probs"].get<std::vector<double>>();
        config.columns.push_back(std::move(column));
    }
    config.smoothing = require_number(doc, "smoothing", 0.0, "config");
    if (doc.contains("metric")) config.metric = metric_from_string(doc["metric"].get<std::string>());
    if (doc.contains("baseline")) {
        config.baseline = baseline_from_json(doc["baseline"], "baseline");
    }
    if (doc.contains("seed")) config.seed = doc["seed"].get<std::uint64_t>();
    config.validate();
    return config;
}

}  // namespace

ScaleConfig parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& err) {
        throw ConfigError(std::string("config is not valid JSON: ") + err.what());
    }
    try {
        return parse_config_object(doc);
    } catch (const json::exception& err) {
        throw ConfigError(std::string("config: ") + err.what());
    }
}

ScaleConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string config_hash(const ScaleConfig& config) {
    json doc;
    json columns = json::array();
    for (const ColumnConfig& column : config.columns) {
        json col{{"name", column.name}, {"labels", column.labels}};
        if (!column.probs.empty()) col["probs"] = column.probs;
        columns.push_back(std::move(col));
    }
    doc["columns"] = std::move(columns);
    doc["smoothing"] = config.smoothing;
    doc["metric"] = to_string(config.metric);
    doc["baseline"] = baseline_to_json(config.baseline);
    doc["seed"] = config.seed;

    const std::string canon = doc.dump();
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char ch : canon) {
        hash ^= ch;
        hash *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

Dataset ingest_csv(const std::string& csv_text, const ScaleConfig& config) {
    config.validate();
    const auto rows = detail::parse_csv(csv_text);
    if (rows.empty()) throw IngestError("empty CSV input (a header row is required)");
    const std::vector<std::string>& header = rows.front();

    std::vector<std::size_t> col_index(config.columns.size());
    for (std::size_t c = 0; c < config.columns.size(); ++c) {
        const std::string& wanted = config.columns[c].name;
        std::size_t found = header.size();
        for (std::size_t h = 0; h < header.size(); ++h) {
            if (header[h] == wanted) {
                if (found != header.size()) {
                    throw IngestError("column '" + wanted + "' appears twice in the CSV header");
                }
                found = h;
            }
        }
        if (found == header.size()) {
            throw ConfigError("configured column '" + wanted + "' is missing from the CSV header");
        }
        col_index[c] = found;
    }

    if (rows.size() < 2) throw IngestError("CSV has a header but no data rows");

    Dataset data;
    data.scales = config.scales();
    data.n_obs = rows.size() - 1;
    data.ranks.reserve(data.n_obs * data.n_dims());
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const std::vector<std::string>& row = rows[r];
        if (row.size() != header.size()) {
            throw IngestError("row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                              " fields, header has " + std::to_string(header.size()));
        }
        for (std::size_t c = 0; c < config.columns.size(); ++c) {
            const std::string& cell = row[col_index[c]];
            const auto rank = data.scales[c].rank_of(cell);
            if (!rank) {
                throw IngestError("row " + std::to_string(r) + ", column '" +
                                  config.columns[c].name + "': unknown label '" + cell + "'");
            }
            data.ranks.push_back(*rank);
        }
    }
    data.validate();
    return data;
}

Dataset ingest_csv_file(const std::string& path, const ScaleConfig& config) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IngestError("cannot open data file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return ingest_csv(buf.str(), config);
}

const MembershipRow* Report::mbfcm_row(std::size_t obs) const {
    for (const MembershipRow& row : mbfcm) {
        if (row.obs_index == obs) return &row;
    }
    return nullptr;
}

const MembershipRow* Report::fcm_row(std::size_t obs) const {
    for (const MembershipRow& row : fcm) {
        if (row.obs_index == obs) return &row;
    }
    return nullptr;
}

Report fit_report(const Dataset& data, const ScaleConfig& config) {
    Report report;
    report.config_hash = ordfuzz::config_hash(config);
    report.seed = config.seed;
    report.smoothing = config.smoothing;
    report.metric = config.metric;
    report.model = fit_model(data, config.smoothing, config.metric);
    return report;
}

Report cluster_report(const Dataset& data, const ScaleConfig& config) {
    Report report;
    report.config_hash = ordfuzz::config_hash(config);
    report.seed = config.seed;
    report.smoothing = config.smoothing;
    report.metric = config.metric;
    ClusterResult result = cluster_dataset(data, config.smoothing, config.metric);
    report.model = std::move(result.model);
    report.mbfcm = std::move(result.rows);
    return report;
}

Report compare_report(const Dataset& data, const ScaleConfig& config) {
    Report report = cluster_report(data, config);
    report.baseline = config.baseline;

    const std::size_t n = data.n_dims();
    const std::size_t m = data.rank_count();
    std::vector<double> points;
    points.reserve(data.n_obs * n);
    if (config.baseline.encoding == BaselineEncoding::fuzzified) {
        for (std::size_t k = 0; k < data.n_obs; ++k) {
            const std::vector<double> x = fuzzify_observation(data.observation(k), report.model.tables);
            points.insert(points.end(), x.begin(), x.end());
        }
    } else {
        for (int r : data.ranks) points.push_back(static_cast<double>(r));
    }

    FcmOptions options;
    options.beta = config.baseline.beta;
    options.tol = config.baseline.tol;
    options.max_iter = config.baseline.max_iter;
    options.init = config.baseline.init;
    options.seed = config.seed;
    const FcmResult result = baseline_fcm(points, data.n_obs, n, m, options);

    report.fcm.reserve(data.n_obs);
    for (std::size_t k = 0; k < data.n_obs; ++k) {
        MembershipRow row;
        row.obs_index = k;
        row.mode = MembershipRow::Mode::full;
        row.entries.reserve(m);
        for (std::size_t j = 0; j < m; ++j) {
            row.entries.emplace_back(static_cast<int>(j) + 1, result.weights[k * m + j]);
        }
        report.fcm.push_back(std::move(row));
    }
    return report;
}

std::string emit_report(const Report& report, ReportFormat format) {
    if (format == ReportFormat::json) {
        json meta{{"config_hash", report.config_hash},
                  {"seed", report.seed},
                  {"smoothing", report.smoothing},
                  {"metric", to_string(report.metric)}};
        if (report.baseline) meta["baseline"] = baseline_to_json(*report.baseline);
        json doc{{"meta", std::move(meta)}, {"model", model_to_json(report.model)}};
        if (!report.mbfcm.empty()) doc["mbfcm"] = rows_to_json(report.mbfcm);
        if (!report.fcm.empty()) doc["fcm"] = rows_to_json(report.fcm);
        return doc.dump(2) + "\n";
    }

    std::string out;
    out += "# ordfuzz report\n";
    out += "# config_hash=" + report.config_hash + "\n";
    out += "# seed=" + std::to_string(report.seed) + "\n";
    out += "# smoothing=" + full_precision(report.smoothing) + "\n";
    out += "# metric=" + to_string(report.metric) + "\n";
    if (report.baseline) {
        out += "# baseline beta=" + full_precision(report.baseline->beta) +
               " tol=" + full_precision(report.baseline->tol) +
               " max_iter=" + std::to_string(report.baseline->max_iter) +
               " encoding=" + to_string(report.baseline->encoding) +
               " init=" + to_string(report.baseline->init) + "\n";
    }
    for (std::size_t i = 0; i < report.model.n_dims(); ++i) {
        const FrequencyTable& table = report.model.tables[i];
        const InfluenceZoneSpec& spec = report.model.zone_specs[i];
        std::vector<double> zone_lo;
        std::vector<double> zone_hi;
        std::vector<double> alpha_left;
        std::vector<double> alpha_right;
        for (const auto& zone : spec.zones) {
            zone_lo.push_back(zone.interval.lo);
            zone_hi.push_back(zone.interval.hi);
            alpha_left.push_back(zone.alpha_left);
            alpha_right.push_back(zone.alpha_right);
        }
        out += "# model dim=" + std::to_string(i + 1) + " name=" + report.model.scales[i].name +
               " f=" + join_fixed6(table.rel_freq) + " c=" + join_fixed6(table.centers) +
               " F=" + join_fixed6(table.cumulative) + " zone_lo=" + join_fixed6(zone_lo) +
               " zone_hi=" + join_fixed6(zone_hi) + " alphaL=" + join_fixed6(alpha_left) +
               " alphaR=" + join_fixed6(alpha_right) + "\n";
    }
    if (!report.mbfcm.empty()) {
        out += "# algo=mbfcm\n";
        append_row_lines(out, report.mbfcm);
    }
    if (!report.fcm.empty()) {
        out += "# algo=fcm";
        if (report.baseline) out += " encoding=" + to_string(report.baseline->encoding);
        out += "\n";
        append_row_lines(out, report.fcm);
    }
    return out;
}

Report parse_report(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& err) {
        throw ConfigError(std::string("report is not valid JSON: ") + err.what());
    }
    try {
        Report report;
        const json& meta = doc.at("meta");
        report.config_hash = meta.at("config_hash").get<std::string>();
        report.seed = meta.at("seed").get<std::uint64_t>();
        report.smoothing = meta.at("smoothing").get<double>();
        report.metric = metric_from_string(meta.at("metric").get<std::string>());
        if (meta.contains("baseline")) {
            report.baseline = baseline_from_json(meta["baseline"], "report baseline");
        }
        report.model = model_from_json(doc.at("model"), report.smoothing, report.metric);
        if (doc.contains("mbfcm")) report.mbfcm = rows_from_json(doc["mbfcm"]);
        if (doc.contains("fcm")) report.fcm = rows_from_json(doc["fcm"]);
        return report;
    } catch (const json::exception& err) {
        throw ConfigError(std::string("report: ") + err.what());
    }
}

std::string emit_model_summary(const FuzzyModel& model) {
    std::string out = "dim,name,rank,label,count,f,c,F,zone_lo,zone_hi,alpha_left,alpha_right\n";
    for (std::size_t i = 0; i < model.n_dims(); ++i) {
        const FrequencyTable& table = model.tables[i];
        const InfluenceZoneSpec& spec = model.zone_specs[i];
        for (std::size_t j = 0; j < table.rank_count(); ++j) {
            const auto& zone = spec.zones[j];
            out += std::to_string(i + 1) + ',' + csv_escape(model.scales[i].name) + ',' +
                   std::to_string(j + 1) + ',' + csv_escape(model.scales[i].labels[j]) + ',' +
                   (j < table.counts.size() ? std::to_string(table.counts[j]) : std::string{}) +
                   ',' + fixed6(table.rel_freq[j]) + ',' + fixed6(table.centers[j]) + ',' +
                   fixed6(table.cumulative[j]) + ',' + fixed6(zone.interval.lo) + ',' +
                   fixed6(zone.interval.hi) + ',' +
                   (std::isnan(zone.alpha_left) ? std::string{} : fixed6(zone.alpha_left)) + ',' +
                   (std::isnan(zone.alpha_right) ? std::string{} : fixed6(zone.alpha_right)) +
                   '\n';
        }
    }
    return out;
}

std::string emit_plot_data(const FuzzyModel& model) {
    std::string out =
        "dim,name,rank,label,f,center,support_lo,support_hi,zone_lo,zone_hi,alpha_left,alpha_right\n";
    for (std::size_t i = 0; i < model.n_dims(); ++i) {
        const FrequencyTable& table = model.tables[i];
        const InfluenceZoneSpec& spec = model.zone_specs[i];
        const std::vector<double>& c = table.centers;
        const std::size_t m = table.rank_count();
        for (std::size_t j = 0; j < m; ++j) {
            const auto& zone = spec.zones[j];
            const double support_lo = (j == 0) ? 0.0 : c[j - 1];
            const double support_hi = (j + 1 == m) ? 1.0 : c[j + 1];
            out += std::to_string(i + 1) + ',' + csv_escape(model.scales[i].name) + ',' +
                   std::to_string(j + 1) + ',' + csv_escape(model.scales[i].labels[j]) + ',' +
                   fixed6(table.rel_freq[j]) + ',' + fixed6(c[j]) + ',' + fixed6(support_lo) +
                   ',' + fixed6(support_hi) + ',' + fixed6(zone.interval.lo) + ',' +
                   fixed6(zone.interval.hi) + ',' +
                   (std::isnan(zone.alpha_left) ? std::string{} : fixed6(zone.alpha_left)) + ',' +
                   (std::isnan(zone.alpha_right) ? std::string{} : fixed6(zone.alpha_right)) +
                   '\n';
        }
    }
    return out;
}

SynthResult synth_dataset(const ScaleConfig& config, std::size_t n_obs, std::uint64_t seed) {
    config.validate();
    if (n_obs == 0) throw ConfigError("synthetic dataset needs at least one observation");
    const std::size_t m = config.rank_count();
    for (const ColumnConfig& column : config.columns) {
        if (column.probs.empty()) {
            throw ConfigError("column '" + column.name + "' has no 'probs'; synth needs one "
                              "probability per rank");
        }
        if (column.probs.size() != m) {
            throw ConfigError("column '" + column.name + "' declares " +
                              std::to_string(column.probs.size()) + " probs for " +
                              std::to_string(m) + " ranks");
        }
        double sum = 0.0;
        for (double p : column.probs) {
            if (!(p >= 0.0) || !std::isfinite(p)) {
                throw ConfigError("column '" + column.name + "' has a negative or non-finite prob");
            }
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-9) {
            throw ConfigError("probs of column '" + column.name + "' sum to " +
                              full_precision(sum) + ", expected 1");
        }
    }

    std::mt19937_64 rng(seed);
    // 53-bit uniform draw; keeps the byte stream independent of any
    // library-specific distribution implementation.
    auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    SynthResult result;
    result.data.scales = config.scales();
    result.data.n_obs = n_obs;
    result.data.ranks.reserve(n_obs * config.columns.size());

    std::string csv;
    for (std::size_t c = 0; c < config.columns.size(); ++c) {
        if (c > 0) csv += ',';
        csv += csv_escape(config.columns[c].name);
    }
    csv += '\n';

    for (std::size_t k = 0; k < n_obs; ++k) {
        for (std::size_t c = 0; c < config.columns.size(); ++c) {
            const std::vector<double>& probs = config.columns[c].probs;
            const double u = uniform();
            double acc = 0.0;
            int rank = static_cast<int>(m);
            for (std::size_t j = 0; j < m; ++j) {
                acc += probs[j];
                if (u < acc) {
                    rank = static_cast<int>(j) + 1;
                    break;
                }
            }
            result.data.ranks.push_back(rank);
            if (c > 0) csv += ',';
            csv += csv_escape(config.columns[c].labels[static_cast<std::size_t>(rank) - 1]);
        }
        csv += '\n';
    }
    result.csv = std::move(csv);
    return result;
}

}  // namespace ordfuzz
