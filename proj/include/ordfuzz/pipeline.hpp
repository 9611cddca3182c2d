#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordfuzz/clusterer.hpp"

namespace ordfuzz {

enum class BaselineEncoding { fuzzified, ranks };
enum class ReportFormat { json, csv };

struct ColumnConfig {
    std::string name;
    std::vector<std::string> labels;  // low to high
    std::vector<double> probs;        // optional, consumed by synth_dataset
};

struct BaselineConfig {
    double beta = 2.0;
    double tol = 1e-8;
    int max_iter = 300;
    BaselineEncoding encoding = BaselineEncoding::fuzzified;
    FcmInit init = FcmInit::quantile;
};

// Parsed configuration document: per-column scales plus global knobs.
struct ScaleConfig {
    std::vector<ColumnConfig> columns;
    double smoothing = 0.0;
    Metric metric = Metric::euclidean;
    BaselineConfig baseline;
    std::uint64_t seed = 0;

    std::size_t rank_count() const;  // common m across columns
    std::vector<OrdinalScale> scales() const;
    void validate() const;  // throws ConfigError
};

ScaleConfig parse_config(const std::string& json_text);
ScaleConfig load_config(const std::string& path);

// Stable FNV-1a hash of the canonical form; identifies a run configuration
// in report metadata.
std::string config_hash(const ScaleConfig& config);

// Map a CSV document (header row + label cells) onto the configured scales.
// Unknown labels raise IngestError naming row, column and label; a configured
// column missing from the header raises ConfigError.
Dataset ingest_csv(const std::string& csv_text, const ScaleConfig& config);
Dataset ingest_csv_file(const std::string& path, const ScaleConfig& config);

// Run results plus everything needed to reproduce them.
struct Report {
    std::string config_hash;
    std::uint64_t seed = 0;
    double smoothing = 0.0;
    Metric metric = Metric::euclidean;
    std::optional<BaselineConfig> baseline;  // engaged for compare reports
    FuzzyModel model;
    std::vector<MembershipRow> mbfcm;
    std::vector<MembershipRow> fcm;  // full-support baseline rows

    const MembershipRow* mbfcm_row(std::size_t obs) const;
    const MembershipRow* fcm_row(std::size_t obs) const;
};

// Fit only; the report carries the model and no assignment rows.
Report fit_report(const Dataset& data, const ScaleConfig& config);

// Fit + MBFCM assignment for every observation.
Report cluster_report(const Dataset& data, const ScaleConfig& config);

// cluster_report plus the classic-FCM baseline on the configured encoding.
Report compare_report(const Dataset& data, const ScaleConfig& config);

// JSON keeps full precision and round-trips through parse_report; CSV prints
// numbers with six decimals and is write-only.
std::string emit_report(const Report& report, ReportFormat format);
Report parse_report(const std::string& json_text);

// Model summary table (per dimension and rank: counts, f, c, F, zone edges,
// alpha thresholds) for `fit --format csv`.
std::string emit_model_summary(const FuzzyModel& model);

// Membership-function knots and zone edges per dimension, as CSV suitable
// for external plotting.
std::string emit_plot_data(const FuzzyModel& model);

struct SynthResult {
    Dataset data;
    std::string csv;
};

// Draw n_obs label rows from the per-column rank probabilities. Reproducible:
// one generator seeded once, cells sampled row-major.
SynthResult synth_dataset(const ScaleConfig& config, std::size_t n_obs, std::uint64_t seed);

// Enum <-> text used by configs, flags and reports.
std::string to_string(Metric metric);
std::string to_string(BaselineEncoding encoding);
std::string to_string(FcmInit init);
Metric metric_from_string(const std::string& text);
BaselineEncoding encoding_from_string(const std::string& text);
FcmInit init_from_string(const std::string& text);

}  // namespace ordfuzz
