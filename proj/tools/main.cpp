#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ordfuzz/pipeline.hpp"

namespace {

constexpr int kExitusage = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIngest = 3;
constexpr int kExitModel = 4;

struct CommonFlags {
    std::string config_path;
    std::string out_path;
    std::string format = "json";
    std::optional<double> smoothing;
    std::optional<std::string> metric;
    std::optional<std::uint64_t> seed;
    std::optional<double> beta;
    std::optional<std::string> baseline_encoding;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_baseline) {
    cmd->add_option("--config", flags.config_path, "JSON config file")->required();
    cmd->add_option("--out", flags.out_path, "write output to this path instead of stdout");
    cmd->add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--smoothing", flags.smoothing, "Laplace smoothing lambda (overrides config)");
    cmd->add_option("--metric", flags.metric, "distance metric (overrides config)")
        ->check(CLI::IsMember({"euclidean", "manhattan"}));
    cmd->add_option("--seed", flags.seed, "random seed (overrides config)");
    if (with_baseline) {
        cmd->add_option("--beta", flags.beta, "baseline FCM fuzzifier (overrides config)");
        cmd->add_option("--baseline-encoding", flags.baseline_encoding,
                        "numeric encoding for the baseline FCM (overrides config)")
            ->check(CLI::IsMember({"fuzzified", "ranks"}));
    }
}

ordfuzz::ScaleConfig effective_config(const CommonFlags& flags) {
    ordfuzz::ScaleConfig config = ordfuzz::load_config(flags.config_path);
    if (flags.smoothing) config.smoothing = *flags.smoothing;
    if (flags.metric) config.metric = ordfuzz::metric_from_string(*flags.metric);
    if (flags.seed) config.seed = *flags.seed;
    if (flags.beta) config.baseline.beta = *flags.beta;
    if (flags.baseline_encoding) {
        config.baseline.encoding = ordfuzz::encoding_from_string(*flags.baseline_encoding);
    }
    config.validate();
    return config;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ordfuzz::ConfigError("cannot open output file '" + out_path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fuzzy clustering for ordinal (rank-scale) data"};
    app.require_subcommand(1);

    CommonFlags fit_flags;
    std::string fit_input;
    CLI::App* fit = app.add_subcommand("fit", "fit a fuzzy model and emit it");
    fit->add_option("input", fit_input, "CSV file with a header row")->required();
    add_common(fit, fit_flags, false);

    CommonFlags cluster_flags;
    std::string cluster_input;
    CLI::App* cluster = app.add_subcommand("cluster", "fit and assign every observation (MBFCM)");
    cluster->add_option("input", cluster_input, "CSV file with a header row")->required();
    add_common(cluster, cluster_flags, false);

    CommonFlags compare_flags;
    std::string compare_input;
    CLI::App* compare =
        app.add_subcommand("compare", "cluster and run the classic FCM baseline side by side");
    compare->add_option("input", compare_input, "CSV file with a header row")->required();
    add_common(compare, compare_flags, true);

    CommonFlags plot_flags;
    std::string plot_input;
    CLI::App* plotdata =
        app.add_subcommand("plotdata", "emit membership-function knots and zone edges as CSV");
    plotdata->add_option("input", plot_input, "CSV file with a header row")->required();
    add_common(plotdata, plot_flags, false);

    CommonFlags synth_flags;
    std::size_t synth_n = 0;
    CLI::App* synth = app.add_subcommand("synth", "generate a synthetic dataset CSV");
    synth->add_option("--n", synth_n, "number of observations")->required();
    add_common(synth, synth_flags, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*fit) {
            const auto config = effective_config(fit_flags);
            const auto data = ordfuzz::ingest_csv_file(fit_input, config);
            const auto report = ordfuzz::fit_report(data, config);
            write_output(fit_flags.format == "csv"
                             ? ordfuzz::emit_model_summary(report.model)
                             : ordfuzz::emit_report(report, ordfuzz::ReportFormat::json),
                         fit_flags.out_path);
        } else if (*cluster) {
            const auto config = effective_config(cluster_flags);
            const auto data = ordfuzz::ingest_csv_file(cluster_input, config);
            const auto report = ordfuzz::cluster_report(data, config);
            write_output(ordfuzz::emit_report(report, cluster_flags.format == "csv"
                                                          ? ordfuzz::ReportFormat::csv
                                                          : ordfuzz::ReportFormat::json),
                         cluster_flags.out_path);
        } else if (*compare) {
            const auto config = effective_config(compare_flags);
            const auto data = ordfuzz::ingest_csv_file(compare_input, config);
            const auto report = ordfuzz::compare_report(data, config);
            write_output(ordfuzz::emit_report(report, compare_flags.format == "csv"
                                                          ? ordfuzz::ReportFormat::csv
                                                          : ordfuzz::ReportFormat::json),
                         compare_flags.out_path);
        } else if (*plotdata) {
            const auto config = effective_config(plot_flags);
            const auto data = ordfuzz::ingest_csv_file(plot_input, config);
            const auto report = ordfuzz::fit_report(data, config);
            write_output(ordfuzz::emit_plot_data(report.model), plot_flags.out_path);
        } else if (*synth) {
            const auto config = effective_config(synth_flags);
            const auto result = ordfuzz::synth_dataset(config, synth_n, config.seed);
            write_output(result.csv, synth_flags.out_path);
        }
    } catch (const ordfuzz::ConfigError& err) {
        std::cerr << "config error: " << err.what() << "\n";
        return kExitConfig;
    } catch (const ordfuzz::IngestError& err) {
        std::cerr << "ingest error: " << err.what() << "\n";
        return kExitIngest;
    } catch (const ordfuzz::ZeroFrequencyRank& err) {
        std::cerr << "model error: " << err.what() << "\n";
        return kExitModel;
    } catch (const ordfuzz::ScaleMismatch& err) {
        std::cerr << "model error: " << err.what() << "\n";
        return kExitModel;
    } catch (const ordfuzz::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitusage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitusage;
    }
    return 0;
}
