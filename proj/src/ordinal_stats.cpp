#include "ordfuzz/ordinal_stats.hpp"

#include <cmath>
#include <unordered_set>

namespace ordfuzz {

namespace {

std::string dim_display_name(const OrdinalScale& scale, std::size_t dim) {
    if (!scale.name.empty()) return scale.name;
    return "dim " + std::to_string(dim + 1);
}

}  // namespace

std::optional<int> OrdinalScale::rank_of(std::string_view label) const {
    for (std::size_t j = 0; j < labels.size(); ++j) {
        if (labels[j] == label) return static_cast<int>(j) + 1;
    }
    return std::nullopt;
}

const std::string& OrdinalScale::label_of(int rank) const {
    if (rank < 1 || static_cast<std::size_t>(rank) > labels.size()) {
        throw RankError("rank " + std::to_string(rank) + " outside 1.." +
                        std::to_string(labels.size()) + " on scale '" + name + "'");
    }
    return labels[static_cast<std::size_t>(rank) - 1];
}

void OrdinalScale::validate() const {
    if (labels.size() < 2) {
        throw ConfigError("scale '" + name + "' needs at least two rank labels");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& label : labels) {
        if (!seen.insert(label).second) {
            throw ConfigError("scale '" + name + "' repeats label '" + label + "'");
        }
    }
}

std::size_t Dataset::rank_count() const {
    if (scales.empty()) throw DataError("dataset has no dimensions");
    const std::size_t m = scales.front().rank_count();
    for (std::size_t i = 1; i < scales.size(); ++i) {
        if (scales[i].rank_count() != m) {
            throw ScaleMismatch("dimension '" + dim_display_name(scales[i], i) + "' has " +
                                std::to_string(scales[i].rank_count()) + " ranks, expected " +
                                std::to_string(m));
        }
    }
    return m;
}

std::vector<int> Dataset::observation(std::size_t obs) const {
    const std::size_t n = n_dims();
    std::vector<int> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = ranks[obs * n + i];
    return row;
}

void Dataset::validate() const {
    for (const auto& scale : scales) scale.validate();
    const std::size_t m = rank_count();  // also checks the shared cardinality
    if (n_obs == 0) throw DataError("dataset has no observations");
    if (ranks.size() != n_obs * n_dims()) {
        throw DataError("rank matrix has " + std::to_string(ranks.size()) + " cells, expected " +
                        std::to_string(n_obs * n_dims()));
    }
    for (std::size_t k = 0; k < n_obs; ++k) {
        for (std::size_t i = 0; i < n_dims(); ++i) {
            const int r = rank(k, i);
            if (r < 1 || static_cast<std::size_t>(r) > m) {
                throw RankError("observation " + std::to_string(k + 1) + " carries rank " +
                                std::to_string(r) + " in dimension '" +
                                dim_display_name(scales[i], i) + "' (valid: 1.." +
                                std::to_string(m) + ")");
            }
        }
    }
}

FrequencyTable compute_frequencies(const Dataset& data, std::size_t dim, double smoothing) {
    if (dim >= data.n_dims()) {
        throw DataError("dimension index " + std::to_string(dim) + " out of range");
    }
    if (data.n_obs == 0) throw DataError("dataset has no observations");
    if (!(smoothing >= 0.0)) throw ConfigError("smoothing must be nonnegative");

    const OrdinalScale& scale = data.scales[dim];
    const std::size_t m = scale.rank_count();

    FrequencyTable table;
    table.counts.assign(m, 0);
    for (std::size_t k = 0; k < data.n_obs; ++k) {
        const int r = data.rank(k, dim);
        if (r < 1 || static_cast<std::size_t>(r) > m) {
            throw RankError("observation " + std::to_string(k + 1) + " carries rank " +
                            std::to_string(r) + " in dimension '" + dim_display_name(scale, dim) +
                            "' (valid: 1.." + std::to_string(m) + ")");
        }
        ++table.counts[static_cast<std::size_t>(r) - 1];
    }

    const double denom = static_cast<double>(data.n_obs) + smoothing * static_cast<double>(m);
    table.rel_freq.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        table.rel_freq[j] = (static_cast<double>(table.counts[j]) + smoothing) / denom;
        if (table.rel_freq[j] <= 0.0) {
            throw ZeroFrequencyRank(dim_display_name(scale, dim), static_cast<int>(j) + 1);
        }
    }
    return table;
}

FrequencyTable compute_centers(FrequencyTable freq) {
    const std::vector<double>& f = freq.rel_freq;
    const std::size_t m = f.size();
    if (m < 2) throw DataError("need at least two ranks to place centers");

    double sum = 0.0;
    for (double v : f) {
        if (!(v > 0.0)) throw DataError("relative frequencies must all be positive");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw DataError("relative frequencies must sum to 1");

    freq.centers.resize(m);
    freq.centers[0] = 0.5 * f[0];
    for (std::size_t j = 1; j < m; ++j) {
        freq.centers[j] = freq.centers[j - 1] + 0.5 * (f[j - 1] + f[j]);
    }

    freq.cumulative.resize(m);
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        freq.cumulative[j] = 0.5 * f[j] + acc;
        acc += f[j];
    }
    return freq;
}

std::vector<FrequencyTable> fit_tables(const Dataset& data, double smoothing) {
    std::vector<FrequencyTable> tables;
    tables.reserve(data.n_dims());
    for (std::size_t i = 0; i < data.n_dims(); ++i) {
        tables.push_back(compute_centers(compute_frequencies(data, i, smoothing)));
    }
    return tables;
}

}  // namespace ordfuzz
