#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordfuzz/errors.hpp"

namespace ordfuzz {

// Ordered list of rank labels for one dimension, low to high.
struct OrdinalScale {
    std::string name;
    std::vector<std::string> labels;

    std::size_t rank_count() const noexcept { return labels.size(); }

    // 1-based rank of a label, nullopt if the label is not on the scale.
    std::optional<int> rank_of(std::string_view label) const;

    // Label of a 1-based rank. Throws RankError for ranks outside 1..m.
    const std::string& label_of(int rank) const;

    // m >= 2 and labels pairwise distinct. Throws ConfigError.
    void validate() const;
};

// N x n matrix of 1-based rank indices plus per-dimension scale metadata.
// Immutable after construction by convention; all operations below are pure.
struct Dataset {
    std::vector<OrdinalScale> scales;
    std::size_t n_obs = 0;
    std::vector<int> ranks;  // row-major, ranks[obs * n_dims() + dim]

    std::size_t n_dims() const noexcept { return scales.size(); }

    // Common rank count m across dimensions. Throws ScaleMismatch when the
    // scales disagree (cluster count equals rank count, so m must be shared).
    std::size_t rank_count() const;

    int rank(std::size_t obs, std::size_t dim) const { return ranks[obs * scales.size() + dim]; }

    std::vector<int> observation(std::size_t obs) const;

    void validate() const;
};

// Per-rank statistics of one dimension. Vectors are indexed by rank - 1;
// rank indices shown to users are always 1-based.
struct FrequencyTable {
    std::vector<std::int64_t> counts;  // N_j (empty when built from raw frequencies)
    std::vector<double> rel_freq;      // f_j, sums to 1
    std::vector<double> centers;       // c_j, filled by compute_centers
    std::vector<double> cumulative;    // F_j, filled by compute_centers

    std::size_t rank_count() const noexcept { return rel_freq.size(); }
    double freq_of(int rank) const { return rel_freq[static_cast<std::size_t>(rank) - 1]; }
    double center_of(int rank) const { return centers[static_cast<std::size_t>(rank) - 1]; }
};

// Count ranks in one dimension and convert to relative frequencies
// f_j = (N_j + smoothing) / (N + m * smoothing). With smoothing == 0 a rank
// that never occurs raises ZeroFrequencyRank.
FrequencyTable compute_frequencies(const Dataset& data, std::size_t dim, double smoothing = 0.0);

// Fill centers via the recurrence c_1 = f_1/2, c_j = c_{j-1} + (f_{j-1}+f_j)/2,
// and cumulative frequencies F_j = f_j/2 + sum_{i<j} f_i. The two are computed
// from their own formulas; F_j == c_j is an identity checked by tests, not
// something the code assumes.
FrequencyTable compute_centers(FrequencyTable freq);

// compute_frequencies + compute_centers for every dimension.
std::vector<FrequencyTable> fit_tables(const Dataset& data, double smoothing = 0.0);

}  // namespace ordfuzz
