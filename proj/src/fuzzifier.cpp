#include "ordfuzz/fuzzifier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ordfuzz {

namespace {

void check_domain(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("x = " + std::to_string(x) + " outside the fuzzified domain [0,1]");
    }
}

void check_fitted(const FrequencyTable& freq) {
    if (freq.centers.size() != freq.rel_freq.size() || freq.centers.empty()) {
        throw DataError("frequency table has no centers; run compute_centers first");
    }
}

}  // namespace

MembershipFamily make_membership_family(const FrequencyTable& freq) {
    check_fitted(freq);
    for (std::size_t j = 1; j < freq.centers.size(); ++j) {
        if (!(freq.centers[j] > freq.centers[j - 1])) {
            throw DataError("rank centers must be strictly increasing");
        }
    }
    return MembershipFamily{freq.centers};
}

double membership(double x, int rank, const MembershipFamily& fam) {
    check_domain(x);
    const std::vector<double>& c = fam.centers;
    const int m = static_cast<int>(c.size());
    if (rank < 1 || rank > m) {
        throw RankError("rank " + std::to_string(rank) + " outside 1.." + std::to_string(m));
    }
    const std::size_t j = static_cast<std::size_t>(rank) - 1;

    const double left = (rank == 1) ? 0.0 : c[j - 1];
    const double right = (rank == m) ? 1.0 : c[j + 1];
    if (x < left || x > right) return 0.0;

    if (rank == 1 && x <= c[j]) return 1.0;  // left plateau
    if (rank == m && x >= c[j]) return 1.0;  // right plateau
    if (x <= c[j]) return (x - c[j - 1]) / (c[j] - c[j - 1]);
    return (c[j + 1] - x) / (c[j + 1] - c[j]);
}

std::vector<double> memberships(double x, const MembershipFamily& fam) {
    check_domain(x);
    std::vector<double> out(fam.rank_count());
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = membership(x, static_cast<int>(j) + 1, fam);
    }
    return out;
}

InfluenceZoneSpec influence_spec(const FrequencyTable& freq) {
    check_fitted(freq);
    const std::vector<double>& f = freq.rel_freq;
    const std::vector<double>& c = freq.centers;
    const std::size_t m = f.size();
    for (double v : f) {
        if (!(v > 0.0)) throw DataError("relative frequencies must all be positive");
    }

    InfluenceZoneSpec spec;
    spec.zones.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        InfluenceZoneSpec::RankZone& z = spec.zones[j];
        z.interval.lo = std::max(0.0, c[j] - 0.5 * f[j]);
        z.interval.hi = std::min(1.0, c[j] + 0.5 * f[j]);
        if (j > 0) z.alpha_left = 1.0 - 0.5 * f[j] / (c[j] - c[j - 1]);
        if (j + 1 < m) z.alpha_right = 1.0 - 0.5 * f[j] / (c[j + 1] - c[j]);
    }
    return spec;
}

std::vector<double> fuzzify_observation(const std::vector<int>& ranks,
                                        const std::vector<FrequencyTable>& tables) {
    if (ranks.size() != tables.size()) {
        throw DataError("observation has " + std::to_string(ranks.size()) +
                        " ranks but the model has " + std::to_string(tables.size()) +
                        " dimensions");
    }
    std::vector<double> coords(ranks.size());
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        check_fitted(tables[i]);
        const int r = ranks[i];
        const std::size_t m = tables[i].rank_count();
        if (r < 1 || static_cast<std::size_t>(r) > m) {
            throw RankError("rank " + std::to_string(r) + " outside 1.." + std::to_string(m) +
                            " in dimension " + std::to_string(i + 1));
        }
        coords[i] = tables[i].centers[static_cast<std::size_t>(r) - 1];
    }
    return coords;
}

}  // namespace ordfuzz
