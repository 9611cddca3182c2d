#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "ordfuzz/ordinal_stats.hpp"

namespace ordfuzz {

// Closed interval on the numeric axis.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double x) const noexcept { return x >= lo && x <= hi; }
    double width() const noexcept { return hi - lo; }
};

// Piecewise-linear membership family over [0,1]: triangular peaks at the
// rank centers, with mu_1 constant 1 on [0,c_1] and mu_m constant 1 on
// [c_m,1]. The family forms a unity (Ruspini) partition of [0,1].
//
// Triangular shapes are the only ones implemented. Any replacement family
// must keep finite supports [c_{j-1}, c_{j+1}] and the unity partition, or
// the zone arithmetic downstream stops holding.
struct MembershipFamily {
    std::vector<double> centers;  // c_1..c_m, strictly increasing

    std::size_t rank_count() const noexcept { return centers.size(); }
};

MembershipFamily make_membership_family(const FrequencyTable& freq);

// Degree of x in rank j (1-based): 1 at c_j and on the boundary plateaus,
// linear toward the neighboring centers, 0 outside the support.
// Throws DomainError when x is outside [0,1].
double membership(double x, int rank, const MembershipFamily& fam);

// All m degrees at x. Sums to 1; at most two entries are nonzero and when
// two, they belong to adjacent ranks.
std::vector<double> memberships(double x, const MembershipFamily& fam);

// Per-rank area of influence [c_j - f_j/2, c_j + f_j/2] (clipped to [0,1])
// together with the alpha-cut thresholds toward each neighbor. Adjacent
// intervals tile [0,1] because c_{j+1} - c_j = (f_j + f_{j+1}) / 2.
struct InfluenceZoneSpec {
    struct RankZone {
        Interval interval;
        // alpha_left is NaN for rank 1, alpha_right NaN for rank m.
        double alpha_left = std::numeric_limits<double>::quiet_NaN();
        double alpha_right = std::numeric_limits<double>::quiet_NaN();
    };

    std::vector<RankZone> zones;

    std::size_t rank_count() const noexcept { return zones.size(); }
    const RankZone& zone_of(int rank) const { return zones[static_cast<std::size_t>(rank) - 1]; }
};

// Thresholds use the alpha-cut form alpha_j^R = 1 - f_j / (2 (c_{j+1} - c_j))
// and alpha_j^L = 1 - f_j / (2 (c_j - c_{j-1})). The simplified forms
// alpha_j^R = f_{j+1} / (f_j + f_{j+1}) follow algebraically and are checked
// by tests, not assumed here.
InfluenceZoneSpec influence_spec(const FrequencyTable& freq);

// Map a rank vector to numeric coordinates: coordinate i is the center of
// the observed rank in dimension i. Throws RankError for out-of-range ranks.
std::vector<double> fuzzify_observation(const std::vector<int>& ranks,
                                        const std::vector<FrequencyTable>& tables);

}  // namespace ordfuzz
