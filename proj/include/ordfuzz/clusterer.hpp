#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ordfuzz/fuzzifier.hpp"
#include "ordfuzz/ordinal_stats.hpp"

namespace ordfuzz {

enum class Metric { euclidean, manhattan };

// m cluster centroids assembled from the per-dimension rank centers, each
// with its orthotope zone of influence (edges c_ij -+ f_ij/2, clipped to
// the unit cube).
struct CentroidSet {
    std::size_t n_dims = 0;
    std::size_t cluster_count = 0;     // m
    std::vector<double> coords;        // row-major m x n
    std::vector<Interval> zone_edges;  // row-major m x n

    // cluster is 1-based throughout.
    double coord(int cluster, std::size_t dim) const {
        return coords[(static_cast<std::size_t>(cluster) - 1) * n_dims + dim];
    }
    const Interval& zone_edge(int cluster, std::size_t dim) const {
        return zone_edges[(static_cast<std::size_t>(cluster) - 1) * n_dims + dim];
    }
    std::vector<double> centroid(int cluster) const;
};

// Per-observation assignment. Cluster indices are 1-based; entries are
// ordered by ascending cluster index and their weights sum to 1.
struct MembershipRow {
    enum class Mode { crisp, fuzzy_pair, full };

    std::size_t obs_index = 0;  // 0-based position in the dataset
    Mode mode = Mode::crisp;
    std::vector<std::pair<int, double>> entries;

    // Set when the globally second-nearest centroid was not an ordinal
    // neighbor of the nearest one; the assignment still uses the neighbor.
    bool adjacency_override = false;

    double weight_of(int cluster) const;  // 0 when the cluster is absent
};

// Fitted artifact: everything needed to score new observations or to plot
// membership functions and zones.
struct FuzzyModel {
    std::vector<OrdinalScale> scales;
    std::vector<FrequencyTable> tables;         // per dimension, centers filled
    std::vector<InfluenceZoneSpec> zone_specs;  // per dimension
    CentroidSet centroids;
    double smoothing = 0.0;
    Metric metric = Metric::euclidean;

    std::size_t n_dims() const noexcept { return tables.size(); }
    std::size_t cluster_count() const noexcept { return centroids.cluster_count; }
};

// Assemble centroid j from each dimension's rank-j center and build the
// orthotope zones. Throws ScaleMismatch when dimensions disagree on m.
CentroidSet build_centroids(const std::vector<FrequencyTable>& tables);

// True iff every coordinate of x lies in the closed per-dimension interval
// of cluster's zone.
bool in_zone(const std::vector<double>& x, int cluster, const CentroidSet& cs);

// Distances from x to all m centroids.
std::vector<double> distances(const std::vector<double>& x, const CentroidSet& cs,
                              Metric metric = Metric::euclidean);

// Membership weights over all m clusters, w_j proportional to d_j^-2. A zero
// distance short-circuits to weight 1 for that cluster.
std::vector<double> fcm_memberships(const std::vector<double>& x, const CentroidSet& cs,
                                    Metric metric = Metric::euclidean);

// Two-cluster assignment: crisp when x falls in a zone of influence;
// otherwise the nearest centroid j and its nearer ordinal neighbor share the
// weight by the d^-2 rule. Ties go to the lower cluster index.
MembershipRow mbfcm_memberships(const std::vector<double>& x, const CentroidSet& cs,
                                Metric metric = Metric::euclidean);

FuzzyModel fit_model(const Dataset& data, double smoothing = 0.0,
                     Metric metric = Metric::euclidean);

struct ClusterResult {
    FuzzyModel model;
    std::vector<MembershipRow> rows;  // ordered by observation index
};

// Fit once, then assign every observation. Deterministic.
ClusterResult cluster_dataset(const Dataset& data, double smoothing = 0.0,
                              Metric metric = Metric::euclidean);

// ---------------------------------------------------------------------------
// Classic iterative fuzzy c-means, used as the comparison baseline.

enum class FcmInit { quantile, random };

struct FcmOptions {
    double beta = 2.0;  // fuzzifier exponent, > 1
    double tol = 1e-8;  // stop when the largest centroid shift drops below
    int max_iter = 300;
    FcmInit init = FcmInit::quantile;
    std::uint64_t seed = 0;  // used by random init
};

struct FcmResult {
    std::size_t n_dims = 0;
    std::size_t cluster_count = 0;
    std::vector<double> centroids;  // row-major m x n
    std::vector<double> weights;    // row-major N x m, rows sum to 1
    std::vector<double> objective;  // J after each iteration, nonincreasing
    int iterations = 0;
    bool converged = false;
};

// Alternating weight/centroid minimization of
// J = sum_k sum_j w_jk^beta d^2(x_k, v_j) with squared Euclidean distances.
// points is row-major N x n. Throws DataError on non-finite input or N < m.
FcmResult baseline_fcm(const std::vector<double>& points, std::size_t n_obs, std::size_t n_dims,
                       std::size_t cluster_count, const FcmOptions& options = {});

}  // namespace ordfuzz
