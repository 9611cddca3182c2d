#include "ordfuzz/clusterer.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace ordfuzz {

namespace {

void check_query(const std::vector<double>& x, const CentroidSet& cs) {
    if (x.size() != cs.n_dims) {
        throw DataError("query has " + std::to_string(x.size()) + " coordinates, model has " +
                        std::to_string(cs.n_dims) + " dimensions");
    }
}

}  // namespace

std::vector<double> CentroidSet::centroid(int cluster) const {
    const std::size_t j = static_cast<std::size_t>(cluster) - 1;
    return std::vector<double>(coords.begin() + static_cast<std::ptrdiff_t>(j * n_dims),
                               coords.begin() + static_cast<std::ptrdiff_t>((j + 1) * n_dims));
}

double MembershipRow::weight_of(int cluster) const {
    for (const auto& [j, w] : entries) {
        if (j == cluster) return w;
    }
    return 0.0;
}

CentroidSet build_centroids(const std::vector<FrequencyTable>& tables) {
    if (tables.empty()) throw DataError("no frequency tables to build centroids from");
    const std::size_t n = tables.size();
    const std::size_t m = tables.front().rank_count();
    for (std::size_t i = 0; i < n; ++i) {
        if (tables[i].rank_count() != m) {
            throw ScaleMismatch("dimension " + std::to_string(i + 1) + " has " +
                                std::to_string(tables[i].rank_count()) + " ranks, expected " +
                                std::to_string(m));
        }
        if (tables[i].centers.size() != m) {
            throw DataError("dimension " + std::to_string(i + 1) +
                            " has no centers; run compute_centers first");
        }
    }

    CentroidSet cs;
    cs.n_dims = n;
    cs.cluster_count = m;
    cs.coords.resize(m * n);
    cs.zone_edges.resize(m * n);
    for (std::size_t i = 0; i < n; ++i) {
        const InfluenceZoneSpec spec = influence_spec(tables[i]);
        for (std::size_t j = 0; j < m; ++j) {
            cs.coords[j * n + i] = tables[i].centers[j];
            cs.zone_edges[j * n + i] = spec.zones[j].interval;
        }
    }
    return cs;
}

bool in_zone(const std::vector<double>& x, int cluster, const CentroidSet& cs) {
    check_query(x, cs);
    for (std::size_t i = 0; i < cs.n_dims; ++i) {
        if (!cs.zone_edge(cluster, i).contains(x[i])) return false;
    }
    return true;
}

std::vector<double> distances(const std::vector<double>& x, const CentroidSet& cs, Metric metric) {
    check_query(x, cs);
    const std::size_t m = cs.cluster_count;
    const std::size_t n = cs.n_dims;
    std::vector<double> d(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        double acc = 0.0;
        if (metric == Metric::euclidean) {
            for (std::size_t i = 0; i < n; ++i) {
                const double diff = x[i] - cs.coords[j * n + i];
                acc += diff * diff;
            }
            d[j] = std::sqrt(acc);
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                acc += std::abs(x[i] - cs.coords[j * n + i]);
            }
            d[j] = acc;
        }
    }
    return d;
}

std::vector<double> fcm_memberships(const std::vector<double>& x, const CentroidSet& cs,
                                    Metric metric) {
    const std::vector<double> d = distances(x, cs, metric);
    const std::size_t m = d.size();
    std::vector<double> w(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        if (d[j] == 0.0) {
            w[j] = 1.0;
            return w;
        }
    }
    double total = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        w[j] = 1.0 / (d[j] * d[j]);
        total += w[j];
    }
    for (double& v : w) v /= total;
    return w;
}

MembershipRow mbfcm_memberships(const std::vector<double>& x, const CentroidSet& cs,
                                Metric metric) {
    check_query(x, cs);
    const int m = static_cast<int>(cs.cluster_count);

    MembershipRow row;

    // A zone hit classifies unambiguously. Zones overlap at shared
    // boundaries only; the lower cluster index wins there.
    for (int j = 1; j <= m; ++j) {
        if (in_zone(x, j, cs)) {
            row.mode = MembershipRow::Mode::crisp;
            row.entries = {{j, 1.0}};
            return row;
        }
    }

    const std::vector<double> d = distances(x, cs, metric);

    int nearest = 1;
    for (int j = 2; j <= m; ++j) {
        if (d[static_cast<std::size_t>(j) - 1] < d[static_cast<std::size_t>(nearest) - 1]) {
            nearest = j;
        }
    }

    // Unreachable for fuzzified observations (each centroid sits inside its
    // own zone) but arbitrary numeric queries keep the crisp rule.
    if (d[static_cast<std::size_t>(nearest) - 1] == 0.0) {
        row.mode = MembershipRow::Mode::crisp;
        row.entries = {{nearest, 1.0}};
        return row;
    }

    // The partner is the nearer ordinal neighbor, never a distant rank.
    // Edge clusters have a single neighbor.
    int partner;
    if (nearest == 1) {
        partner = 2;
    } else if (nearest == m) {
        partner = m - 1;
    } else {
        const double d_lo = d[static_cast<std::size_t>(nearest) - 2];
        const double d_hi = d[static_cast<std::size_t>(nearest)];
        partner = (d_lo <= d_hi) ? nearest - 1 : nearest + 1;
    }

    // Record when the global runner-up disagrees with the ordinal structure.
    int runner_up = (nearest == 1) ? 2 : 1;
    for (int j = 1; j <= m; ++j) {
        if (j == nearest) continue;
        if (d[static_cast<std::size_t>(j) - 1] < d[static_cast<std::size_t>(runner_up) - 1]) {
            runner_up = j;
        }
    }
    row.adjacency_override = std::abs(runner_up - nearest) != 1;

    // Inverse-square split over the chosen pair.
    const double dj = d[static_cast<std::size_t>(nearest) - 1];
    const double dl = d[static_cast<std::size_t>(partner) - 1];
    const double inv_j = 1.0 / (dj * dj);
    const double inv_l = 1.0 / (dl * dl);
    const double w_nearest = inv_j / (inv_j + inv_l);

    row.mode = MembershipRow::Mode::fuzzy_pair;
    if (partner < nearest) {
        row.entries = {{partner, 1.0 - w_nearest}, {nearest, w_nearest}};
    } else {
        row.entries = {{nearest, w_nearest}, {partner, 1.0 - w_nearest}};
    }
    return row;
}

FuzzyModel fit_model(const Dataset& data, double smoothing, Metric metric) {
    data.validate();
    FuzzyModel model;
    model.scales = data.scales;
    model.tables = fit_tables(data, smoothing);
    model.zone_specs.reserve(model.tables.size());
    for (const auto& table : model.tables) {
        model.zone_specs.push_back(influence_spec(table));
    }
    model.centroids = build_centroids(model.tables);
    model.smoothing = smoothing;
    model.metric = metric;
    return model;
}

ClusterResult cluster_dataset(const Dataset& data, double smoothing, Metric metric) {
    ClusterResult result;
    result.model = fit_model(data, smoothing, metric);
    result.rows.reserve(data.n_obs);
    for (std::size_t k = 0; k < data.n_obs; ++k) {
        const std::vector<double> x = fuzzify_observation(data.observation(k), result.model.tables);
        MembershipRow row = mbfcm_memberships(x, result.model.centroids, metric);
        row.obs_index = k;
        result.rows.push_back(std::move(row));
    }
    return result;
}

}  // namespace ordfuzz
