#include "ordfuzz/clusterer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace ordfuzz {

namespace {

double sq_dist(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double diff = a[i] - b[i];
        acc += diff * diff;
    }
    return acc;
}

bool same_point(const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return false;
    }
    return true;
}

// Seeds spread over the data: points at quantile positions of the ordering
// by mean coordinate. Prefers pairwise-distinct points; falls back to
// duplicates only when the data has fewer distinct points than clusters.
std::vector<double> quantile_seeds(const std::vector<double>& points, std::size_t n_obs,
                                   std::size_t n_dims, std::size_t m) {
    std::vector<std::size_t> order(n_obs);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        double mean_a = 0.0;
        double mean_b = 0.0;
        for (std::size_t i = 0; i < n_dims; ++i) {
            mean_a += points[a * n_dims + i];
            mean_b += points[b * n_dims + i];
        }
        if (mean_a != mean_b) return mean_a < mean_b;
        return std::lexicographical_compare(
            points.begin() + static_cast<std::ptrdiff_t>(a * n_dims),
            points.begin() + static_cast<std::ptrdiff_t>((a + 1) * n_dims),
            points.begin() + static_cast<std::ptrdiff_t>(b * n_dims),
            points.begin() + static_cast<std::ptrdiff_t>((b + 1) * n_dims));
    });

    std::vector<double> seeds;
    seeds.reserve(m * n_dims);
    auto is_taken = [&](const double* p) {
        for (std::size_t s = 0; s < seeds.size() / n_dims; ++s) {
            if (same_point(p, &seeds[s * n_dims], n_dims)) return true;
        }
        return false;
    };
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t pos = ((2 * j + 1) * (n_obs - 1) + m) / (2 * m);
        std::size_t pick = pos;
        while (pick < n_obs && is_taken(&points[order[pick] * n_dims])) ++pick;
        if (pick == n_obs) {
            pick = pos;
            while (pick > 0 && is_taken(&points[order[pick] * n_dims])) --pick;
        }
        const double* p = &points[order[pick] * n_dims];
        seeds.insert(seeds.end(), p, p + n_dims);
    }
    return seeds;
}

std::vector<double> random_seeds(const std::vector<double>& points, std::size_t n_obs,
                                 std::size_t n_dims, std::size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> idx(n_obs);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t pick = j + static_cast<std::size_t>(rng() % (n_obs - j));
        std::swap(idx[j], idx[pick]);
    }
    std::vector<double> seeds;
    seeds.reserve(m * n_dims);
    for (std::size_t j = 0; j < m; ++j) {
        const double* p = &points[idx[j] * n_dims];
        seeds.insert(seeds.end(), p, p + n_dims);
    }
    return seeds;
}

}  // namespace

FcmResult baseline_fcm(const std::vector<double>& points, std::size_t n_obs, std::size_t n_dims,
                       std::size_t cluster_count, const FcmOptions& options) {
    if (n_dims == 0) throw DataError("points need at least one dimension");
    if (points.size() != n_obs * n_dims) {
        throw DataError("point matrix has " + std::to_string(points.size()) +
                        " cells, expected " + std::to_string(n_obs * n_dims));
    }
    for (double v : points) {
        if (!std::isfinite(v)) throw DataError("non-finite value in input points");
    }
    if (cluster_count == 0) throw DataError("cluster count must be positive");
    if (n_obs < cluster_count) {
        throw DataError("need at least " + std::to_string(cluster_count) + " points for " +
                        std::to_string(cluster_count) + " clusters, got " + std::to_string(n_obs));
    }
    if (!(options.beta > 1.0)) throw ConfigError("fuzzifier beta must exceed 1");
    if (!(options.tol >= 0.0)) throw ConfigError("tolerance must be nonnegative");
    if (options.max_iter < 1) throw ConfigError("max_iter must be at least 1");

    const std::size_t m = cluster_count;
    const std::size_t n = n_dims;

    FcmResult res;
    res.n_dims = n;
    res.cluster_count = m;

    if (m == 1) {
        res.centroids.assign(n, 0.0);
        for (std::size_t k = 0; k < n_obs; ++k) {
            for (std::size_t i = 0; i < n; ++i) res.centroids[i] += points[k * n + i];
        }
        for (double& v : res.centroids) v /= static_cast<double>(n_obs);
        res.weights.assign(n_obs, 1.0);
        double j_val = 0.0;
        for (std::size_t k = 0; k < n_obs; ++k) {
            j_val += sq_dist(&points[k * n], res.centroids.data(), n);
        }
        res.objective.push_back(j_val);
        res.iterations = 1;
        res.converged = true;
        return res;
    }

    std::vector<double> centroids = (options.init == FcmInit::quantile)
                                        ? quantile_seeds(points, n_obs, n, m)
                                        : random_seeds(points, n_obs, n, m, options.seed);
    std::vector<double> weights(n_obs * m, 0.0);
    const double exponent = 1.0 / (options.beta - 1.0);

    // w_jk = (d2_min/d2_j)^(1/(beta-1)) normalized. The ratio form keeps
    // every term in [0,1], so nothing overflows. A zero distance gives that
    // cluster the whole weight.
    auto update_weights = [&]() {
        std::vector<double> d2(m, 0.0);
        for (std::size_t k = 0; k < n_obs; ++k) {
            double d2_min = std::numeric_limits<double>::infinity();
            std::size_t zero_at = m;
            for (std::size_t j = 0; j < m; ++j) {
                d2[j] = sq_dist(&points[k * n], &centroids[j * n], n);
                if (d2[j] == 0.0 && zero_at == m) zero_at = j;
                d2_min = std::min(d2_min, d2[j]);
            }
            double* w = &weights[k * m];
            if (zero_at < m) {
                std::fill(w, w + m, 0.0);
                w[zero_at] = 1.0;
                continue;
            }
            double total = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                w[j] = std::pow(d2_min / d2[j], exponent);
                total += w[j];
            }
            for (std::size_t j = 0; j < m; ++j) w[j] /= total;
        }
    };

    for (int iter = 1; iter <= options.max_iter; ++iter) {
        update_weights();

        // Centroid update: weighted mean with weights w^beta. A starved
        // cluster (all weights zero) keeps its previous position.
        std::vector<double> next(m * n, 0.0);
        std::vector<double> denom(m, 0.0);
        for (std::size_t k = 0; k < n_obs; ++k) {
            for (std::size_t j = 0; j < m; ++j) {
                const double wb = std::pow(weights[k * m + j], options.beta);
                denom[j] += wb;
                for (std::size_t i = 0; i < n; ++i) {
                    next[j * n + i] += wb * points[k * n + i];
                }
            }
        }
        double shift = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            if (denom[j] > 0.0) {
                for (std::size_t i = 0; i < n; ++i) next[j * n + i] /= denom[j];
            } else {
                for (std::size_t i = 0; i < n; ++i) next[j * n + i] = centroids[j * n + i];
            }
            shift = std::max(shift, std::sqrt(sq_dist(&next[j * n], &centroids[j * n], n)));
        }
        centroids.swap(next);

        double j_val = 0.0;
        for (std::size_t k = 0; k < n_obs; ++k) {
            for (std::size_t j = 0; j < m; ++j) {
                j_val += std::pow(weights[k * m + j], options.beta) *
                         sq_dist(&points[k * n], &centroids[j * n], n);
            }
        }
        res.objective.push_back(j_val);
        res.iterations = iter;
        if (shift < options.tol) {
            res.converged = true;
            break;
        }
    }

    // Align the reported weights with the final centroids.
    update_weights();

    res.centroids = std::move(centroids);
    res.weights = std::move(weights);
    return res;
}

}  // namespace ordfuzz
