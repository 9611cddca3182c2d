#include <cmath>
#include <limits>

#include <doctest.h>

#include "ordfuzz/clusterer.hpp"
#include "../support/testgen.hpp"

using namespace ordfuzz;

TEST_CASE("baseline_fcm separates two tight blobs") {
    testgen::Rng rng(111);
    std::vector<double> points;
    for (int k = 0; k < 30; ++k) points.push_back(testgen::uniform(rng, 0.05, 0.15));
    for (int k = 0; k < 30; ++k) points.push_back(testgen::uniform(rng, 0.85, 0.95));

    const FcmResult res = baseline_fcm(points, 60, 1, 2);
    REQUIRE(res.converged);
    REQUIRE(res.centroids.size() == 2);

    const std::size_t low = res.centroids[0] < res.centroids[1] ? 0 : 1;
    const std::size_t high = 1 - low;
    CHECK(res.centroids[low] == doctest::Approx(0.10).epsilon(0.3));
    CHECK(res.centroids[high] == doctest::Approx(0.90).epsilon(0.3));

    for (std::size_t k = 0; k < 60; ++k) {
        const std::size_t own = k < 30 ? low : high;
        CHECK(res.weights[k * 2 + own] > 0.95);
        CHECK(res.weights[k * 2] + res.weights[k * 2 + 1] == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("baseline_fcm objective never increases") {
    testgen::Rng rng(112);
    for (int round = 0; round < 10; ++round) {
        const std::size_t n = testgen::pick(rng, 1, 3);
        const std::size_t n_obs = testgen::pick(rng, 20, 60);
        const std::size_t m = testgen::pick(rng, 2, 5);
        std::vector<double> points(n_obs * n);
        for (double& v : points) v = testgen::uniform(rng);

        FcmOptions options;
        options.beta = 1.5 + 0.5 * static_cast<double>(round % 4);
        const FcmResult res = baseline_fcm(points, n_obs, n, m, options);
        REQUIRE(!res.objective.empty());
        for (std::size_t t = 1; t < res.objective.size(); ++t) {
            CHECK(res.objective[t] <=
                  res.objective[t - 1] + 1e-12 * std::max(1.0, res.objective[t - 1]));
        }
    }
}

TEST_CASE("baseline_fcm with one cluster returns the mean") {
    const std::vector<double> points{0.1, 0.2, 0.3, 0.4};
    const FcmResult res = baseline_fcm(points, 4, 1, 1);
    CHECK(res.centroids.size() == 1);
    CHECK(res.centroids[0] == doctest::Approx(0.25).epsilon(1e-15));
    for (double w : res.weights) CHECK(w == 1.0);
    CHECK(res.converged);
}

TEST_CASE("baseline_fcm zero-distance rule gives whole weight to the matching cluster") {
    // Quantile seeding starts on data points, so duplicated values hit the
    // zero-distance branch on the first sweep and stay there. Dyadic values
    // keep the fixed point exact.
    std::vector<double> points;
    for (int k = 0; k < 10; ++k) points.push_back(0.25);
    for (int k = 0; k < 10; ++k) points.push_back(0.75);

    const FcmResult res = baseline_fcm(points, 20, 1, 2);
    REQUIRE(res.converged);
    const std::size_t low = res.centroids[0] < res.centroids[1] ? 0 : 1;
    CHECK(res.centroids[low] == 0.25);
    CHECK(res.centroids[1 - low] == 0.75);
    for (std::size_t k = 0; k < 20; ++k) {
        const std::size_t own = k < 10 ? low : 1 - low;
        CHECK(res.weights[k * 2 + own] == 1.0);
        CHECK(res.weights[k * 2 + (1 - own)] == 0.0);
    }
    CHECK(res.objective.back() == 0.0);
}

TEST_CASE("baseline_fcm validates its input") {
    std::vector<double> points{0.1, 0.2, 0.3};
    CHECK_THROWS_AS(baseline_fcm(points, 3, 1, 4), DataError);  // N < m

    std::vector<double> with_nan{0.1, std::numeric_limits<double>::quiet_NaN(), 0.3};
    CHECK_THROWS_AS(baseline_fcm(with_nan, 3, 1, 2), DataError);

    FcmOptions bad_beta;
    bad_beta.beta = 1.0;
    CHECK_THROWS_AS(baseline_fcm(points, 3, 1, 2, bad_beta), ConfigError);

    CHECK_THROWS_AS(baseline_fcm(points, 2, 1, 2), DataError);  // shape mismatch
}

TEST_CASE("baseline_fcm random init is reproducible for a fixed seed") {
    testgen::Rng rng(113);
    std::vector<double> points(40 * 2);
    for (double& v : points) v = testgen::uniform(rng);

    FcmOptions options;
    options.init = FcmInit::random;
    options.seed = 2024;
    const FcmResult a = baseline_fcm(points, 40, 2, 3, options);
    const FcmResult b = baseline_fcm(points, 40, 2, 3, options);
    CHECK(a.centroids == b.centroids);
    CHECK(a.weights == b.weights);
    CHECK(a.iterations == b.iterations);
}
