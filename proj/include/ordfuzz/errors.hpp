#pragma once

#include <stdexcept>
#include <string>

namespace ordfuzz {

// Base class for every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid configuration: bad scales, probabilities or option values.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Malformed or inconsistent input data (CSV structure, unknown labels).
class IngestError : public Error {
public:
    using Error::Error;
};

// Numeric precondition violated: non-finite values, bad shapes.
class DataError : public Error {
public:
    using Error::Error;
};

// Query point outside the [0,1] membership domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// Rank index outside 1..m for its dimension.
class RankError : public Error {
public:
    using Error::Error;
};

// Dimensions disagree on the number of ranks.
class ScaleMismatch : public Error {
public:
    using Error::Error;
};

// A rank whose (smoothed) relative frequency is zero; its influence
// interval would collapse and centers could collide.
class ZeroFrequencyRank : public Error {
public:
    ZeroFrequencyRank(std::string dimension, int rank)
        : Error("rank " + std::to_string(rank) + " never occurs in dimension '" + dimension +
                "'; enable smoothing or drop the rank from the scale"),
          dimension_(std::move(dimension)),
          rank_(rank) {}

    const std::string& dimension() const noexcept { return dimension_; }
    int rank() const noexcept { return rank_; }

private:
    std::string dimension_;
    int rank_;
};

}  // namespace ordfuzz
