#pragma once

#include <stdexcept>

namespace rsslocate {

/// Least-squares system has fewer rows than unknowns.
class InsufficientDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Measurement geometry makes the system numerically rank-deficient
/// (e.g. all receiver positions on a single line).
class RankDeficientError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Every exponent candidate of a grid search was rank-deficient.
class DegenerateGeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rsslocate
