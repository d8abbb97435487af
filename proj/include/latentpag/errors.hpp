#pragma once

#include <stdexcept>
#include <string>

#include "latentpag/types.hpp"

namespace latentpag {

/// Malformed input files, dimension mismatches, cyclic DAG files and the like.
/// CLI maps this family to exit code 2.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Singular covariance submatrix encountered while computing a partial
/// correlation. Carries the offending pair so callers can report context.
class DegenerateModelError : public DataError {
public:
    DegenerateModelError(Vertex i, Vertex j, const std::string& detail)
        : DataError("degenerate model for pair (" + std::to_string(i) + "," +
                    std::to_string(j) + "): " + detail),
          i(i),
          j(j) {}
    Vertex i, j;
};

/// Raised when a test would need n > |Y| + 3 but the sample is too small.
class ConditioningTooLargeError : public DataError {
public:
    ConditioningTooLargeError(int n, int cond_size)
        : DataError("conditioning set of size " + std::to_string(cond_size) +
                    " requires n > " + std::to_string(cond_size + 3) + ", have n = " +
                    std::to_string(n)),
          n(n),
          cond_size(cond_size) {}
    int n, cond_size;
};

/// Cooperative cancellation: thrown from inside a CI source once the run's
/// wall-clock budget is exhausted.
class TimeoutError : public std::runtime_error {
public:
    TimeoutError() : std::runtime_error("run exceeded its wall-clock budget") {}
};

}  // namespace latentpag
