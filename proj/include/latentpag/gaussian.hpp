#pragma once

#include <Eigen/Dense>
#include <atomic>

#include "latentpag/ci.hpp"
#include "latentpag/types.hpp"

namespace latentpag {

/// Standard normal CDF.
double normal_cdf(double x);

/// Standard normal quantile function, Wichura's AS 241 (PPND16). Absolute
/// error well below 1e-9 over (0, 1); used both for test thresholds and for
/// inverse-CDF sampling so decisions and draws are bit-stable across
/// platforms.
double inverse_normal_cdf(double p);

/// Fisher's z-transform g(x) = atanh(x) = 1/2 log((1+x)/(1-x)).
double fisher_z(double rho);

/// Partial correlation of i and j given y: -P_ij / sqrt(P_ii * P_jj) where P
/// is the inverse of the covariance submatrix over {i, j} u y. The result is
/// clamped to [-1 + 1e-12, 1 - 1e-12] so the downstream z-transform stays
/// finite. Throws DegenerateModelError when the submatrix is singular.
double partial_correlation(const Eigen::MatrixXd& cov, Vertex i, Vertex j, const VertexSet& y);

/// What to do when a test would need n > |Y| + 3 but n is too small.
enum class SmallSamplePolicy {
    Error,           // throw ConditioningTooLargeError (default)
    AssumeDependent, // answer "dependent" and raise the fallback flag
};

/// Gaussian CI tester: zero-partial-correlation test via Fisher's
/// z-transform. Judges i and j independent given y iff
/// |z(rho_hat)| * sqrt(n - |y| - 3) <= Phi^-1(1 - alpha/2).
class GaussianTester : public CiSource {
public:
    GaussianTester(Eigen::MatrixXd covariance, int n, double alpha,
                   SmallSamplePolicy policy = SmallSamplePolicy::Error);

    /// Build from a raw data matrix (rows = samples) using the 1/(n-1)
    /// sample covariance.
    static GaussianTester from_data(const Eigen::MatrixXd& data, double alpha,
                                    SmallSamplePolicy policy = SmallSamplePolicy::Error);

    int vertex_count() const override { return static_cast<int>(cov_.rows()); }
    int sample_size() const { return n_; }
    double alpha() const { return alpha_; }
    const Eigen::MatrixXd& covariance() const { return cov_; }

    /// True once any query was answered through the assume-dependent
    /// fallback; surfaced in run reports.
    bool fallback_used() const { return fallback_used_.load(std::memory_order_relaxed); }

protected:
    bool query(Vertex i, Vertex j, const VertexSet& y) const override;

private:
    Eigen::MatrixXd cov_;
    int n_;
    double alpha_;
    double threshold_;  // Phi^-1(1 - alpha/2)
    SmallSamplePolicy policy_;
    mutable std::atomic<bool> fallback_used_{false};
};

}  // namespace latentpag
