#include "latentpag/gaussian.hpp"

#include <cmath>
#include <stdexcept>

#include "latentpag/errors.hpp"

namespace latentpag {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double inverse_normal_cdf(double p) {
    // Wichura (1988), algorithm AS 241, routine PPND16.
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("inverse_normal_cdf: p must be in (0,1)");
    const double q = p - 0.5;
    double r;
    if (std::fabs(q) <= 0.425) {
        r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                     6.7265770927008700853e4) * r +
                    4.5921953931549871457e4) * r +
                   1.3731693765509461125e4) * r +
                  1.9715909503065514427e3) * r +
                 1.3314166789178437745e2) * r +
                3.3871328727963666080e0) /
               (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                     3.9307895800092710610e4) * r +
                    2.1213794301586595867e4) * r +
                   5.3941960214247511077e3) * r +
                  6.8718700749205790830e2) * r +
                 4.2313330701600911252e1) * r +
                1.0);
    }
    r = q < 0.0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double val;
    if (r <= 5.0) {
        r -= 1.6;
        val = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                    2.41780725177450611770e-1) * r +
                   1.27045825245236838258e0) * r +
                  3.64784832476320460504e0) * r +
                 5.76949722146069140550e0) * r +
                4.63033784615654529590e0) * r +
               1.42343711074968357734e0) /
              (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                    1.51986665636164571966e-2) * r +
                   1.48103976427480074590e-1) * r +
                  6.89767334985100004550e-1) * r +
                 1.67638483018380384940e0) * r +
                2.05319162663775882187e0) * r +
               1.0);
    } else {
        r -= 5.0;
        val = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                    1.24266094738807843860e-3) * r +
                   2.65321895265761230930e-2) * r +
                  2.96560571828504891230e-1) * r +
                 1.78482653991729133580e0) * r +
                5.46378491116411436990e0) * r +
               6.65790464350110377720e0) /
              (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                    1.84631831751005468180e-5) * r +
                   7.86869131145613259100e-4) * r +
                  1.48753612908506148525e-2) * r +
                 1.36929880922735805310e-1) * r +
                5.99832206555887937690e-1) * r +
               1.0);
    }
    return q < 0.0 ? -val : val;
}

double fisher_z(double rho) { return 0.5 * std::log((1.0 + rho) / (1.0 - rho)); }

double partial_correlation(const Eigen::MatrixXd& cov, Vertex i, Vertex j, const VertexSet& y) {
    if (i == j) throw std::invalid_argument("partial_correlation: i and j must differ");
    if (y.contains(i) || y.contains(j))
        throw std::invalid_argument("partial_correlation: conditioning set overlaps the pair");
    const int k = y.size();
    Eigen::MatrixXd sub(k + 2, k + 2);
    std::vector<Vertex> idx;
    idx.reserve(static_cast<std::size_t>(k) + 2);
    idx.push_back(i);
    idx.push_back(j);
    for (Vertex v : y) idx.push_back(v);
    for (int r = 0; r < k + 2; ++r)
        for (int c = 0; c < k + 2; ++c) sub(r, c) = cov(idx[static_cast<std::size_t>(r)],
                                                        idx[static_cast<std::size_t>(c)]);

    Eigen::FullPivLU<Eigen::MatrixXd> lu(sub);
    if (!lu.isInvertible()) throw DegenerateModelError(i, j, "singular covariance submatrix");
    Eigen::MatrixXd precision = lu.inverse();
    double denom = precision(0, 0) * precision(1, 1);
    if (!(denom > 0.0)) throw DegenerateModelError(i, j, "non-positive precision diagonal");
    double rho = -precision(0, 1) / std::sqrt(denom);
    const double cap = 1.0 - 1e-12;
    if (rho > cap) rho = cap;
    if (rho < -cap) rho = -cap;
    return rho;
}

GaussianTester::GaussianTester(Eigen::MatrixXd covariance, int n, double alpha,
                               SmallSamplePolicy policy)
    : cov_(std::move(covariance)), n_(n), alpha_(alpha), policy_(policy) {
    if (cov_.rows() != cov_.cols() || cov_.rows() < 1)
        throw std::invalid_argument("covariance must be square and non-empty");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in (0,1)");
    if (n_ < 1) throw std::invalid_argument("sample size must be positive");
    for (int r = 0; r < cov_.rows(); ++r) {
        if (!(cov_(r, r) > 0.0))
            throw std::invalid_argument("covariance diagonal must be strictly positive");
        for (int c = r + 1; c < cov_.cols(); ++c)
            if (std::fabs(cov_(r, c) - cov_(c, r)) > 1e-10)
                throw std::invalid_argument("covariance must be symmetric within 1e-10");
    }
    threshold_ = inverse_normal_cdf(1.0 - alpha_ / 2.0);
}

GaussianTester GaussianTester::from_data(const Eigen::MatrixXd& data, double alpha,
                                         SmallSamplePolicy policy) {
    const int n = static_cast<int>(data.rows());
    if (n < 2) throw std::invalid_argument("need at least two samples");
    Eigen::RowVectorXd mean = data.colwise().mean();
    Eigen::MatrixXd centered = data.rowwise() - mean;
    Eigen::MatrixXd cov = (centered.transpose() * centered) / static_cast<double>(n - 1);
    // Make the stored matrix exactly symmetric; the estimator is symmetric up
    // to floating-point noise only.
    cov = ((cov + cov.transpose()) / 2.0).eval();
    return GaussianTester(std::move(cov), n, alpha, policy);
}

bool GaussianTester::query(Vertex i, Vertex j, const VertexSet& y) const {
    if (n_ <= y.size() + 3) {
        if (policy_ == SmallSamplePolicy::Error) throw ConditioningTooLargeError(n_, y.size());
        fallback_used_.store(true, std::memory_order_relaxed);
        return false;  // opt-in: treat as dependent
    }
    double rho = partial_correlation(cov_, i, j, y);
    double z = fisher_z(rho);
    double scale = std::sqrt(static_cast<double>(n_ - y.size() - 3));
    return std::fabs(z) * scale <= threshold_;
}

}  // namespace latentpag
