#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qtorus/errors.hpp"

namespace qtorus {

/// Lattice-ball radius (in the relevant quadratic-form metric) plus the
/// tail tolerance the truncation must certify.
struct TruncationParams {
    double radius = 8.0;
    double tail_tolerance = 1e-12;
};

/// All k in Z^d with k^t Q k <= r^2, Q symmetric positive definite, in
/// lexicographic order. The order is part of the contract: summation
/// kernels reduce these terms pairwise, so any reordering changes results.
std::vector<Eigen::VectorXi> ellipsoid_points(const Eigen::MatrixXd& Q, double radius);

/// Upper bound for sum_{|k|_Q > r} exp(-pi (|k|_Q^2 - 2 rho |k|_Q)) by
/// grouping integer points into l-infinity shells and comparing against
/// the smallest eigenvalue of Q. rho is the metric norm of the exponent's
/// linear shift (0 for purely oscillatory phases). Returns +inf when the
/// radius cannot certify anything (r <= 2 rho + 1).
double gaussian_tail_bound(const Eigen::MatrixXd& Q, double radius, double rho = 0.0);

/// Pairwise (tree-order) summation: deterministic, independent of thread
/// count, and with O(log n) error growth.
std::complex<double> pairwise_sum(std::span<const std::complex<double>> terms);

/// Evaluates term(i) for i in [0, count) -- in parallel when compiled
/// with OpenMP -- then reduces pairwise in index order. The result is
/// bit-identical for any thread count.
template <class F>
std::complex<double> parallel_term_sum(std::size_t count, F&& term) {
    std::vector<std::complex<double>> buf(count);
    const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < total; ++i) buf[static_cast<std::size_t>(i)] = term(static_cast<std::size_t>(i));
    return pairwise_sum(buf);
}

} // namespace qtorus
