#include "qtorus/lattice.hpp"

#include <cmath>
#include <limits>

namespace qtorus {

std::vector<Eigen::VectorXi> ellipsoid_points(const Eigen::MatrixXd& Q, double radius) {
    const int d = static_cast<int>(Q.rows());
    if (Q.cols() != d || d == 0) throw validation_error("ellipsoid_points: Q must be square");
    if (radius <= 0) throw validation_error("ellipsoid_points: radius must be positive");

    Eigen::LLT<Eigen::MatrixXd> llt(Q);
    if (llt.info() != Eigen::Success) throw validation_error("ellipsoid_points: Q not positive definite");
    const Eigen::MatrixXd qinv = llt.solve(Eigen::MatrixXd::Identity(d, d));

    // |k_i| <= r sqrt((Q^-1)_ii) bounds the ellipsoid's bounding box
    Eigen::VectorXi lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
        const int b = static_cast<int>(std::floor(radius * std::sqrt(qinv(i, i)) + 1e-12));
        lo[i] = -b;
        hi[i] = b;
    }

    const double r2 = radius * radius * (1.0 + 1e-14) + 1e-14;
    std::vector<Eigen::VectorXi> pts;
    Eigen::VectorXi k = lo;
    Eigen::VectorXd kd(d);
    for (;;) {
        for (int i = 0; i < d; ++i) kd[i] = k[i];
        if (kd.dot(Q * kd) <= r2) pts.push_back(k);
        int axis = d - 1;
        while (axis >= 0) {
            if (++k[axis] <= hi[axis]) break;
            k[axis] = lo[axis];
            --axis;
        }
        if (axis < 0) break;
    }
    return pts;
}

double gaussian_tail_bound(const Eigen::MatrixXd& Q, double radius, double rho) {
    const int d = static_cast<int>(Q.rows());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Q);
    const double lam_min = es.eigenvalues().minCoeff();
    if (lam_min <= 0) throw validation_error("gaussian_tail_bound: Q not positive definite");
    if (radius <= 2 * rho + 1) return std::numeric_limits<double>::infinity();

    const double sl = std::sqrt(lam_min);
    const double pi = M_PI;
    double total = 0.0;
    for (long j = 1; j < 2'000'000; ++j) {
        const double t = std::max(radius, sl * static_cast<double>(j));
        // integer points on the l-infinity shell |k|_inf = j
        const double count = std::pow(2.0 * j + 1.0, d) - std::pow(2.0 * j - 1.0, d);
        const double term = count * std::exp(-pi * t * (t - 2 * rho));
        total += term;
        if (sl * static_cast<double>(j) > radius && (term < total * 1e-16 || term == 0.0)) return total;
    }
    return std::numeric_limits<double>::infinity(); // did not converge; refuse to certify
}

std::complex<double> pairwise_sum(std::span<const std::complex<double>> terms) {
    const std::size_t n = terms.size();
    if (n == 0) return {0.0, 0.0};
    if (n <= 8) {
        std::complex<double> acc = terms[0];
        for (std::size_t i = 1; i < n; ++i) acc += terms[i];
        return acc;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(terms.first(h)) + pairwise_sum(terms.subspan(h));
}

} // namespace qtorus
