#include "qtorus/theta.hpp"

#include <cmath>
#include <sstream>

namespace qtorus {

namespace {

constexpr double pi = M_PI;

double shift_norm(const SiegelPoint& T, const CVec& z) {
    // rho = |Im z|_{Y^-1}, the metric norm of the exponent's linear shift
    const RVec y = z.imag();
    return std::sqrt(y.dot(T.im_cholesky().solve(y)));
}

CMat int_to_cmat(const IntMat& m) {
    CMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = cplx(static_cast<double>(m(i, j)), 0.0);
    return r;
}

} // namespace

double theta_tail_bound(const CVec& z, const SiegelPoint& T, const TruncationParams& trunc) {
    return gaussian_tail_bound(T.im(), trunc.radius, shift_norm(T, z));
}

cplx theta(const CVec& z, const SiegelPoint& T, const TruncationParams& trunc) {
    if (z.size() != T.n()) throw validation_error("theta: z has wrong dimension");
    const double bound = theta_tail_bound(z, T, trunc);
    if (!(bound <= trunc.tail_tolerance)) {
        std::ostringstream os;
        os << "theta: truncation radius " << trunc.radius << " certifies tail " << bound
           << " > tolerance " << trunc.tail_tolerance;
        throw truncation_error(os.str());
    }

    const auto pts = ellipsoid_points(T.im(), trunc.radius);
    const CMat& t = T.mat();
    return parallel_term_sum(pts.size(), [&](std::size_t i) {
        const CVec k = pts[i].cast<cplx>();
        const cplx quad = k.transpose() * (t * k);
        const cplx lin = 2.0 * (k.transpose() * z)(0, 0);
        return std::exp(cplx(0.0, pi) * (quad + lin));
    });
}

QuasiPeriod QuasiPeriod::from(const SiegelPoint& T, const IVec& m) {
    if (m.size() != T.n()) throw validation_error("QuasiPeriod: m has wrong dimension");
    QuasiPeriod qp;
    qp.m = m;
    qp.lambda = T.mat() * m.cast<cplx>();
    return qp;
}

double quasi_period_check(const CVec& z, const SiegelPoint& T, const IVec& lambda_prime,
                          const TruncationParams& trunc) {
    const CVec shifted = z + lambda_prime.cast<cplx>();
    return std::abs(theta(shifted, T, trunc) - theta(z, T, trunc));
}

double quasi_period_check(const CVec& z, const SiegelPoint& T, const QuasiPeriod& qp,
                          const TruncationParams& trunc) {
    const CVec m = qp.m.cast<cplx>();
    const cplx quad = m.transpose() * (T.mat() * m);
    const cplx lin = (m.transpose() * z)(0, 0);
    const cplx factor = std::exp(cplx(0.0, -pi) * quad) * std::exp(cplx(0.0, -2.0 * pi) * lin);
    return std::abs(theta(z + qp.lambda, T, trunc) - factor * theta(z, T, trunc));
}

cplx modular_ratio(const SymplecticMatrix& g, const CVec& z, const SiegelPoint& T,
                   const TruncationParams& trunc) {
    if (g.n() != T.n()) throw validation_error("modular_ratio: dimension mismatch");
    const cplx base = theta(z, T, trunc);
    if (std::abs(base) < 1e-8)
        throw numeric_error("modular_ratio: theta(z, T) too close to zero; retry with another z");

    const SiegelPoint tp = act_siegel(g, T);
    const CVec zp = act_coord(g, z, T);
    const cplx moved = theta(zp, tp, trunc);

    const CMat c = int_to_cmat(g.block_c());
    const CMat d = int_to_cmat(g.block_d());
    const CMat m = c * T.mat() + d;
    const cplx det_root = std::sqrt(m.determinant()); // principal branch
    const CVec minv_cz = m.partialPivLu().solve((c * z).eval());
    const cplx phase = std::exp(cplx(0.0, pi) * (z.transpose() * minv_cz)(0, 0));
    return moved / (det_root * phase * base);
}

cplx averaged_theta(const CVec& z, const SiegelPoint& T, const std::vector<SymplecticMatrix>& group,
                    const TruncationParams& trunc) {
    if (group.empty()) throw validation_error("averaged_theta: empty group");
    for (const auto& g : group)
        for (const auto& h : group) {
            const SymplecticMatrix gh = g * h;
            bool found = false;
            for (const auto& e : group)
                if (e == gh) {
                    found = true;
                    break;
                }
            if (!found) throw validation_error("averaged_theta: group list not closed under multiplication");
        }

    cplx acc = 0;
    for (const auto& g : group) acc += theta(act_coord(g, z, T), act_siegel(g, T), trunc);
    return acc;
}

cplx invariant_theta(const RealCoordinate& x, const SiegelPoint& T, const TruncationParams& trunc) {
    if (x.dim() != T.n()) throw validation_error("invariant_theta: x has wrong dimension");
    const RMat gram = T.real_gram();
    const double bound = gaussian_tail_bound(gram, trunc.radius, 0.0);
    if (!(bound <= trunc.tail_tolerance)) {
        std::ostringstream os;
        os << "invariant_theta: truncation radius " << trunc.radius << " certifies tail " << bound
           << " > tolerance " << trunc.tail_tolerance;
        throw truncation_error(os.str());
    }

    const int n = T.n();
    const auto pts = ellipsoid_points(gram, trunc.radius);
    return parallel_term_sum(pts.size(), [&](std::size_t i) {
        const RVec k = pts[i].cast<double>();
        const double quad = k.dot(gram * k);
        double pairing = 0; // k1.x2 - k2.x1, the T-independent symplectic product
        for (int j = 0; j < n; ++j) pairing += k[j] * x.x2[j] - k[n + j] * x.x1[j];
        return std::exp(cplx(-pi * quad, 0.0)) * std::exp(cplx(0.0, 2.0 * pi * pairing));
    });
}

} // namespace qtorus
