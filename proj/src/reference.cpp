#include "qtorus/reference.hpp"

#include <cmath>

namespace qtorus::reference {

namespace {
constexpr double pi = M_PI;

// box bound |k_i| <= r sqrt((Q^-1)_ii)
Eigen::VectorXi box_bound(const RMat& q, double radius) {
    const Eigen::MatrixXd qinv = q.llt().solve(Eigen::MatrixXd::Identity(q.rows(), q.cols()));
    Eigen::VectorXi b(q.rows());
    for (int i = 0; i < q.rows(); ++i) b[i] = static_cast<int>(std::floor(radius * std::sqrt(qinv(i, i)) + 1e-12));
    return b;
}
} // namespace

cplx classical_theta(const CVec& z, const SiegelPoint& T, double radius) {
    const int n = T.n();
    const RMat y = T.im();
    const Eigen::VectorXi b = box_bound(y, radius);
    const double r2 = radius * radius * (1.0 + 1e-14) + 1e-14;

    cplx acc(0.0, 0.0);
    Eigen::VectorXi k = -b;
    for (;;) {
        const RVec kd = k.cast<double>();
        if (kd.dot(y * kd) <= r2) {
            const CVec kc = k.cast<cplx>();
            const cplx quad = kc.transpose() * (T.mat() * kc);
            const cplx lin = 2.0 * (kc.transpose() * z)(0, 0);
            acc += std::exp(cplx(0.0, pi) * (quad + lin));
        }
        int axis = n - 1;
        while (axis >= 0) {
            if (++k[axis] <= b[axis]) break;
            k[axis] = -b[axis];
            --axis;
        }
        if (axis < 0) break;
    }
    return acc;
}

cplx invariant_theta(const RealCoordinate& x, const SiegelPoint& T, double radius) {
    const int n = T.n();
    const RMat gram = T.real_gram();
    const Eigen::VectorXi b = box_bound(gram, radius);
    const double r2 = radius * radius * (1.0 + 1e-14) + 1e-14;

    cplx acc(0.0, 0.0);
    Eigen::VectorXi k = -b;
    for (;;) {
        const RVec kd = k.cast<double>();
        const double quad = kd.dot(gram * kd);
        if (quad <= r2) {
            double pairing = 0;
            for (int j = 0; j < n; ++j) pairing += kd[j] * x.x2[j] - kd[n + j] * x.x1[j];
            acc += std::exp(cplx(-pi * quad, 2.0 * pi * pairing));
        }
        int axis = 2 * n - 1;
        while (axis >= 0) {
            if (++k[axis] <= b[axis]) break;
            k[axis] = -b[axis];
            --axis;
        }
        if (axis < 0) break;
    }
    return acc;
}

cplx scalar_product(const TestFunction& f, const TestFunction& h, const SiegelPoint& T,
                    const QuadratureGrid& grid) {
    grid.require_fiber(T);
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const RealCoordinate x = grid.node(i);
        acc += grid.weight(i) * f(x, T) * std::conj(h(x, T));
    }
    return acc;
}

} // namespace qtorus::reference
