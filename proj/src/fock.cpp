#include "qtorus/fock.hpp"

#include <cmath>

namespace qtorus {

namespace {
constexpr double pi = M_PI;
}

TestFunction constant_one() {
    return {"1", [](const RealCoordinate&, const SiegelPoint&) { return cplx(1.0, 0.0); }};
}

TestFunction monomial(const IVec& alpha) {
    return {"monomial", [alpha](const RealCoordinate& x, const SiegelPoint& T) {
                const CVec z = embed(x, T);
                if (z.size() != alpha.size()) throw validation_error("monomial: dimension mismatch");
                cplx acc(1.0, 0.0);
                for (int i = 0; i < alpha.size(); ++i)
                    for (int p = 0; p < alpha[i]; ++p) acc *= z[i];
                return acc;
            }};
}

TestFunction coherent(const CVec& c) {
    return {"coherent", [c](const RealCoordinate& x, const SiegelPoint& T) {
                return std::exp(pi * hermitian_form(T, embed(x, T), c));
            }};
}

TestFunction op_pi(const LatticePoint& w, TestFunction f) {
    auto inner = std::move(f.eval);
    return {"pi_w[" + f.label + "]", [w, inner](const RealCoordinate& x, const SiegelPoint& T) {
                const CVec we = embed(w, T);
                const cplx hxw = hermitian_form(T, embed(x, T), we);
                const cplx hww = hermitian_form(T, we, we);
                const RealCoordinate shifted(x.x1 + w.w1.cast<double>(), x.x2 + w.w2.cast<double>());
                return std::exp(-pi * hxw - 0.5 * pi * hww) * inner(shifted, T);
            }};
}

TestFunction op_pi(const std::map<LatticePoint, cplx>& a, TestFunction f) {
    std::vector<std::pair<cplx, TestFunction>> parts;
    parts.reserve(a.size());
    for (const auto& [w, c] : a) parts.emplace_back(c, op_pi(w, f));
    return {"pi(a)[" + f.label + "]", [parts](const RealCoordinate& x, const SiegelPoint& T) {
                cplx acc(0.0, 0.0);
                for (const auto& [c, g] : parts) acc += c * g(x, T);
                return acc;
            }};
}

TestFunction op_u(const SymplecticMatrix& g, TestFunction f) {
    auto inner = std::move(f.eval);
    return {"u(g)[" + f.label + "]", [g, inner](const RealCoordinate& x, const SiegelPoint& T) {
                return inner(act_real(g, x), act_siegel(g, T));
            }};
}

std::pair<RVec, RVec> gauss_hermite(int order) {
    if (order < 1) throw validation_error("gauss_hermite: order must be positive");
    // Golub-Welsch on the Jacobi matrix of the (physicists') Hermite
    // recurrence; weight function e^{-t^2} with total mass sqrt(pi).
    RMat jac = RMat::Zero(order, order);
    for (int k = 1; k < order; ++k) {
        const double b = std::sqrt(k / 2.0);
        jac(k, k - 1) = b;
        jac(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<RMat> es(jac);
    RVec nodes = es.eigenvalues();
    RVec weights(order);
    const double mass = std::sqrt(pi);
    for (int k = 0; k < order; ++k) {
        const double v = es.eigenvectors()(0, k);
        weights[k] = mass * v * v;
    }
    return {nodes, weights};
}

QuadratureGrid::QuadratureGrid(const SiegelPoint& T, int points_per_axis)
    : fiber_(T), order_(points_per_axis) {
    if (points_per_axis < 1) throw validation_error("QuadratureGrid: order must be positive");
    const int d = 2 * T.n();
    const auto [gh_nodes, gh_weights] = gauss_hermite(points_per_axis);

    Eigen::LLT<RMat> llt(T.real_gram());
    if (llt.info() != Eigen::Success) throw validation_error("QuadratureGrid: Gram form not positive definite");
    const RMat lt = llt.matrixL().transpose(); // G = L L^t, map s -> L^-t s / sqrt(pi)

    std::size_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::size_t>(points_per_axis);
    nodes_.resize(d, static_cast<Eigen::Index>(count));
    weights_.resize(static_cast<Eigen::Index>(count));

    const double wnorm = std::pow(pi, -0.5 * d);
    std::vector<int> idx(d, 0);
    RVec s(d);
    for (std::size_t m = 0; m < count; ++m) {
        double w = wnorm;
        for (int i = 0; i < d; ++i) {
            s[i] = gh_nodes[idx[i]];
            w *= gh_weights[idx[i]];
        }
        nodes_.col(static_cast<Eigen::Index>(m)) =
            lt.triangularView<Eigen::Upper>().solve(s) / std::sqrt(pi);
        weights_[static_cast<Eigen::Index>(m)] = w;
        for (int axis = d - 1; axis >= 0; --axis) {
            if (++idx[axis] < points_per_axis) break;
            idx[axis] = 0;
        }
    }
}

RealCoordinate QuadratureGrid::node(std::size_t i) const {
    const int n = fiber_.n();
    const RVec col = nodes_.col(static_cast<Eigen::Index>(i));
    return RealCoordinate(col.head(n), col.tail(n));
}

void QuadratureGrid::require_fiber(const SiegelPoint& T) const {
    if (!fiber_.almost_equal(T))
        throw validation_error("QuadratureGrid: grid was built for a different fiber T");
}

cplx scalar_product(const TestFunction& f, const TestFunction& h, const SiegelPoint& T,
                    const QuadratureGrid& grid) {
    grid.require_fiber(T);
    return parallel_term_sum(grid.size(), [&](std::size_t i) {
        const RealCoordinate x = grid.node(i);
        return grid.weight(i) * f(x, T) * std::conj(h(x, T));
    });
}

AlgebraElement algebra_inner(const TestFunction& f, const TestFunction& h, const SiegelPoint& T,
                             const TruncationParams& trunc, const QuadratureGrid& grid) {
    grid.require_fiber(T);
    const int n = T.n();
    AlgebraElement a(T);
    for (const auto& k : ellipsoid_points(T.real_gram(), trunc.radius)) {
        const LatticePoint w(k.head(n), k.tail(n));
        a.add(w, scalar_product(f, op_pi(w, h), T, grid));
    }
    return a;
}

double check_covariance(const SymplecticMatrix& g, const std::map<LatticePoint, cplx>& a,
                        const TestFunction& f,
                        const std::vector<std::pair<RealCoordinate, SiegelPoint>>& samples) {
    const TestFunction lhs = op_u(g, op_pi(a, op_u(g.inverse(), f)));
    const TestFunction rhs = op_pi(eps_relabel(g, a), f);
    double m = 0;
    for (const auto& [x, T] : samples) m = std::max(m, std::abs(lhs(x, T) - rhs(x, T)));
    return m;
}

double conjugation_identity_residual(const SymplecticMatrix& g, const LatticePoint& w,
                                     const TestFunction& f,
                                     const std::vector<std::pair<RealCoordinate, SiegelPoint>>& samples) {
    const TestFunction lhs = op_u(g, op_pi(w, op_u(g.inverse(), f)));
    const TestFunction rhs = op_pi(act_real(g.inverse(), w), f);
    double m = 0;
    for (const auto& [x, T] : samples) m = std::max(m, std::abs(lhs(x, T) - rhs(x, T)));
    return m;
}

double lemma2_check(const SymplecticMatrix& g, const TestFunction& f, const TestFunction& h,
                    const SiegelPoint& T, const QuadratureGrid& grid_at_T,
                    const QuadratureGrid& grid_at_gT) {
    const SiegelPoint gt = act_siegel(g, T);
    grid_at_gT.require_fiber(gt);
    const cplx lhs = scalar_product(f, h, gt, grid_at_gT);
    const cplx rhs = scalar_product(op_u(g, f), op_u(g, h), T, grid_at_T);
    return std::abs(lhs - rhs);
}

} // namespace qtorus
