#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qtorus/algebra.hpp"
#include "qtorus/lattice.hpp"
#include "qtorus/siegel.hpp"
#include "qtorus/symplectic.hpp"

namespace qtorus {

/// Closed-form section f(x, T) of the module bundle. Operators wrap the
/// evaluator symbolically, so only final scalar products are numerical.
struct TestFunction {
    std::string label;
    std::function<cplx(const RealCoordinate&, const SiegelPoint&)> eval;

    cplx operator()(const RealCoordinate& x, const SiegelPoint& T) const { return eval(x, T); }
};

TestFunction constant_one();
/// x -> embed(x, T)^alpha (componentwise powers), holomorphic in the
/// embedded variable.
TestFunction monomial(const IVec& alpha);
/// x -> exp(pi H_T(embed(x), c)).
TestFunction coherent(const CVec& c);

/// (pi_w f)(x, T) = e^{-pi H_T(x, w) - (pi/2) H_T(w, w)} f(x + w, T).
TestFunction op_pi(const LatticePoint& w, TestFunction f);
/// pi(a) f = sum_w a_w pi_w f  for a coefficient map (bundle with
/// T-independent coefficients).
TestFunction op_pi(const std::map<LatticePoint, cplx>& a, TestFunction f);
/// (u(g) f)(x, T) = f(g.x, g.T); composes as u(g) u(h) = u(h g).
TestFunction op_u(const SymplecticMatrix& g, TestFunction f);

/// Gauss-Hermite nodes mapped through the Cholesky factor of the real
/// Gram form of H_T; absorbs the Gaussian weight. Sum of weights is the
/// Gaussian normalization integral, equal to 1 for every T.
class QuadratureGrid {
public:
    QuadratureGrid(const SiegelPoint& T, int points_per_axis);

    const SiegelPoint& fiber() const { return fiber_; }
    int order() const { return order_; }
    std::size_t size() const { return static_cast<std::size_t>(weights_.size()); }

    RealCoordinate node(std::size_t i) const;
    double weight(std::size_t i) const { return weights_[static_cast<Eigen::Index>(i)]; }

    /// sum of weights; the covolume-1 normalization check.
    double normalization() const { return weights_.sum(); }

    void require_fiber(const SiegelPoint& T) const;

private:
    SiegelPoint fiber_;
    int order_;
    RMat nodes_;  // (2n) x N
    RVec weights_;
};

/// Physicists' Gauss-Hermite rule for weight e^{-t^2} (Golub-Welsch).
std::pair<RVec, RVec> gauss_hermite(int order);

/// <f, h>_T = integral f conj(h) e^{-pi H_T(x,x)} dx over R^2n.
cplx scalar_product(const TestFunction& f, const TestFunction& h, const SiegelPoint& T,
                    const QuadratureGrid& grid);

/// A-valued inner product <<f, h>>(T) = sum_w <f, pi_w h>_T e(w) over the
/// H_T-ball of trunc.radius.
AlgebraElement algebra_inner(const TestFunction& f, const TestFunction& h, const SiegelPoint& T,
                             const TruncationParams& trunc, const QuadratureGrid& grid);

/// max over samples of |(u(g) pi(a) u(g^-1) f)(x,T) - (pi(eps(g)a) f)(x,T)|.
double check_covariance(const SymplecticMatrix& g, const std::map<LatticePoint, cplx>& a,
                        const TestFunction& f,
                        const std::vector<std::pair<RealCoordinate, SiegelPoint>>& samples);

/// max over samples of |(u(g) pi_w u(g^-1) f)(x,T) - (pi_{g^-1.w} f)(x,T)|.
double conjugation_identity_residual(const SymplecticMatrix& g, const LatticePoint& w,
                                     const TestFunction& f,
                                     const std::vector<std::pair<RealCoordinate, SiegelPoint>>& samples);

/// | <f, h>_{g.T} - <u(g) f, u(g) h>_T |, each side on its own grid.
double lemma2_check(const SymplecticMatrix& g, const TestFunction& f, const TestFunction& h,
                    const SiegelPoint& T, const QuadratureGrid& grid_at_T,
                    const QuadratureGrid& grid_at_gT);

} // namespace qtorus
