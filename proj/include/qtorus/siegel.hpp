#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qtorus/errors.hpp"
#include "qtorus/intmat.hpp"

namespace qtorus {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;
using IVec = Eigen::VectorXi;

class SymplecticMatrix; // symplectic.hpp

/// A point T of the Siegel upper half space: complex symmetric n x n
/// with positive definite imaginary part. Validated on construction;
/// immutable afterwards (the Cholesky factor of Im T is cached).
class SiegelPoint {
public:
    static constexpr double symmetry_tol = 1e-12;

    explicit SiegelPoint(CMat t);

    int n() const { return static_cast<int>(t_.rows()); }
    const CMat& mat() const { return t_; }
    RMat re() const { return t_.real(); }
    RMat im() const { return t_.imag(); }
    const Eigen::LLT<RMat>& im_cholesky() const { return im_llt_; }

    /// Gram matrix G of the real quadratic form H_T(x,x) in stacked
    /// (x1,x2) coordinates:  G = [[X Y^-1 X + Y, X Y^-1], [Y^-1 X, Y^-1]]
    /// with T = X + iY. det G = 1 and G^-1 = -Js G Js for the standard
    /// symplectic Js; both are exercised by tests.
    RMat real_gram() const;

    bool almost_equal(const SiegelPoint& o, double tol = 1e-12) const;

private:
    CMat t_;
    Eigen::LLT<RMat> im_llt_;
};

/// Free real coordinates (x1, x2); embeds into C^n as T x1 + x2.
struct RealCoordinate {
    RVec x1, x2;

    RealCoordinate() = default;
    RealCoordinate(RVec a, RVec b) : x1(std::move(a)), x2(std::move(b)) {
        if (x1.size() != x2.size()) throw validation_error("RealCoordinate: component size mismatch");
    }

    int dim() const { return static_cast<int>(x1.size()); }
    RVec stacked() const {
        RVec s(2 * x1.size());
        s << x1, x2;
        return s;
    }
    static RealCoordinate from_stacked(const RVec& s) {
        auto d = s.size() / 2;
        return RealCoordinate(s.head(d), s.tail(d));
    }
};

/// Integer lattice coordinates (w1, w2) in D = Z^n x Z^n; embeds as
/// T w1 + w2.
struct LatticePoint {
    IVec w1, w2;

    LatticePoint() = default;
    LatticePoint(IVec a, IVec b) : w1(std::move(a)), w2(std::move(b)) {
        if (w1.size() != w2.size()) throw validation_error("LatticePoint: component size mismatch");
    }
    static LatticePoint zero(int n) { return LatticePoint(IVec::Zero(n), IVec::Zero(n)); }

    int dim() const { return static_cast<int>(w1.size()); }
    bool is_zero() const { return w1.isZero() && w2.isZero(); }

    RealCoordinate to_real() const { return RealCoordinate(w1.cast<double>(), w2.cast<double>()); }

    LatticePoint operator+(const LatticePoint& o) const { return LatticePoint(w1 + o.w1, w2 + o.w2); }
    LatticePoint operator-() const { return LatticePoint(-w1, -w2); }

    bool operator==(const LatticePoint& o) const {
        return w1.size() == o.w1.size() && w1 == o.w1 && w2 == o.w2;
    }
    bool operator<(const LatticePoint& o) const {
        if (w1.size() != o.w1.size()) return w1.size() < o.w1.size();
        for (int i = 0; i < w1.size(); ++i)
            if (w1[i] != o.w1[i]) return w1[i] < o.w1[i];
        for (int i = 0; i < w2.size(); ++i)
            if (w2[i] != o.w2[i]) return w2[i] < o.w2[i];
        return false;
    }
};

/// x1, x2 -> T x1 + x2.
CVec embed(const RealCoordinate& x, const SiegelPoint& T);
CVec embed(const LatticePoint& w, const SiegelPoint& T);

/// H_T(s, z) = s^t (Im T)^-1 conj(z). Linear in s, conjugate-linear in z;
/// H_T(z, z) is real and positive for z != 0.
cplx hermitian_form(const SiegelPoint& T, const CVec& s, const CVec& z);

/// Im H_T(embed(k), embed(x)) = k1.x2 - k2.x1, independent of T. Returns
/// the numerically computed imaginary part and raises std::logic_error
/// if it disagrees with the exact combination beyond 1e-10.
double symplectic_pairing(const SiegelPoint& T, const LatticePoint& k, const RealCoordinate& x);

/// Frobenius norm of  Im(g.T) - (C conj(T) + D)^-t (Im T) (C T + D)^-1.
double im_transform_identity(const SymplecticMatrix& g, const SiegelPoint& T);

/// | H_T(x,y) - H_{g.T}(g.x, g.y) |  with g acting on coordinates in the
/// real basis and the transformed pair embedded at g.T.
double lemma1_residual(const SymplecticMatrix& g, const SiegelPoint& T, const RealCoordinate& x,
                       const RealCoordinate& y);

} // namespace qtorus
