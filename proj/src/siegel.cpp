#include "qtorus/siegel.hpp"

#include <cmath>

#include "qtorus/symplectic.hpp"

namespace qtorus {

SiegelPoint::SiegelPoint(CMat t) : t_(std::move(t)) {
    if (t_.rows() != t_.cols() || t_.rows() == 0) throw validation_error("SiegelPoint: T must be square and nonempty");
    const double asym = (t_ - t_.transpose()).cwiseAbs().maxCoeff();
    if (asym > symmetry_tol)
        throw validation_error("SiegelPoint: T not symmetric (max asymmetry " + std::to_string(asym) + ")");
    im_llt_.compute(t_.imag());
    if (im_llt_.info() != Eigen::Success)
        throw validation_error("SiegelPoint: Im T is not positive definite");
}

RMat SiegelPoint::real_gram() const {
    const int n = this->n();
    const RMat x = re();
    const RMat y = im();
    const RMat yinv_x = im_llt_.solve(x);   // Y^-1 X
    const RMat yinv = im_llt_.solve(RMat::Identity(n, n));
    RMat g(2 * n, 2 * n);
    g.topLeftCorner(n, n) = x * yinv_x + y;
    g.topRightCorner(n, n) = yinv_x.transpose(); // X Y^-1
    g.bottomLeftCorner(n, n) = yinv_x;
    g.bottomRightCorner(n, n) = yinv;
    return ((g + g.transpose()) / 2.0).eval();
}

bool SiegelPoint::almost_equal(const SiegelPoint& o, double tol) const {
    return n() == o.n() && (t_ - o.t_).cwiseAbs().maxCoeff() < tol;
}

CVec embed(const RealCoordinate& x, const SiegelPoint& T) {
    if (x.dim() != T.n()) throw validation_error("embed: dimension mismatch");
    return T.mat() * x.x1.cast<cplx>() + x.x2.cast<cplx>();
}

CVec embed(const LatticePoint& w, const SiegelPoint& T) { return embed(w.to_real(), T); }

cplx hermitian_form(const SiegelPoint& T, const CVec& s, const CVec& z) {
    if (s.size() != T.n() || z.size() != T.n()) throw validation_error("hermitian_form: dimension mismatch");
    // split the solve over real and imaginary parts; the factor is real
    const CVec zc = z.conjugate();
    const RVec yr = T.im_cholesky().solve(zc.real().eval());
    const RVec yi = T.im_cholesky().solve(zc.imag().eval());
    cplx acc = 0;
    for (int i = 0; i < s.size(); ++i) acc += s[i] * cplx(yr[i], yi[i]);
    return acc;
}

double symplectic_pairing(const SiegelPoint& T, const LatticePoint& k, const RealCoordinate& x) {
    const double computed = hermitian_form(T, embed(k, T), embed(x, T)).imag();
    const double exact = k.w1.cast<double>().dot(x.x2) - k.w2.cast<double>().dot(x.x1);
    if (std::abs(computed - exact) > 1e-10)
        throw std::logic_error("symplectic_pairing: Im H_T disagrees with k1.x2 - k2.x1; implementation bug");
    return computed;
}

namespace {

CMat int_to_cmat(const IntMat& m) {
    CMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = cplx(static_cast<double>(m(i, j)), 0.0);
    return r;
}

} // namespace

double im_transform_identity(const SymplecticMatrix& g, const SiegelPoint& T) {
    if (g.n() != T.n()) throw validation_error("im_transform_identity: dimension mismatch");
    const CMat c = int_to_cmat(g.block_c());
    const CMat d = int_to_cmat(g.block_d());
    const RMat lhs = act_siegel(g, T).im();
    const CMat mbar = c * T.mat().conjugate() + d;
    const CMat m = c * T.mat() + d;
    // (C conj(T) + D)^-t (Im T) (C T + D)^-1
    const CMat left = mbar.transpose().partialPivLu().solve(T.im().cast<cplx>());
    const CMat rhs = m.transpose().partialPivLu().solve(left.transpose()).transpose();
    return (lhs.cast<cplx>() - rhs).norm();
}

double lemma1_residual(const SymplecticMatrix& g, const SiegelPoint& T, const RealCoordinate& x,
                       const RealCoordinate& y) {
    const cplx base = hermitian_form(T, embed(x, T), embed(y, T));
    const SiegelPoint gt = act_siegel(g, T);
    const cplx moved = hermitian_form(gt, embed(act_real(g, x), gt), embed(act_real(g, y), gt));
    return std::abs(base - moved);
}

} // namespace qtorus
