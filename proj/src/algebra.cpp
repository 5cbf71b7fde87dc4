#include "qtorus/algebra.hpp"

#include <cmath>

namespace qtorus {

i64 lattice_pairing(const LatticePoint& w, const LatticePoint& v) {
    if (w.dim() != v.dim()) throw validation_error("lattice_pairing: dimension mismatch");
    i64 acc = 0;
    for (int i = 0; i < w.dim(); ++i) {
        acc = checked_add(acc, checked_mul(w.w1[i], v.w2[i]));
        acc = checked_sub(acc, checked_mul(w.w2[i], v.w1[i]));
    }
    return acc;
}

cplx cocycle(const SiegelPoint& T, const LatticePoint& w, const LatticePoint& v) {
    if (w.dim() != T.n() || v.dim() != T.n()) throw validation_error("cocycle: dimension mismatch");
    const i64 s = lattice_pairing(w, v); // = Im H_T(w, v) for any T
    return (s % 2 == 0) ? cplx(1.0, 0.0) : cplx(-1.0, 0.0);
}

AlgebraElement AlgebraElement::unit(const SiegelPoint& fiber) {
    return delta(fiber, LatticePoint::zero(fiber.n()));
}

AlgebraElement AlgebraElement::delta(const SiegelPoint& fiber, const LatticePoint& w, cplx c) {
    AlgebraElement a(fiber);
    a.add(w, c);
    return a;
}

cplx AlgebraElement::coefficient(const LatticePoint& w) const {
    const auto it = coeff_.find(w);
    return it == coeff_.end() ? cplx(0.0, 0.0) : it->second;
}

void AlgebraElement::add(const LatticePoint& w, cplx c) {
    if (w.dim() != n()) throw validation_error("AlgebraElement: lattice point has wrong dimension");
    auto [it, inserted] = coeff_.try_emplace(w, c);
    if (!inserted) it->second += c;
    if (std::abs(it->second) < prune_threshold) coeff_.erase(it);
}

void AlgebraElement::prune() {
    for (auto it = coeff_.begin(); it != coeff_.end();)
        it = std::abs(it->second) < prune_threshold ? coeff_.erase(it) : std::next(it);
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (!fiber_.almost_equal(o.fiber_)) throw validation_error("AlgebraElement: fiber mismatch in sum");
    AlgebraElement r = *this;
    for (const auto& [w, c] : o.coeff_) r.add(w, c);
    return r;
}

AlgebraElement AlgebraElement::scaled(cplx s) const {
    AlgebraElement r(fiber_);
    for (const auto& [w, c] : coeff_) r.add(w, s * c);
    return r;
}

double AlgebraElement::distance(const AlgebraElement& o) const {
    double m = 0;
    for (const auto& [w, c] : coeff_) m = std::max(m, std::abs(c - o.coefficient(w)));
    for (const auto& [w, c] : o.coeff_) m = std::max(m, std::abs(coefficient(w) - c));
    return m;
}

AlgebraElement algebra_mul(const AlgebraElement& a, const AlgebraElement& b) {
    if (!a.fiber().almost_equal(b.fiber())) throw validation_error("algebra_mul: fiber mismatch");
    AlgebraElement r(a.fiber());
    for (const auto& [w, cw] : a.support())
        for (const auto& [v, cv] : b.support()) r.add(w + v, cw * cv * cocycle(a.fiber(), w, v));
    return r;
}

std::map<LatticePoint, cplx> eps_relabel(const SymplecticMatrix& g, const std::map<LatticePoint, cplx>& coeff) {
    const SymplecticMatrix ginv = g.inverse();
    std::map<LatticePoint, cplx> out;
    for (const auto& [w, c] : coeff) out[act_real(ginv, w)] += c;
    return out;
}

AlgebraElement eps_action(const SymplecticMatrix& g, const AlgebraElement& a, double fix_tol) {
    const SiegelPoint moved = act_siegel(g, a.fiber());
    if (!moved.almost_equal(a.fiber(), fix_tol))
        throw validation_error("eps_action: g does not stabilize the fiber T");
    AlgebraElement r(a.fiber());
    for (const auto& [w, c] : eps_relabel(g, a.support())) r.add(w, c);
    return r;
}

AlgebraElement quantum_theta(const SiegelPoint& T, const TruncationParams& trunc) {
    const RMat gram = T.real_gram();
    // coefficients are exp(-(pi/2)|w|_G^2) = exp(-pi |w|_{G/2}^2); the ball
    // |w|_G <= r is |w|_{G/2} <= r/sqrt(2)
    const double bound = gaussian_tail_bound(0.5 * gram, trunc.radius / std::sqrt(2.0), 0.0);
    if (!(bound <= trunc.tail_tolerance))
        throw truncation_error("quantum_theta: truncation radius cannot certify the coefficient tail");

    const int n = T.n();
    AlgebraElement a(T);
    for (const auto& k : ellipsoid_points(gram, trunc.radius)) {
        const RVec kd = k.cast<double>();
        const double q = kd.dot(gram * kd);
        a.add(LatticePoint(k.head(n), k.tail(n)), std::exp(-0.5 * M_PI * q));
    }
    return a;
}

CrossedElement CrossedElement::unit(const SiegelPoint& fiber, double fix_tol) {
    CrossedElement b(fiber, fix_tol);
    b.add(SymplecticMatrix::identity(fiber.n()), AlgebraElement::unit(fiber));
    return b;
}

void CrossedElement::add(const SymplecticMatrix& g, const AlgebraElement& a) {
    if (!a.fiber().almost_equal(fiber_)) throw validation_error("CrossedElement: fiber mismatch");
    if (!act_siegel(g, fiber_).almost_equal(fiber_, fix_tol_))
        throw validation_error("CrossedElement: group label outside the stabilizer of T");
    auto it = terms_.find(g);
    if (it == terms_.end())
        terms_.emplace(g, a);
    else
        it->second = it->second + a;
}

double CrossedElement::distance(const CrossedElement& o) const {
    double m = 0;
    auto side = [&m](const CrossedElement& x, const CrossedElement& y) {
        for (const auto& [g, a] : x.terms_) {
            const auto it = y.terms_.find(g);
            if (it == y.terms_.end()) {
                for (const auto& [w, c] : a.support()) m = std::max(m, std::abs(c));
            } else {
                m = std::max(m, a.distance(it->second));
            }
        }
    };
    side(*this, o);
    side(o, *this);
    return m;
}

CrossedElement crossed_mul(const CrossedElement& b, const CrossedElement& c) {
    if (!b.fiber().almost_equal(c.fiber())) throw validation_error("crossed_mul: fiber mismatch");
    CrossedElement d(b.fiber(), b.fix_tol());
    for (const auto& [g, bg] : b.terms())
        for (const auto& [gp, cgp] : c.terms())
            d.add(g * gp, algebra_mul(bg, eps_action(g, cgp, b.fix_tol())));
    return d;
}

} // namespace qtorus
