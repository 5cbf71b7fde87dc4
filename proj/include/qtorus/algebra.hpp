#pragma once

#include <map>

#include "qtorus/lattice.hpp"
#include "qtorus/siegel.hpp"
#include "qtorus/symplectic.hpp"

namespace qtorus {

/// k1^t v2 - k2^t v1, exact.
i64 lattice_pairing(const LatticePoint& w, const LatticePoint& v);

/// The twisting bicharacter alpha(w, v) = exp(-pi i Im H_T(w, v)). On the
/// integer lattice the pairing is an integer, so alpha is +-1; the fock
/// module's operator-composition oracle pins the sign convention.
cplx cocycle(const SiegelPoint& T, const LatticePoint& w, const LatticePoint& v);

/// Finite-support element a = sum_w a_w e(w) of the twisted lattice
/// algebra, attached to one fiber T. Coefficients below prune_threshold
/// are dropped.
class AlgebraElement {
public:
    static constexpr double prune_threshold = 1e-15;

    explicit AlgebraElement(SiegelPoint fiber) : fiber_(std::move(fiber)) {}

    static AlgebraElement unit(const SiegelPoint& fiber);
    static AlgebraElement delta(const SiegelPoint& fiber, const LatticePoint& w, cplx c = {1.0, 0.0});

    const SiegelPoint& fiber() const { return fiber_; }
    int n() const { return fiber_.n(); }
    const std::map<LatticePoint, cplx>& support() const { return coeff_; }

    cplx coefficient(const LatticePoint& w) const;
    void add(const LatticePoint& w, cplx c);
    void prune();

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement scaled(cplx s) const;

    /// Largest coefficient difference against another element on the
    /// union of supports.
    double distance(const AlgebraElement& o) const;

private:
    SiegelPoint fiber_;
    std::map<LatticePoint, cplx> coeff_;
};

/// Twisted convolution: coefficient at u is sum_{w+v=u} a_w b_v alpha(w, v).
AlgebraElement algebra_mul(const AlgebraElement& a, const AlgebraElement& b);

/// Relabel the support by w -> g^-1 . w (exact); the coefficient map form
/// of epsilon(g) used for bundle-level checks at arbitrary g.
std::map<LatticePoint, cplx> eps_relabel(const SymplecticMatrix& g,
                                         const std::map<LatticePoint, cplx>& coeff);

/// epsilon(g) on a fixed fiber: requires g in the stabilizer of T (checked
/// via act_siegel within fix_tol). Composition runs in the same
/// orientation as u: eps(g) eps(h) = eps(h g).
AlgebraElement eps_action(const SymplecticMatrix& g, const AlgebraElement& a, double fix_tol = 1e-10);

/// Manin model-II quantum theta: coefficient exp(-(pi/2) H_T(w,w)) on the
/// H_T-ball of the given radius.
AlgebraElement quantum_theta(const SiegelPoint& T, const TruncationParams& trunc);

/// Finite formal sum b = sum_g b_g g over stabilizer elements, every fiber
/// equal to the fixed T.
class CrossedElement {
public:
    explicit CrossedElement(SiegelPoint fiber, double fix_tol = 1e-10)
        : fiber_(std::move(fiber)), fix_tol_(fix_tol) {}

    static CrossedElement unit(const SiegelPoint& fiber, double fix_tol = 1e-10);

    const SiegelPoint& fiber() const { return fiber_; }
    double fix_tol() const { return fix_tol_; }
    const std::map<SymplecticMatrix, AlgebraElement>& terms() const { return terms_; }

    /// Inserts b_g (adding to an existing coefficient). g must stabilize
    /// the fiber and the element must live on the same fiber.
    void add(const SymplecticMatrix& g, const AlgebraElement& a);

    double distance(const CrossedElement& o) const;

private:
    SiegelPoint fiber_;
    double fix_tol_;
    std::map<SymplecticMatrix, AlgebraElement> terms_;
};

/// (b * c)_h = sum_g b_g . eps(g)(c_{g^-1 h}).
CrossedElement crossed_mul(const CrossedElement& b, const CrossedElement& c);

} // namespace qtorus
