#pragma once

#include <complex>
#include <vector>

#include "qtorus/lattice.hpp"
#include "qtorus/siegel.hpp"
#include "qtorus/symplectic.hpp"

namespace qtorus {

/// theta(z, T) = sum_{k in Z^n} exp(pi i (k^t T k + 2 k^t z)), truncated
/// to the ball k^t (Im T) k <= radius^2. Raises truncation_error when the
/// Gaussian tail bound (which accounts for Im z) exceeds tail_tolerance.
cplx theta(const CVec& z, const SiegelPoint& T, const TruncationParams& trunc);

/// Certified tail bound for the truncated theta sum at this z.
double theta_tail_bound(const CVec& z, const SiegelPoint& T, const TruncationParams& trunc);

/// A lattice shift lambda = T m along the second sublattice, carrying the
/// quasi-periodicity factor c(lambda) e^{q(lambda, z)}.
struct QuasiPeriod {
    IVec m;
    CVec lambda;

    static QuasiPeriod from(const SiegelPoint& T, const IVec& m);
};

/// | theta(z + lambda') - theta(z) |  for an integer shift lambda'.
double quasi_period_check(const CVec& z, const SiegelPoint& T, const IVec& lambda_prime,
                          const TruncationParams& trunc);

/// | theta(z + T m) - e^{-pi i m^t T m} e^{-2 pi i m^t z} theta(z) |.
double quasi_period_check(const CVec& z, const SiegelPoint& T, const QuasiPeriod& qp,
                          const TruncationParams& trunc);

/// theta(g.z, g.T) / [ det(C T + D)^(1/2) e^{pi i z^t (CT+D)^-1 C z} theta(z, T) ]
/// with the principal square-root branch. For g in the theta subgroup this
/// is an eighth root of unity independent of z. Raises numeric_error when
/// |theta(z, T)| is too small to divide by; callers retry with another z.
cplx modular_ratio(const SymplecticMatrix& g, const CVec& z, const SiegelPoint& T,
                   const TruncationParams& trunc);

/// Group-averaged sum  Theta_1(z, T) = sum_{g in G} theta(g.z, g.T).
/// G must be closed under multiplication (checked). Invariant under the
/// group action but, deliberately, not quasi-periodic.
cplx averaged_theta(const CVec& z, const SiegelPoint& T, const std::vector<SymplecticMatrix>& group,
                    const TruncationParams& trunc);

/// The invariant variant
///   sum_{k in Z^2n} exp(-pi H_T(k,k) + 2 pi i (k1^t x2 - k2^t x1)),
/// truncated to H_T(k,k) <= radius^2; invariant under Sp(2n,Z) acting by
/// (x, T) -> (g.x, g.T) and under integer shifts of x1 and x2.
cplx invariant_theta(const RealCoordinate& x, const SiegelPoint& T, const TruncationParams& trunc);

} // namespace qtorus
