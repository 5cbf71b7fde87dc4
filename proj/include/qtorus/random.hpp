#pragma once

#include <random>

#include "qtorus/siegel.hpp"
#include "qtorus/symplectic.hpp"

namespace qtorus {

using Rng = std::mt19937_64;

/// Random Siegel point: symmetric real part with entries in [-spread, spread],
/// imaginary part L L^t + I (positive definite, well conditioned).
SiegelPoint random_siegel(int n, Rng& rng, double spread = 1.0);

/// Product of `length` letters drawn from the alphabet.
SymplecticMatrix random_word(const std::vector<SymplecticMatrix>& alphabet, int length, Rng& rng);

RealCoordinate random_real_coordinate(int n, Rng& rng, double spread = 1.0);

LatticePoint random_lattice_point(int n, Rng& rng, int max_abs = 3);

CVec random_cvec(int n, Rng& rng, double spread = 1.0);

} // namespace qtorus
