#pragma once

#include "qtorus/fock.hpp"
#include "qtorus/siegel.hpp"

// Straightforward serial evaluators, written independently of the
// parallel kernels (plain box loops, running accumulation). Tests compare
// the kernels against these; the bench target times both.
namespace qtorus::reference {

cplx classical_theta(const CVec& z, const SiegelPoint& T, double radius);

cplx invariant_theta(const RealCoordinate& x, const SiegelPoint& T, double radius);

cplx scalar_product(const TestFunction& f, const TestFunction& h, const SiegelPoint& T,
                    const QuadratureGrid& grid);

} // namespace qtorus::reference
