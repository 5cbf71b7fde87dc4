#pragma once

#include <json.hpp>

#include "qtorus/algebra.hpp"
#include "qtorus/siegel.hpp"
#include "qtorus/symplectic.hpp"

namespace qtorus {

using json = nlohmann::json;

// Integer matrices serialize as arrays of integer rows; SiegelPoint as
// nested arrays of [re, im] pairs. For n = 1 the entry pair may stand in
// for its row, so "[[0, 1]]" reads as T = i.

json to_json(const IntMat& m);
IntMat intmat_from_json(const json& j);

json to_json(const SymplecticMatrix& g);
SymplecticMatrix symplectic_from_json(const json& j);

json to_json(const SiegelPoint& T);
SiegelPoint siegel_from_json(const json& j);

/// List of {w1, w2, re, im}; entries with |coeff| below flag_threshold get
/// "below_resolution": true.
json to_json(const AlgebraElement& a, double flag_threshold = 0.0);
AlgebraElement algebra_from_json(const json& j, const SiegelPoint& fiber);

/// List of {g, element}.
json to_json(const CrossedElement& b);

json to_json(const CVec& z);
CVec cvec_from_json(const json& j);

} // namespace qtorus
