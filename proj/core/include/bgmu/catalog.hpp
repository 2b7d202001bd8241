// Preset based root data: GL_n, SL_n, PGL_n, Sp_{2n}, SO_{2n+1} and the
// quasi-split unitary datum, plus the adjoint quotient construction.
#pragma once

#include "bgmu/root_datum.hpp"

#include <string>

namespace bgmu {

struct GroupSpec {
  std::string family;  // "GL", "SL", "PGL", "Sp", "SO_odd", "U"
  int n = 0;           // GL_n / SL_n / PGL_n / Sp_{2n} / SO_{2n+1} / U(n)
};

/// Build the preset datum; throws std::invalid_argument for unknown families
/// or out-of-range n.
RootDatum build_group(const GroupSpec& spec);

struct AdjointQuotient {
  RootDatum datum;       // coweight lattice of the derived root system
  IntMatrix projection;  // coordinate projection X_*(T) -> new lattice
};

/// The adjoint quotient: lattice replaced by the coweight lattice of the
/// derived system (coordinates = pairings with the simple roots), with the
/// induced Galois action.
AdjointQuotient adjoint_quotient(const RootDatum& rd);

}  // namespace bgmu
