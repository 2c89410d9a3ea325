#pragma once

#include "knotarith/foxhom/group_ring.hpp"

#include <string>
#include <vector>

namespace knotarith::fox {

/// Degreewise maps k = 0, 1, 2 in row convention.
using LaurentChainMap = std::vector<LaurentMatrix>;

/// zeta : Q -> Q^*: 0_ -> r*, m_ -> -m l*, l_ -> l m*, r_ -> -m l 0*.
LaurentChainMap zeta_map();
/// r* -> 0_, m* -> l^-1 l_, l* -> -m^-1 m_, 0* -> -l^-1 m^-1 r_.
LaurentChainMap zeta_inverse_map();
/// Adjoint Q^** -> Q^*: 0** -> -m^-1 l^-1 r*, m** -> l^-1 l*, l** -> -m^-1 m*, r** -> 0*.
/// Degree k of Q^** is identified with Q_k, so each matrix has the shape of zeta_k.
LaurentChainMap zeta_adjoint_map();

struct NamedCheck {
  std::string name;
  bool passed = false;
};

struct ZetaVerdict {
  std::vector<NamedCheck> checks;
  bool all_passed() const;
};

/// Exact identities over Z[m^+-1, l^+-1]: both complexes square to zero, the
/// dual complex is the antipode-transpose of Q, zeta is a chain map with the
/// stated inverse, its adjoint is the antipode-transpose of zeta, and the
/// adjoint equals -(m l)^-1 zeta degreewise.
ZetaVerdict zeta_selfduality_check();

}  // namespace knotarith::fox
