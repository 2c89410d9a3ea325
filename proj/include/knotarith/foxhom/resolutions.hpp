#pragma once

#include "knotarith/bigint.hpp"
#include "knotarith/foxhom/group_ring.hpp"
#include "knotarith/fpgroup/coset_table.hpp"
#include "knotarith/homalg/chain_complex.hpp"
#include "knotarith/knots/wirtinger.hpp"

namespace knotarith::fox {

using GroupRingComplex = RingComplex<GroupRingElement>;
using LaurentComplex = RingComplex<LaurentBivar>;

/// Resolution of Z over Z[H], H = <m, l> = Z^2, from the plane tiling:
/// d2(r) = (1 - l) m_ + (m - 1) l_, d1(m_) = m - 1, d1(l_) = l - 1.
LaurentComplex peripheral_resolution();

/// The twisted dual of the peripheral resolution written out explicitly:
/// d2(0*) = (m^-1 - 1) m* + (l^-1 - 1) l*, d1(m*) = (1 - l^-1) r*, d1(l*) = (m^-1 - 1) r*.
LaurentComplex peripheral_dual_explicit();

/// Resolution 0 -> Z[G]^{d-1} -> Z[G]^d -> Z[G] of Z from a Wirtinger
/// presentation with its last relation dropped. The relation a_j = a_k a_h a_k^-1
/// contributes the Fox row of a_j a_k a_h^-1 a_k^-1; d1(a_i) = a_i - 1.
/// Throws NotWirtinger if the data is not a Wirtinger presentation.
GroupRingComplex presentation_resolution(const knots::WirtingerData& w);

/// Twisted dual P^* re-indexed to degrees 0..2 (degree k holds the dual of P_{2-k}).
GroupRingComplex dual_resolution(const GroupRingComplex& p);

/// Z (x)_{Z[U]} of a map of free Z[G]-modules: every group element becomes
/// the permutation matrix Perm(g)_{c, c.g} = 1 of its right action on the
/// cosets of t. Row convention, so the result is (rows * n) x (cols * n).
/// Throws IncompleteTable if t has the wrong number of generators.
IntMatrix restrict_and_augment(const GroupRingMatrix& m, const fp::CosetTable& t);

/// Integer chain complex of the restricted resolution; d_k is the transpose
/// of the restricted row-convention boundary.
homalg::IntChainComplex restrict_and_augment(const GroupRingComplex& c, const fp::CosetTable& t);

}  // namespace knotarith::fox
