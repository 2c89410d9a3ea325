#pragma once

#include "knotarith/foxhom/group_ring.hpp"
#include "knotarith/fpgroup/word.hpp"

#include <span>

namespace knotarith::fox {

/// Coefficient of the basis vector of generator g in the Fox module-derivative
/// of w: Delta(g) = g_, Delta(g^-1) = -g^-1 Delta(g), Delta(vw) = Delta(v) + v Delta(w).
GroupRingElement fox_derivative(const fp::Word& w, int g);

/// Fox derivatives of every generator: entry g is fox_derivative(w, g).
std::vector<GroupRingElement> fox_gradient(const fp::Word& w, std::size_t num_generators);

/// Rows are words, columns generators.
GroupRingMatrix fox_jacobian(std::span<const fp::Word> words, std::size_t num_generators);

/// sum_i Delta_i(w) (a_i - 1) == w - 1, exactly in Z[F].
bool fundamental_identity_check(const fp::Word& w, std::size_t num_generators);

}  // namespace knotarith::fox
