#pragma once

#include "knotarith/bigint.hpp"

#include <string>
#include <vector>

namespace knotarith::homalg {

/// Z^generators / colspan(relations).
struct PresentedGroup {
  Eigen::Index generators = 0;
  IntMatrix relations;  // generators x (number of relations)

  static PresentedGroup free(Eigen::Index n);
  static PresentedGroup zero();
  static PresentedGroup cyclic(const BigInt& order);
};

struct ExactnessVerdict {
  std::size_t position = 0;
  bool composition_zero = false;  // im(incoming) in ker(outgoing)
  bool kernel_in_image = false;
  bool exact() const noexcept { return composition_zero && kernel_in_image; }
};

/// groups[0] -> groups[1] -> ... with maps[i] : groups[i] -> groups[i+1] given
/// as (generators of target) x (generators of source) matrices. Zero groups
/// are implicit beyond both ends, so position 0 tests injectivity and the last
/// position surjectivity. Throws IllDefinedMap(i) if maps[i] does not send
/// relations to relations, DimensionMismatch on shape errors.
std::vector<ExactnessVerdict> exactness_check(const std::vector<PresentedGroup>& groups,
                                              const std::vector<IntMatrix>& maps);

/// Preimage lattice {x : f x in colspan(target relations)} as columns.
IntMatrix preimage_of_relations(const IntMatrix& f, const PresentedGroup& target);

}  // namespace knotarith::homalg
