#pragma once

#include "knotarith/fpgroup/presentation.hpp"

#include <cstddef>
#include <vector>

namespace knotarith::fp {

inline constexpr std::size_t kDefaultTietzeBudget = 10'000;

/// Outcome of Tietze simplification with the isomorphism made explicit.
struct TietzeResult {
  Presentation presentation;
  /// Image of every input generator as a word in the output generators.
  std::vector<Word> substitution;
  /// Output generator i is input generator kept[i].
  std::vector<int> kept;
  std::size_t moves = 0;
};

/// Passes in fixed order: (1) cyclically reduce, drop empty and duplicate
/// relators (up to rotation and inversion); (2) eliminate a generator
/// occurring exactly once in some relator; (3) replace a piece of one relator
/// by a shorter equivalent read off another. Generators plus total relator
/// length never increases. `budget` caps the number of moves.
TietzeResult tietze_simplify_tracked(const Presentation& p, std::size_t budget = kDefaultTietzeBudget);

Presentation tietze_simplify(const Presentation& p, std::size_t budget = kDefaultTietzeBudget);

}  // namespace knotarith::fp
