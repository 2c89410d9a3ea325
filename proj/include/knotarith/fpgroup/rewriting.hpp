#pragma once

#include "knotarith/fpgroup/coset_table.hpp"
#include "knotarith/fpgroup/presentation.hpp"
#include "knotarith/fpgroup/tietze.hpp"

#include <utility>
#include <vector>

namespace knotarith::fp {

struct RewriteOptions {
  /// Apply tietze_simplify to the Schreier presentation. The raw
  /// presentation stays available on SubgroupPresentation.
  bool simplify = true;
  std::size_t tietze_budget = kDefaultTietzeBudget;
};

/// Presentation of a finite-index subgroup U together with the data needed to
/// express elements of U in its generators.
class SubgroupPresentation {
 public:
  SubgroupPresentation(const Presentation& parent, CosetTable table, const RewriteOptions& options);

  /// Presentation on the (possibly simplified) generators.
  const Presentation& presentation() const noexcept { return presentation_; }
  /// Presentation on the Schreier generators s1, s2, ... (one per non-tree edge).
  const Presentation& raw() const noexcept { return raw_; }
  const CosetTable& table() const noexcept { return table_; }

  /// Edge (coset, generator) defining Schreier generator i.
  const std::vector<std::pair<int, int>>& schreier_edges() const noexcept { return edges_; }

  /// Output generator i as a word in the parent generators.
  const std::vector<Word>& generator_words() const noexcept { return generator_words_; }

  /// Rewrite a parent word lying in U into the raw Schreier generators.
  /// Throws ValidationError if w is not in U.
  Word rewrite_raw(const Word& w) const;

  /// Rewrite a parent word lying in U into the output generators.
  Word rewrite(const Word& w) const;

 private:
  Presentation presentation_;
  Presentation raw_;
  CosetTable table_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> edge_index_;  // coset * num_generators + gen -> Schreier index or -1
  std::vector<Word> raw_to_output_;
  std::vector<Word> generator_words_;
};

/// Reidemeister-Schreier presentation of the subgroup whose coset table is t.
/// Throws IncompleteTable if t is not complete for p.
Presentation reidemeister_schreier(const Presentation& p, const CosetTable& t,
                                   const RewriteOptions& options = {});

}  // namespace knotarith::fp
