#pragma once

#include "knotarith/fpgroup/presentation.hpp"
#include "knotarith/fpgroup/word.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace knotarith::fp {

/// Permutation of {0, ..., k-1} given by its image list.
using Permutation = std::vector<int>;

/// Complete coset table for the right action of a group on the cosets of a
/// subgroup. Coset 0 is the subgroup itself. Tables are kept in standard
/// form: cosets are numbered in breadth-first order from coset 0, scanning
/// columns a, a^-1, b, b^-1, ...; the transversal consists of the
/// corresponding shortlex-minimal (Schreier, prefix-closed) representatives.
class CosetTable {
 public:
  CosetTable() = default;

  /// `action[c * 2 * num_generators + letter]` is the image of coset c under letter.
  /// The table must be complete and consistent; it is renumbered into standard
  /// form (coset 0 stays first). Cosets unreachable from 0 are discarded.
  CosetTable(std::size_t num_generators, std::vector<int> action);

  std::size_t size() const noexcept { return size_; }
  std::size_t index() const noexcept { return size_; }
  std::size_t num_generators() const noexcept { return num_generators_; }
  std::size_t num_columns() const noexcept { return 2 * num_generators_; }

  int act(int coset, Letter x) const { return action_[static_cast<std::size_t>(coset) * num_columns() + static_cast<std::size_t>(x)]; }
  int trace(int coset, const Word& w) const;

  /// Permutation induced on all cosets by w (right action).
  Permutation permutation(const Word& w) const;

  const Word& transversal(int coset) const { return transversal_[static_cast<std::size_t>(coset)]; }
  const std::vector<Word>& transversal() const noexcept { return transversal_; }

  /// Whether the tree edge c --x--> act(c, x) belongs to the spanning tree
  /// defining the transversal.
  bool is_tree_edge(int coset, Letter x) const;

  /// Every relator closes at every coset.
  bool satisfies(const Presentation& p) const;

  const std::vector<int>& raw() const noexcept { return action_; }

  bool operator==(const CosetTable&) const = default;

 private:
  std::size_t num_generators_ = 0;
  std::size_t size_ = 0;
  std::vector<int> action_;
  std::vector<Word> transversal_;
  std::vector<int> parent_letter_;  // letter by which each coset was first reached; -1 for 0
};

/// Subgroup generated by words of the parent presentation, or its normal closure.
struct SubgroupSpec {
  std::vector<Word> generators;
  bool normal_closure = false;
};

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

enum class Strategy { HLT, Felsch };

struct EnumerationOptions {
  std::size_t max_cosets = kDefaultMaxCosets;
  Strategy strategy = Strategy::HLT;
};

/// Todd-Coxeter coset enumeration. Throws BudgetExceeded if the table does not
/// close with at most max_cosets live cosets.
CosetTable coset_enumeration(const Presentation& p, const SubgroupSpec& s,
                             const EnumerationOptions& options = {});
CosetTable coset_enumeration(const Presentation& p, const SubgroupSpec& s, std::size_t max_cosets);

/// Coset table of the stabiliser of point 0 under the permutation action
/// generator i -> images[i]. Throws RelatorViolation if a relator acts
/// nontrivially.
CosetTable kernel_coset_table(const Presentation& p, std::span<const Permutation> images);

/// w lies in the subgroup of table t.
bool word_traces_into_subgroup(const CosetTable& t, const Word& w);

/// The subgroup of t is normal: every coset is fixed by every subgroup element,
/// i.e. the action is regular.
bool is_normal(const CosetTable& t);

/// Order of a permutation (lcm of its cycle lengths).
std::size_t permutation_order(const Permutation& p);

}  // namespace knotarith::fp
