#pragma once

#include "knotarith/covers/conjecture_d.hpp"
#include "knotarith/covers/cover.hpp"
#include "knotarith/fpgroup/coset_table.hpp"
#include "knotarith/fpgroup/tietze.hpp"
#include "knotarith/homalg/abelian.hpp"

#include <optional>
#include <string>

namespace knotarith::covers {

struct Budgets {
  std::size_t max_cosets = fp::kDefaultMaxCosets;
  std::size_t tietze_budget = fp::kDefaultTietzeBudget;
};

/// Order of a group that may be infinite or beyond the enumeration budget.
struct GroupOrder {
  enum class Status { Finite, Infinite, Unknown };
  Status status = Status::Unknown;
  BigInt value = 0;  // meaningful when finite

  static GroupOrder finite(const BigInt& n) { return {Status::Finite, n}; }
  static GroupOrder infinite() { return {Status::Infinite, 0}; }
  static GroupOrder unknown() { return {Status::Unknown, 0}; }
  bool is_finite() const noexcept { return status == Status::Finite; }
  /// Decimal value, "infinite" or "unknown".
  std::string to_string() const;
  bool operator==(const GroupOrder&) const = default;
};

/// Finite checklist identifying the quaternion group among groups of order 8.
struct Q8Certificate {
  bool order_8 = false;
  bool exponent_4 = false;
  bool unique_involution = false;
  bool abelianization_2_2 = false;
  bool holds() const noexcept { return order_8 && exponent_4 && unique_involution && abelianization_2_2; }
};

enum class TheoremBVerdict { Trivial, NotTrivial, Unknown };
std::string to_string(TheoremBVerdict v);

struct CoverReport {
  std::string knot;
  CoverDescriptor descriptor;
  std::size_t index = 0;
  fp::Presentation u_presentation;
  homalg::AbelianInvariants u_abelian;
  PeripheralLattice lattice;
  std::vector<fp::Word> meridian_power_reps;  // in the knot group generators
  GroupOrder g_mu_index;                      // |G : M_U|
  GroupOrder mu_index;                        // |U : M_U|
  fp::Presentation branched_presentation;
  GroupOrder branched_order;
  homalg::AbelianInvariants branched_abelian;
  std::optional<Q8Certificate> q8;  // present when the branched order is 8
  TheoremBVerdict theorem_b = TheoremBVerdict::Unknown;
  /// prod_{j=1}^{n-1} |Delta(zeta_n^j)| for cyclic covers.
  std::optional<GroupOrder> alexander_prediction;
  /// |G : M_U| = |G : U| |U : M_U| and |U : M_U| = branched order, where finite.
  bool orders_consistent = true;
  /// The branched abelianization has the order predicted by the Alexander polynomial.
  std::optional<bool> alexander_consistent;
  /// Degree-one five-term sequence of the same cover.
  ConjectureDReport conjecture_d;
};

/// Branched cover pipeline: U and its presentation, the meridian powers t a^e t^-1,
/// M_U = <<a^e>>_G, the branched group U / M_U and the trivial-cover verdict
/// (|U : M_U| = 1 iff the branched group is trivial). Throws NotPrime for
/// knots not marked prime and NonNormal for non-normal subgroups.
CoverReport branched_cover_report(const KnotInput& k, const CoverDescriptor& desc, const Budgets& budgets = {});

/// Order, exponent and involution count from the regular coset table.
Q8Certificate certify_q8(const fp::Presentation& p, std::size_t max_cosets = fp::kDefaultMaxCosets);

}  // namespace knotarith::covers
