#pragma once

#include "knotarith/bigint.hpp"
#include "knotarith/covers/cover.hpp"
#include "knotarith/homalg/abelian.hpp"
#include "knotarith/homalg/exactness.hpp"
#include "knotarith/knots/wirtinger.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace knotarith::fox {

struct Constraint {
  enum class Status { Passed, Failed, NotApplicable };
  std::string name;
  Status status = Status::Failed;
  std::string detail;
  /// Not applicable counts as satisfied: the constraint has an unmet premise.
  bool satisfied() const noexcept { return status != Status::Failed; }
};

std::string to_string(Constraint::Status s);

/// Labels of the nine positions: H^0(U), Z^r, H_2(U), H^1(U), Z^2r, H_1(U), H^2(U), Z^r, H_0(U).
const std::array<std::string, 9>& nine_term_labels();

/// Homological data around the sequence
///   0 -> H^0(U) -> (+) H_2(H cap U) -> H_2(U) -> H^1(U) -> (+) H_1(H cap U) -> H_1(U)
///     -> H^2(U) -> (+) H_0(H cap U) -> H_0(U) -> 0
/// with one summand per component of the boundary of the cover. H^k(U) is the
/// degree 2 - k homology of the restricted dual resolution; H_k(U) that of the
/// restricted resolution.
struct NineTermReport {
  covers::CoverDescriptor descriptor;
  std::size_t index = 0;
  covers::PeripheralLattice lattice;
  std::array<homalg::AbelianInvariants, 9> groups;

  /// H_1(U) on the Schreier generators of U, presented by the abelianized relators.
  homalg::PresentedGroup h1;
  /// Columns: a basis of H^1(U) = Hom(H_1(U), Z) as rows on the Schreier generators.
  IntMatrix h1_dual_basis;
  /// (+) H_0 -> H_0(U): coordinate sum.
  IntMatrix mu0;
  /// H^0(U) -> (+) H_2: transpose of mu0.
  IntMatrix nu0;
  /// (+) H_1(H cap U) -> H_1(U) on the bases t a^e t^-1, t a^p l^q t^-1.
  IntMatrix mu1;
  /// H^1(U) -> (+) H_1: per component duality D applied to the restriction of cocycles.
  IntMatrix nu1;
  /// D = sign * [[0, 1], [-1, 0]] in each component.
  int duality_sign = 1;

  std::vector<Constraint> constraints;  // (a) .. (f)
  std::vector<Constraint> uct;
  /// Per-position verdicts of the full check, when (f) applies.
  std::optional<std::vector<homalg::ExactnessVerdict>> full_exactness;
  std::vector<std::string> notes;

  long long rank_balance() const;
  bool all_satisfied() const;
};

/// Throws NonNormal for non-normal descriptors.
NineTermReport nine_term_report(const knots::WirtingerData& w, const covers::CoverDescriptor& desc);

/// Degree-one maps of the sequence for a normal cover.
struct DegreeOneMaps {
  /// H_1(U) on the Schreier generators of U, presented by the abelianized relators.
  homalg::PresentedGroup h1;
  /// Columns: a basis of H^1(U) = Hom(H_1(U), Z) as rows on the Schreier generators.
  IntMatrix h1_dual_basis;
  /// (+) H_1(H cap U) -> H_1(U) on the bases t a^e t^-1, t a^p l^q t^-1.
  IntMatrix mu1;
  /// H^1(U) -> (+) H_1(H cap U): the duality D applied to the restriction of cocycles.
  IntMatrix nu1;
};

/// D = sign * [[0, 1], [-1, 0]] per component.
DegreeOneMaps degree_one_maps(const knots::WirtingerData& w, const fp::CosetTable& t,
                              const covers::PeripheralLattice& lattice, int duality_sign = 1);

}  // namespace knotarith::fox
