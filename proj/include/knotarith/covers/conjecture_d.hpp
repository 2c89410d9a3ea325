#pragma once

#include "knotarith/covers/cover.hpp"
#include "knotarith/homalg/abelian.hpp"
#include "knotarith/homalg/exactness.hpp"

#include <array>
#include <string>
#include <vector>

namespace knotarith::covers {

/// Degree-one comparison of the cover with its branched cover B:
///   0 -> H^1(B) -> H^1(U) -> (+) H_1(H cap U) -> H_1(U) -> H_1(B) -> 0.
/// H_1(B) is H_1(U) modulo the meridian powers and H^1(B) = Hom(H_1(B), Z)
/// sits inside H^1(U) = Hom(H_1(U), Z).
struct ConjectureDReport {
  CoverDescriptor descriptor;
  std::size_t index = 0;
  long long components = 0;  // r
  bool longitude_in_u = false;
  bool longitude_null_homologous = false;  // in H_1(U); false when l is not in U

  std::array<homalg::PresentedGroup, 5> groups;
  std::array<homalg::AbelianInvariants, 5> invariants;
  std::vector<IntMatrix> maps;  // four maps, target x source
  std::vector<homalg::ExactnessVerdict> exactness;

  /// One boundary component and a null-homologous longitude.
  bool hypotheses_hold() const noexcept { return components == 1 && longitude_null_homologous; }
  bool exact() const;
};

/// Labels H^1(B), H^1(U), (+) H_1(H cap U), H_1(U), H_1(B).
const std::array<std::string, 5>& conjecture_d_labels();

/// Throws NonNormal for non-normal descriptors.
ConjectureDReport conjecture_d_check(const knots::WirtingerData& w, const CoverDescriptor& desc);

}  // namespace knotarith::covers
