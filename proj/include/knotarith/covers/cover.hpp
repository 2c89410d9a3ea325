#pragma once

#include "knotarith/bigint.hpp"
#include "knotarith/fpgroup/coset_table.hpp"
#include "knotarith/knots/table.hpp"
#include "knotarith/knots/wirtinger.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace knotarith::covers {

/// Finite-index subgroup U of a knot group: the kernel of the winding number
/// mod n, or the stabiliser of point 0 under a permutation representation
/// given on the Wirtinger generators.
struct CoverDescriptor {
  enum class Kind { Cyclic, Permutation };
  Kind kind = Kind::Cyclic;
  std::size_t n = 1;
  std::vector<fp::Permutation> images;

  /// Throws ValidationError for n = 0.
  static CoverDescriptor cyclic(std::size_t n);
  static CoverDescriptor permutation(std::vector<fp::Permutation> images);

  std::string to_string() const;
};

/// Permutation images from 1-based cycle notation, one image per generator
/// separated by ';', e.g. "(1 2);(2 3);()" . The degree is the largest point
/// mentioned. Throws ParseError.
std::vector<fp::Permutation> parse_permutation_images(std::string_view text);

/// A knot as consumed by the cover pipelines.
struct KnotInput {
  std::string name;
  knots::WirtingerData wirtinger;
  bool prime = true;

  static KnotInput from_entry(const knots::KnotTableEntry& e);
};

/// Coset i . g = i + winding(g) mod n.
fp::CosetTable cyclic_cover_table(const knots::WirtingerData& w, std::size_t n);

/// Coset table of the subgroup described by desc. Throws RelatorViolation if
/// permutation images do not define a representation.
fp::CosetTable cover_table(const knots::WirtingerData& w, const CoverDescriptor& desc);

/// Sublattice {(x, y) : a^x l^y in U} of H = Z^2 with basis (e, 0), (p, q),
/// 0 <= p < e, q >= 1, and the counts f = |H : <a>(H cap U)| = q and
/// r = |G : UH|, so that e f r = |G : U|.
struct PeripheralLattice {
  long long e = 1;
  long long p = 0;
  long long q = 1;
  long long f = 1;
  long long r = 1;
  std::size_t index = 1;
  /// Lowest coset of each H-orbit; one per component of the boundary of the cover.
  std::vector<int> component_cosets;

  /// Columns (e, 0) and (p, q).
  IntMatrix basis() const;
};

/// Stabiliser of `base` in Z^2 acting through commuting permutations
/// (x, y) -> A^x L^y, found by the Euclid construction: e is the length of the
/// A-cycle through base, q the least exponent with base . L^q on that cycle.
/// Returns (e, p, q). Throws ValidationError if A and L do not commute.
std::array<long long, 3> lattice_from_commuting_permutations(const fp::Permutation& A, const fp::Permutation& L,
                                                              int base = 0);

/// Throws NonNormal if the subgroup is not normal.
PeripheralLattice peripheral_lattice(const knots::WirtingerData& w, const fp::CosetTable& t);
PeripheralLattice peripheral_lattice(const knots::WirtingerData& w, const CoverDescriptor& desc);

/// Words t a^e t^-1 and t a^p l^q t^-1 for the transversal word t of every
/// component coset: a basis of each conjugate of H cap U.
std::vector<std::array<fp::Word, 2>> peripheral_basis_words(const knots::WirtingerData& w, const fp::CosetTable& t,
                                                            const PeripheralLattice& lattice);

/// One word t a^e t^-1 per class of G / UH. Throws NonNormal.
std::vector<fp::Word> meridian_power_representatives(const knots::WirtingerData& w, const CoverDescriptor& desc);

/// H lies in U, i.e. r = |G : U|; for a knot this happens exactly when U = G.
bool full_splitting_check(const knots::WirtingerData& w, const CoverDescriptor& desc);

}  // namespace knotarith::covers
