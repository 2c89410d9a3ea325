#pragma once

#include "knotarith/bigint.hpp"
#include "knotarith/fpgroup/presentation.hpp"
#include "knotarith/homalg/smith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace knotarith::homalg {

/// Finitely generated abelian group Z^free_rank + sum Z/torsion[i].
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, each dividing the next

  /// Torsion factors followed by one 0 per free summand, e.g. Z + Z/2 + Z/2 -> [2, 2, 0].
  std::vector<BigInt> encoded() const;
  static AbelianInvariants from_encoded(const std::vector<BigInt>& factors);

  bool is_trivial() const noexcept { return free_rank == 0 && torsion.empty(); }
  /// Group order, or nullopt if infinite.
  std::optional<BigInt> order() const;
  /// "Z/2 + Z/2 + Z", or "0" for the trivial group.
  std::string to_string() const;

  bool operator==(const AbelianInvariants&) const = default;
};

/// Invariants of Z^n / colspan(R) for an n x m relation matrix R.
AbelianInvariants cokernel_invariants(const IntMatrix& relations);

/// Relator exponent matrix: rows are relators, columns generators.
IntMatrix exponent_matrix(const fp::Presentation& p);

/// Abelianization of a finitely presented group.
AbelianInvariants abelian_invariants(const fp::Presentation& p);

/// Sublattice of Z^n spanned by the columns of a generator matrix.
class Lattice {
 public:
  explicit Lattice(const IntMatrix& generators);

  Eigen::Index ambient_dimension() const noexcept { return snf_.U.rows(); }
  Eigen::Index rank() const noexcept { return snf_.rank; }
  bool contains(const IntVector& v) const;
  /// Every column of m lies in the lattice.
  bool contains_columns(const IntMatrix& m) const;

 private:
  SmithForm<BigInt> snf_;
};

}  // namespace knotarith::homalg
