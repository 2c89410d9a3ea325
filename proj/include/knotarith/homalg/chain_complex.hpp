#pragma once

#include "knotarith/bigint.hpp"
#include "knotarith/homalg/abelian.hpp"

#include <cstddef>
#include <vector>

namespace knotarith::homalg {

/// Bounded complex of free abelian groups C_0 <- C_1 <- ... <- C_top.
/// d_k : C_k -> C_{k-1} is a dim(C_{k-1}) x dim(C_k) matrix acting on columns.
class IntChainComplex {
 public:
  /// boundaries[k - 1] is d_k for k = 1..dims.size()-1. Checks shapes and
  /// d_{k-1} d_k = 0; throws DimensionMismatch or ValidationError.
  IntChainComplex(std::vector<std::size_t> dims, std::vector<IntMatrix> boundaries);

  int top_degree() const noexcept { return static_cast<int>(dims_.size()) - 1; }
  std::size_t dim(int k) const;
  /// d_k; the zero map for k <= 0 or k > top.
  IntMatrix d(int k) const;

  /// Cochain complex Hom(C, Z) re-indexed as a chain complex: degree k of
  /// the result is C^{top-k}, with boundary the transpose of d.
  IntChainComplex dual() const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<IntMatrix> d_;
};

/// ker d_k / im d_{k+1}.
AbelianInvariants homology(const IntChainComplex& c, int k);

/// ker d_{k+1}^T / im d_k^T.
AbelianInvariants cohomology(const IntChainComplex& c, int k);

}  // namespace knotarith::homalg
