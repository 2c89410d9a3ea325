#include "knotarith/homalg/chain_complex.hpp"

#include "knotarith/errors.hpp"

namespace knotarith::homalg {

IntChainComplex::IntChainComplex(std::vector<std::size_t> dims, std::vector<IntMatrix> boundaries)
    : dims_(std::move(dims)), d_(std::move(boundaries)) {
  if (dims_.empty()) throw DimensionMismatch("chain complex needs at least one degree");
  if (d_.size() + 1 != dims_.size()) throw DimensionMismatch("one boundary map per positive degree");
  for (std::size_t k = 1; k < dims_.size(); ++k) {
    const IntMatrix& m = d_[k - 1];
    if (m.rows() != static_cast<Eigen::Index>(dims_[k - 1]) || m.cols() != static_cast<Eigen::Index>(dims_[k]))
      throw DimensionMismatch("boundary d_" + std::to_string(k) + " has the wrong shape");
  }
  for (std::size_t k = 2; k < dims_.size(); ++k)
    if (!(d_[k - 2] * d_[k - 1]).isZero()) throw ValidationError("d_" + std::to_string(k - 1) + " d_" + std::to_string(k) + " != 0");
}

std::size_t IntChainComplex::dim(int k) const {
  if (k < 0 || k > top_degree()) return 0;
  return dims_[static_cast<std::size_t>(k)];
}

IntMatrix IntChainComplex::d(int k) const {
  if (k >= 1 && k <= top_degree()) return d_[static_cast<std::size_t>(k - 1)];
  return IntMatrix::Zero(static_cast<Eigen::Index>(dim(k - 1)), static_cast<Eigen::Index>(dim(k)));
}

IntChainComplex IntChainComplex::dual() const {
  const int top = top_degree();
  std::vector<std::size_t> dims;
  std::vector<IntMatrix> maps;
  for (int k = 0; k <= top; ++k) dims.push_back(dim(top - k));
  // Degree k of the dual is C^{top-k}; its boundary to degree k-1 is d_{top-k+1}^T.
  for (int k = 1; k <= top; ++k) maps.push_back(d(top - k + 1).transpose());
  return IntChainComplex(std::move(dims), std::move(maps));
}

AbelianInvariants homology(const IntChainComplex& c, int k) {
  if (k < 0 || k > c.top_degree()) throw DimensionMismatch("degree out of range");
  const IntMatrix in = c.d(k + 1);
  const IntMatrix out = c.d(k);
  const Eigen::Index rank_out = out.size() == 0 ? 0 : integer_rank(out);
  AbelianInvariants a;
  Eigen::Index rank_in = 0;
  if (in.size() != 0) {
    const auto s = smith_normal_form(in);
    rank_in = s.rank;
    for (Eigen::Index i = 0; i < s.rank; ++i)
      if (s.D(i, i) > 1) a.torsion.push_back(s.D(i, i));
  }
  a.free_rank = static_cast<std::size_t>(static_cast<Eigen::Index>(c.dim(k)) - rank_out - rank_in);
  return a;
}

AbelianInvariants cohomology(const IntChainComplex& c, int k) {
  if (k < 0 || k > c.top_degree()) throw DimensionMismatch("degree out of range");
  return homology(c.dual(), c.top_degree() - k);
}

}  // namespace knotarith::homalg
