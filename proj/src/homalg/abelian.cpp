#include "knotarith/homalg/abelian.hpp"

#include "knotarith/errors.hpp"

namespace knotarith::homalg {

std::vector<BigInt> AbelianInvariants::encoded() const {
  std::vector<BigInt> out = torsion;
  out.insert(out.end(), free_rank, BigInt(0));
  return out;
}

AbelianInvariants AbelianInvariants::from_encoded(const std::vector<BigInt>& factors) {
  AbelianInvariants a;
  for (const auto& f : factors) {
    if (f == 0)
      ++a.free_rank;
    else if (f < 0)
      throw ValidationError("negative invariant factor");
    else if (f > 1)
      a.torsion.push_back(f);
  }
  for (std::size_t i = 1; i < a.torsion.size(); ++i)
    if (a.torsion[i] % a.torsion[i - 1] != 0) throw ValidationError("invariant factors must divide each other");
  return a;
}

std::optional<BigInt> AbelianInvariants::order() const {
  if (free_rank > 0) return std::nullopt;
  BigInt n = 1;
  for (const auto& t : torsion) n *= t;
  return n;
}

std::string AbelianInvariants::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  for (const auto& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.str();
  }
  for (std::size_t i = 0; i < free_rank; ++i) {
    if (!out.empty()) out += " + ";
    out += "Z";
  }
  return out;
}

AbelianInvariants cokernel_invariants(const IntMatrix& relations) {
  AbelianInvariants a;
  if (relations.cols() == 0) {
    a.free_rank = static_cast<std::size_t>(relations.rows());
    return a;
  }
  const auto s = smith_normal_form(relations);
  a.free_rank = static_cast<std::size_t>(relations.rows() - s.rank);
  for (Eigen::Index i = 0; i < s.rank; ++i)
    if (s.D(i, i) > 1) a.torsion.push_back(s.D(i, i));
  return a;
}

IntMatrix exponent_matrix(const fp::Presentation& p) {
  const auto n = static_cast<Eigen::Index>(p.num_generators());
  IntMatrix e = IntMatrix::Zero(static_cast<Eigen::Index>(p.relators().size()), n);
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (const auto& s : p.relators()[r].syllables()) e(static_cast<Eigen::Index>(r), s.gen) += s.exp;
  return e;
}

AbelianInvariants abelian_invariants(const fp::Presentation& p) {
  return cokernel_invariants(exponent_matrix(p).transpose());
}

Lattice::Lattice(const IntMatrix& generators) : snf_(smith_normal_form(generators)) {}

bool Lattice::contains(const IntVector& v) const {
  if (v.size() != snf_.U.rows()) throw DimensionMismatch("lattice membership: vector length");
  const IntVector y = snf_.U * v;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (i < snf_.rank) {
      if (y(i) % snf_.D(i, i) != 0) return false;
    } else if (y(i) != 0) {
      return false;
    }
  }
  return true;
}

bool Lattice::contains_columns(const IntMatrix& m) const {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    if (!contains(m.col(j))) return false;
  return true;
}

}  // namespace knotarith::homalg
