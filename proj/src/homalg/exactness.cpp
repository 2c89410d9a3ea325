#include "knotarith/homalg/exactness.hpp"

#include "knotarith/errors.hpp"
#include "knotarith/homalg/abelian.hpp"

namespace knotarith::homalg {

PresentedGroup PresentedGroup::free(Eigen::Index n) { return {n, IntMatrix::Zero(n, 0)}; }

PresentedGroup PresentedGroup::zero() { return {0, IntMatrix::Zero(0, 0)}; }

PresentedGroup PresentedGroup::cyclic(const BigInt& order) {
  IntMatrix r(1, 1);
  r(0, 0) = order;
  return {1, r};
}

IntMatrix preimage_of_relations(const IntMatrix& f, const PresentedGroup& target) {
  const Eigen::Index n = f.cols();
  IntMatrix joined(f.rows(), n + target.relations.cols());
  joined << f, target.relations;
  if (joined.cols() == 0) return IntMatrix::Zero(0, 0);
  if (joined.rows() == 0) return IntMatrix::Identity(n, n);
  const IntMatrix k = integer_kernel(joined);
  return k.topRows(n);
}

std::vector<ExactnessVerdict> exactness_check(const std::vector<PresentedGroup>& groups,
                                              const std::vector<IntMatrix>& maps) {
  if (groups.empty() || maps.size() + 1 != groups.size())
    throw DimensionMismatch("need one map between each pair of consecutive groups");
  for (std::size_t i = 0; i < groups.size(); ++i)
    if (groups[i].relations.rows() != groups[i].generators)
      throw DimensionMismatch("relation matrix of group " + std::to_string(i) + " has the wrong height");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].rows() != groups[i + 1].generators || maps[i].cols() != groups[i].generators)
      throw DimensionMismatch("map " + std::to_string(i) + " has the wrong shape");
    const Lattice target(groups[i + 1].relations);
    if (groups[i + 1].generators > 0 && !target.contains_columns(maps[i] * groups[i].relations))
      throw IllDefinedMap(i);
  }

  std::vector<ExactnessVerdict> out;
  for (std::size_t pos = 0; pos < groups.size(); ++pos) {
    const PresentedGroup& g = groups[pos];
    ExactnessVerdict v;
    v.position = pos;
    // Incoming image plus relations, and outgoing map.
    IntMatrix image = g.relations;
    if (pos > 0) {
      IntMatrix joined(g.generators, maps[pos - 1].cols() + g.relations.cols());
      joined << maps[pos - 1], g.relations;
      image = joined;
    }
    const PresentedGroup next = pos + 1 < groups.size() ? groups[pos + 1] : PresentedGroup::zero();
    const IntMatrix outgoing = pos + 1 < groups.size() ? maps[pos] : IntMatrix::Zero(0, g.generators);
    if (g.generators == 0) {
      v.composition_zero = v.kernel_in_image = true;
      out.push_back(v);
      continue;
    }
    const Lattice image_lattice(image);
    if (pos > 0 && next.generators > 0) {
      const Lattice rel(next.relations);
      v.composition_zero = rel.contains_columns(outgoing * maps[pos - 1]);
    } else {
      v.composition_zero = true;
    }
    const IntMatrix kernel = next.generators > 0 ? preimage_of_relations(outgoing, next)
                                                 : IntMatrix(IntMatrix::Identity(g.generators, g.generators));
    v.kernel_in_image = image_lattice.contains_columns(kernel);
    out.push_back(v);
  }
  return out;
}

}  // namespace knotarith::homalg
