#include "knotarith/covers/conjecture_d.hpp"

#include "knotarith/foxhom/nine_term.hpp"
#include "knotarith/fpgroup/rewriting.hpp"
#include "knotarith/homalg/smith.hpp"

#include <stdexcept>

namespace knotarith::covers {

bool ConjectureDReport::exact() const {
  if (exactness.size() != groups.size()) return false;
  for (const auto& v : exactness)
    if (!v.exact()) return false;
  return true;
}

const std::array<std::string, 5>& conjecture_d_labels() {
  static const std::array<std::string, 5> labels{"H^1(B)", "H^1(U)", "(+) H_1(H cap U)", "H_1(U)", "H_1(B)"};
  return labels;
}

ConjectureDReport conjecture_d_check(const knots::WirtingerData& w, const CoverDescriptor& desc) {
  const fp::CosetTable table = cover_table(w, desc);
  const PeripheralLattice lattice = peripheral_lattice(w, table);
  const fox::DegreeOneMaps d1 = fox::degree_one_maps(w, table, lattice);

  ConjectureDReport rep;
  rep.descriptor = desc;
  rep.index = table.size();
  rep.components = lattice.r;
  rep.longitude_in_u = fp::word_traces_into_subgroup(table, w.longitude);
  if (rep.longitude_in_u) {
    const fp::SubgroupPresentation sub(w.presentation, table, {false, fp::kDefaultTietzeBudget});
    IntVector v = IntVector::Zero(d1.h1.generators);
    const fp::Word l = sub.rewrite_raw(w.longitude);
    for (const auto& s : l.syllables()) v(s.gen) += s.exp;
    rep.longitude_null_homologous = homalg::Lattice(d1.h1.relations).contains(v);
  }

  // H_1(B): H_1(U) modulo the meridian-power columns of mu1.
  const Eigen::Index s = d1.h1.generators, r = lattice.r;
  IntMatrix branched(s, d1.h1.relations.cols() + r);
  branched.leftCols(d1.h1.relations.cols()) = d1.h1.relations;
  for (Eigen::Index c = 0; c < r; ++c) branched.col(d1.h1.relations.cols() + c) = d1.mu1.col(2 * c);
  const IntMatrix dual_b = homalg::integer_kernel<BigInt>(branched.transpose());

  // Coordinates of the H^1(B) basis in the H^1(U) basis.
  const Eigen::Index f = d1.h1_dual_basis.cols(), fb = dual_b.cols();
  IntMatrix inclusion(f, fb);
  for (Eigen::Index j = 0; j < fb; ++j) {
    const auto c = homalg::solve_integer<BigInt>(d1.h1_dual_basis, dual_b.col(j));
    if (!c) throw std::logic_error("a cocycle of the branched cover is not a cocycle of U");
    inclusion.col(j) = *c;
  }

  rep.groups = {homalg::PresentedGroup::free(fb), homalg::PresentedGroup::free(f), homalg::PresentedGroup::free(2 * r),
                d1.h1, homalg::PresentedGroup{s, branched}};
  for (std::size_t i = 0; i < rep.groups.size(); ++i)
    rep.invariants[i] = homalg::cokernel_invariants(rep.groups[i].relations);
  rep.maps = {inclusion, d1.nu1, d1.mu1, IntMatrix::Identity(s, s)};
  rep.exactness = homalg::exactness_check({rep.groups.begin(), rep.groups.end()}, rep.maps);
  return rep;
}

}  // namespace knotarith::covers
