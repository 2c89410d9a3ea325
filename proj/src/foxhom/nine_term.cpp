#include "knotarith/foxhom/nine_term.hpp"

#include "knotarith/foxhom/resolutions.hpp"
#include "knotarith/fpgroup/rewriting.hpp"
#include "knotarith/homalg/chain_complex.hpp"
#include "knotarith/homalg/smith.hpp"

namespace knotarith::fox {

namespace {

using homalg::AbelianInvariants;
using homalg::PresentedGroup;

IntVector exponent_vector(const fp::Word& w, std::size_t n) {
  IntVector v = IntVector::Zero(static_cast<Eigen::Index>(n));
  for (const auto& s : w.syllables()) v(s.gen) += s.exp;
  return v;
}

Constraint verdict(std::string name, bool passed, std::string detail) {
  return {std::move(name), passed ? Constraint::Status::Passed : Constraint::Status::Failed, std::move(detail)};
}

bool same_lattice(const IntMatrix& x, const IntMatrix& y) {
  return homalg::Lattice(x).contains_columns(y) && homalg::Lattice(y).contains_columns(x);
}

bool is_z(const AbelianInvariants& g) { return g.free_rank == 1 && g.torsion.empty(); }

}  // namespace

std::string to_string(Constraint::Status s) {
  switch (s) {
    case Constraint::Status::Passed: return "passed";
    case Constraint::Status::Failed: return "failed";
    case Constraint::Status::NotApplicable: break;
  }
  return "not applicable";
}

const std::array<std::string, 9>& nine_term_labels() {
  static const std::array<std::string, 9> labels{"H^0(U)", "(+) H_2(H cap U)", "H_2(U)",
                                                 "H^1(U)", "(+) H_1(H cap U)", "H_1(U)",
                                                 "H^2(U)", "(+) H_0(H cap U)", "H_0(U)"};
  return labels;
}

long long NineTermReport::rank_balance() const {
  long long s = 0;
  for (std::size_t k = 0; k < groups.size(); ++k)
    s += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(groups[k].free_rank);
  return s;
}

bool NineTermReport::all_satisfied() const {
  for (const auto* list : {&constraints, &uct})
    for (const auto& c : *list)
      if (!c.satisfied()) return false;
  return true;
}

DegreeOneMaps degree_one_maps(const knots::WirtingerData& w, const fp::CosetTable& t,
                              const covers::PeripheralLattice& lattice, int duality_sign) {
  const fp::SubgroupPresentation sub(w.presentation, t, {false, fp::kDefaultTietzeBudget});
  const std::size_t s = sub.raw().num_generators();
  DegreeOneMaps out;
  out.h1 = {static_cast<Eigen::Index>(s), homalg::exponent_matrix(sub.raw()).transpose()};
  out.h1_dual_basis = homalg::integer_kernel<BigInt>(out.h1.relations.transpose());

  const auto words = covers::peripheral_basis_words(w, t, lattice);
  const auto r = static_cast<Eigen::Index>(words.size());
  out.mu1 = IntMatrix::Zero(static_cast<Eigen::Index>(s), 2 * r);
  IntMatrix duality = IntMatrix::Zero(2 * r, 2 * r);
  for (Eigen::Index c = 0; c < r; ++c) {
    for (Eigen::Index i = 0; i < 2; ++i)
      out.mu1.col(2 * c + i) = exponent_vector(sub.rewrite_raw(words[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)]), s);
    duality(2 * c, 2 * c + 1) = duality_sign;
    duality(2 * c + 1, 2 * c) = -duality_sign;
  }
  out.nu1 = duality * out.mu1.transpose() * out.h1_dual_basis;
  return out;
}

NineTermReport nine_term_report(const knots::WirtingerData& w, const covers::CoverDescriptor& desc) {
  const fp::CosetTable table = covers::cover_table(w, desc);
  NineTermReport rep;
  rep.descriptor = desc;
  rep.index = table.size();
  rep.lattice = covers::peripheral_lattice(w, table);
  const auto r = static_cast<Eigen::Index>(rep.lattice.r);

  const GroupRingComplex p = presentation_resolution(w);
  const homalg::IntChainComplex chains = restrict_and_augment(p, table);
  const homalg::IntChainComplex cochains = restrict_and_augment(dual_resolution(p), table);
  const auto h_lower = [&](int k) { return homalg::homology(chains, k); };
  const auto h_upper = [&](int k) { return homalg::homology(cochains, 2 - k); };
  const AbelianInvariants free_r{static_cast<std::size_t>(r), {}};
  rep.groups = {h_upper(0), free_r, h_lower(2), h_upper(1), AbelianInvariants{static_cast<std::size_t>(2 * r), {}},
                h_lower(1), h_upper(2), free_r, h_lower(0)};

  const DegreeOneMaps d1 = degree_one_maps(w, table, rep.lattice, rep.duality_sign);
  rep.h1 = d1.h1;
  rep.h1_dual_basis = d1.h1_dual_basis;
  rep.mu1 = d1.mu1;
  rep.nu1 = d1.nu1;
  rep.mu0 = IntMatrix::Ones(1, r);
  rep.nu0 = rep.mu0.transpose();

  // (a) .. (e)
  rep.constraints.push_back(verdict("a", is_z(rep.groups[0]), "H^0(U) = " + rep.groups[0].to_string()));
  {
    const IntMatrix ker = homalg::integer_kernel<BigInt>(rep.mu0);
    const bool onto = homalg::cokernel_invariants(rep.mu0).is_trivial() && is_z(rep.groups[8]);
    rep.constraints.push_back(verdict("b", onto && ker.cols() == r - 1,
                                      "mu0 onto H_0(U) = " + rep.groups[8].to_string() + ", kernel rank " +
                                          std::to_string(ker.cols())));
  }
  {
    IntMatrix joined(rep.h1.generators, rep.h1.relations.cols() + rep.mu1.cols());
    joined << rep.h1.relations, rep.mu1;
    AbelianInvariants expected = homalg::cokernel_invariants(joined);
    expected.free_rank += static_cast<std::size_t>(r - 1);
    rep.constraints.push_back(verdict("c", expected == rep.groups[6],
                                      "coker mu1 + Z^(r-1) = " + expected.to_string() + ", H^2(U) = " +
                                          rep.groups[6].to_string()));
  }
  {
    const IntMatrix ker = homalg::preimage_of_relations(rep.mu1, rep.h1);
    const bool composition_zero = homalg::Lattice(ker).contains_columns(rep.nu1);
    rep.constraints.push_back(verdict("d", composition_zero && same_lattice(ker, rep.nu1),
                                      composition_zero ? "ker mu1 vs im nu1 in Z^" + std::to_string(2 * r)
                                                       : "mu1 nu1 is not zero"));
  }
  rep.constraints.push_back(
      verdict("e", rep.rank_balance() == 0, "alternating rank sum " + std::to_string(rep.rank_balance())));

  // (f): with U = G the unavailable maps have zero source or target.
  if (rep.index == 1) {
    const bool zeros = rep.groups[2].is_trivial() && rep.groups[6].is_trivial() && is_z(rep.groups[0]);
    if (!zeros) {
      rep.constraints.push_back(verdict("f", false, "H_2(G) or H^2(G) is nonzero"));
    } else {
      const Eigen::Index f = rep.h1_dual_basis.cols(), s = rep.h1.generators;
      const std::vector<PresentedGroup> groups{PresentedGroup::free(1), PresentedGroup::free(r), PresentedGroup::zero(),
                                               PresentedGroup::free(f),  PresentedGroup::free(2 * r), rep.h1,
                                               PresentedGroup::zero(),  PresentedGroup::free(r), PresentedGroup::free(1)};
      const std::vector<IntMatrix> maps{rep.nu0,        IntMatrix::Zero(0, r), IntMatrix::Zero(f, 0),
                                        rep.nu1,        rep.mu1,               IntMatrix::Zero(0, s),
                                        IntMatrix::Zero(r, 0), rep.mu0};
      rep.full_exactness = homalg::exactness_check(groups, maps);
      std::size_t exact = 0;
      for (const auto& v : *rep.full_exactness) exact += v.exact() ? 1 : 0;
      rep.constraints.push_back(verdict("f", exact == 9, std::to_string(exact) + " of 9 positions exact"));
    }
  } else {
    rep.constraints.push_back({"f", Constraint::Status::NotApplicable, "U != G"});
    rep.notes.push_back(
        "exactness at H_2(U), H^1(U), H_1(U) and H^2(U) needs mu2 and the connecting maps, which are not computed; "
        "not independently verified");
  }

  // Universal coefficients and cross-checks between the two complexes.
  const AbelianInvariants rs_h1 = homalg::cokernel_invariants(rep.h1.relations);
  rep.uct.push_back(verdict("H_1 from the resolution equals the abelianized subgroup presentation",
                            rs_h1 == rep.groups[5], rs_h1.to_string()));
  rep.uct.push_back(verdict("free rank H^1 = free rank H_1", rep.groups[3].free_rank == rep.groups[5].free_rank,
                            std::to_string(rep.groups[3].free_rank)));
  rep.uct.push_back(verdict("H^1 basis has the free rank of H_1",
                            static_cast<std::size_t>(rep.h1_dual_basis.cols()) == rep.groups[5].free_rank, ""));
  const AbelianInvariants ext{rep.groups[2].free_rank, rep.groups[5].torsion};
  rep.uct.push_back(verdict("H^2 = Hom(H_2, Z) + Ext(H_1, Z)", ext == rep.groups[6], ext.to_string()));
  rep.uct.push_back(verdict("H^0 = Hom(H_0, Z)", rep.groups[0].free_rank == rep.groups[8].free_rank &&
                                                     rep.groups[0].torsion.empty(), ""));
  bool cochains_agree = true;
  for (int k = 0; k <= 2; ++k) cochains_agree = cochains_agree && homalg::cohomology(chains, k) == h_upper(k);
  rep.uct.push_back(verdict("dual resolution computes the cochain cohomology", cochains_agree, ""));

  rep.notes.push_back("H^k(U) is degree 2-k of the restricted dual resolution");
  rep.notes.push_back("duality D = [[0, 1], [-1, 0]] per component, sign " + std::to_string(rep.duality_sign));
  return rep;
}

}  // namespace knotarith::fox
