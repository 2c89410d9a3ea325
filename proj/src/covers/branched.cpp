#include "knotarith/covers/branched.hpp"

#include "knotarith/errors.hpp"
#include "knotarith/foxhom/alexander.hpp"
#include "knotarith/fpgroup/rewriting.hpp"

#include <numeric>
#include <stdexcept>

namespace knotarith::covers {

std::string GroupOrder::to_string() const {
  switch (status) {
    case Status::Finite: return value.str();
    case Status::Infinite: return "infinite";
    case Status::Unknown: break;
  }
  return "unknown";
}

std::string to_string(TheoremBVerdict v) {
  switch (v) {
    case TheoremBVerdict::Trivial: return "trivial";
    case TheoremBVerdict::NotTrivial: return "not trivial";
    case TheoremBVerdict::Unknown: break;
  }
  return "unknown";
}

Q8Certificate certify_q8(const fp::Presentation& p, std::size_t max_cosets) {
  const fp::CosetTable t = fp::coset_enumeration(p, {}, max_cosets);
  Q8Certificate c;
  c.order_8 = t.size() == 8;
  std::size_t exponent = 1, involutions = 0;
  for (std::size_t x = 0; x < t.size(); ++x) {
    const std::size_t order = fp::permutation_order(t.permutation(t.transversal(static_cast<int>(x))));
    exponent = std::lcm(exponent, order);
    if (order == 2) ++involutions;
  }
  c.exponent_4 = exponent == 4;
  c.unique_involution = involutions == 1;
  c.abelianization_2_2 = homalg::abelian_invariants(p).to_string() == "Z/2 + Z/2";
  return c;
}

CoverReport branched_cover_report(const KnotInput& k, const CoverDescriptor& desc, const Budgets& budgets) {
  if (!k.prime) throw NotPrime(k.name + " is not marked prime");
  const knots::WirtingerData& w = k.wirtinger;
  const fp::CosetTable table = cover_table(w, desc);

  CoverReport r;
  r.knot = k.name;
  r.descriptor = desc;
  r.index = table.size();
  r.lattice = peripheral_lattice(w, table);
  const fp::SubgroupPresentation sub(w.presentation, table, {true, budgets.tietze_budget});
  r.u_presentation = sub.presentation();
  r.u_abelian = homalg::abelian_invariants(r.u_presentation);
  for (const auto& pair : peripheral_basis_words(w, table, r.lattice)) r.meridian_power_reps.push_back(pair[0]);

  std::vector<fp::Word> relators = r.u_presentation.relators();
  for (const auto& m : r.meridian_power_reps) relators.push_back(sub.rewrite(m));
  r.branched_presentation =
      fp::tietze_simplify(fp::Presentation(r.u_presentation.generators(), relators, "branched"), budgets.tietze_budget);
  r.branched_abelian = homalg::abelian_invariants(r.branched_presentation);

  if (r.branched_abelian.free_rank > 0) {
    r.branched_order = r.mu_index = r.g_mu_index = GroupOrder::infinite();
  } else {
    try {
      r.branched_order = GroupOrder::finite(fp::coset_enumeration(r.branched_presentation, {}, budgets.max_cosets).size());
    } catch (const BudgetExceeded&) {
      r.branched_order = GroupOrder::unknown();
    }
    try {
      const fp::SubgroupSpec mu{{fp::Word::generator(w.meridian, static_cast<int>(r.lattice.e))}, true};
      const std::size_t g_mu = fp::coset_enumeration(w.presentation, mu, budgets.max_cosets).size();
      r.g_mu_index = GroupOrder::finite(g_mu);
      if (g_mu % r.index != 0) throw std::logic_error("|G : M_U| is not a multiple of |G : U|");
      r.mu_index = GroupOrder::finite(g_mu / r.index);
    } catch (const BudgetExceeded&) {
      r.g_mu_index = r.mu_index = GroupOrder::unknown();
    }
  }
  if (r.mu_index.is_finite() && r.branched_order.is_finite())
    r.orders_consistent = r.mu_index.value == r.branched_order.value &&
                          r.g_mu_index.value == r.branched_order.value * r.index;

  if (r.branched_order.is_finite() && r.branched_order.value == 8)
    r.q8 = certify_q8(r.branched_presentation, budgets.max_cosets);

  if (r.branched_order.is_finite()) {
    r.theorem_b = r.branched_order.value == 1 ? TheoremBVerdict::Trivial : TheoremBVerdict::NotTrivial;
    if (r.mu_index.is_finite() && (r.mu_index.value == 1) != (r.branched_order.value == 1))
      throw std::logic_error("|U : M_U| = 1 disagrees with the branched group order");
  } else if (r.branched_order.status == GroupOrder::Status::Infinite || !r.branched_abelian.is_trivial()) {
    r.theorem_b = TheoremBVerdict::NotTrivial;
  }

  if (desc.kind == CoverDescriptor::Kind::Cyclic) {
    const auto predicted = fox::branched_homology_order(fox::alexander_polynomial(w), desc.n);
    r.alexander_prediction = predicted ? GroupOrder::finite(*predicted) : GroupOrder::infinite();
    const auto actual = r.branched_abelian.order();
    r.alexander_consistent = predicted.has_value() == actual.has_value() && (!predicted || *predicted == *actual);
  }
  r.conjecture_d = conjecture_d_check(w, desc);
  return r;
}

}  // namespace knotarith::covers
