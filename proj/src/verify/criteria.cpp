#include "knotarith/verify/criteria.hpp"

#include "knotarith/arith/cyclotomic.hpp"
#include "knotarith/arith/quadratic.hpp"
#include "knotarith/covers/branched.hpp"
#include "knotarith/covers/conjecture_d.hpp"
#include "knotarith/errors.hpp"
#include "knotarith/foxhom/fox.hpp"
#include "knotarith/foxhom/nine_term.hpp"
#include "knotarith/foxhom/zeta.hpp"
#include "knotarith/knots/table.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

namespace knotarith::verify {

namespace {

using covers::CoverDescriptor;
using covers::GroupOrder;
using covers::KnotInput;


// Collects failed expectations into a detail string.
class Ledger {
 public:
  explicit Ledger(const knots::KnotTable* table) : table_(table ? table : &knots::KnotTable::builtin()) {}

  KnotInput knot(const char* name) const { return KnotInput::from_entry(table_->lookup(name)); }

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  bool passed() const { return failures_.empty(); }
  std::string detail(const std::string& summary) const {
    if (passed()) return summary + " (" + std::to_string(checks_) + " checks)";
    std::string s = std::to_string(failures_.size()) + " of " + std::to_string(checks_) + " checks failed: ";
    for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) s += (i ? "; " : "") + failures_[i];
    return s;
  }

 private:
  const knots::KnotTable* table_;
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

std::string order_text(const GroupOrder& o) { return o.to_string(); }

void transcript(Ledger& l) {
  const auto r = covers::branched_cover_report(l.knot("3_1"), CoverDescriptor::cyclic(3));
  l.expect(r.index == 3, "index " + std::to_string(r.index));
  l.expect(r.u_presentation.num_generators() == 3 && r.u_presentation.relators().size() == 2,
           "U presentation " + r.u_presentation.to_string());
  l.expect(r.mu_index == GroupOrder::finite(8), "|U:M_U| = " + order_text(r.mu_index));
  l.expect(r.branched_order == GroupOrder::finite(8), "branched order " + order_text(r.branched_order));
  l.expect(r.q8 && r.q8->holds(), "Q8 certificate");
}

void ramification(Ledger& l) {
  for (const char* name : {"3_1", "4_1"})
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto lat = covers::peripheral_lattice(l.knot(name).wirtinger, CoverDescriptor::cyclic(n));
      const std::string tag = std::string(name) + " n=" + std::to_string(n);
      l.expect(static_cast<std::size_t>(lat.e * lat.f * lat.r) == lat.index, tag + ": e f r != index");
      l.expect(lat.e == static_cast<long long>(n) && lat.f == 1 && lat.r == 1, tag + ": (e, f, r) differs");
    }
}

void theorem_b(Ledger& l) {
  const auto five = covers::branched_cover_report(l.knot("3_1"), CoverDescriptor::cyclic(5));
  l.expect(five.branched_order == GroupOrder::finite(120), "n=5 order " + order_text(five.branched_order));
  l.expect(five.branched_abelian.is_trivial(), "n=5 abelianization " + five.branched_abelian.to_string());
  l.expect(five.theorem_b == covers::TheoremBVerdict::NotTrivial, "n=5 verdict " + covers::to_string(five.theorem_b));
  const auto one = covers::branched_cover_report(l.knot("3_1"), CoverDescriptor::cyclic(1));
  l.expect(one.theorem_b == covers::TheoremBVerdict::Trivial, "n=1 verdict " + covers::to_string(one.theorem_b));
}

void reduced_sequence(Ledger& l) {
  const std::array<std::string, 9> expected{"Z", "Z", "0", "Z", "Z + Z", "Z", "0", "Z", "Z"};
  for (const char* name : {"3_1", "4_1", "5_2"}) {
    const auto r = fox::nine_term_report(l.knot(name).wirtinger, CoverDescriptor::cyclic(1));
    for (std::size_t i = 0; i < 9; ++i)
      l.expect(r.groups[i].to_string() == expected[i],
               std::string(name) + " position " + std::to_string(i) + " = " + r.groups[i].to_string());
    l.expect(r.full_exactness.has_value(), std::string(name) + ": full check missing");
    if (r.full_exactness)
      for (const auto& v : *r.full_exactness)
        l.expect(v.exact(), std::string(name) + ": not exact at " + std::to_string(v.position));
  }
}

void nine_term_constraints(Ledger& l) {
  struct Case {
    const char* knot;
    std::size_t n;
  };
  for (const Case& c : {Case{"3_1", 2}, Case{"3_1", 3}, Case{"4_1", 2}}) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = fox::nine_term_report(l.knot(c.knot).wirtinger, CoverDescriptor::cyclic(c.n));
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string tag = std::string(c.knot) + " n=" + std::to_string(c.n);
    for (const auto& k : r.constraints)
      l.expect(k.satisfied(), tag + " (" + k.name + ") " + fox::to_string(k.status) + ": " + k.detail);
    for (const auto& k : r.uct) l.expect(k.satisfied(), tag + " " + k.name);
    l.expect(s < 10.0, tag + " took " + std::to_string(s) + " s");
  }
}

void zeta(Ledger& l) {
  for (const auto& c : fox::zeta_selfduality_check().checks) l.expect(c.passed, c.name);
}

void fox_suite(Ledger& l, const Settings& settings) {
  std::mt19937 rng(settings.seed);
  std::uniform_int_distribution<int> len(0, 30), gen(0, 3), sign(0, 1);
  for (std::size_t i = 0; i < settings.random_words; ++i) {
    std::vector<fp::Syllable> s;
    for (int k = len(rng); k > 0; --k) s.push_back({gen(rng), sign(rng) ? 1 : -1});
    const fp::Word w = fp::free_reduce(s);
    l.expect(fox::fundamental_identity_check(w, 4), "fundamental identity fails on word " + std::to_string(i));
  }
  // Finite cases of the covering criteria.
  const covers::Budgets small{20'000, fp::kDefaultTietzeBudget};
  for (const char* name : {"3_1", "4_1"})
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto r = covers::branched_cover_report(l.knot(name), CoverDescriptor::cyclic(n), small);
      if (!r.branched_abelian.order()) continue;
      l.expect(r.alexander_consistent.value_or(false),
               std::string(name) + " n=" + std::to_string(n) + ": |H_1| = " + r.branched_abelian.to_string() +
                   ", Alexander " + (r.alexander_prediction ? r.alexander_prediction->to_string() : "none"));
    }
}

void arithmetic(Ledger& l) {
  std::vector<long long> primes;
  for (long long p = 3; p < 200; p += 2)
    if (arith::is_prime(p)) primes.push_back(p);
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j)
      l.expect(arith::reciprocity_check(primes[i], primes[j]).holds(),
               "reciprocity " + std::to_string(primes[i]) + ", " + std::to_string(primes[j]));
  for (long long q : {3, 5, 7, 11, 13, 17}) {
    const auto g = arith::gauss_sum_square(q);
    l.expect(g.holds(), "Gauss sum q=" + std::to_string(q) + ": " + g.g_squared.to_string());
  }
  for (long long p = 2; p < 500; ++p) {
    if (!arith::is_prime(p)) continue;
    const auto s = arith::split_prime(-1, p);
    const arith::SplitType expected =
        p == 2 ? arith::SplitType::Ramified : p % 4 == 1 ? arith::SplitType::Split : arith::SplitType::Inert;
    l.expect(s.type == expected && s.e * s.f * s.r == 2, "Q(i) at p=" + std::to_string(p));
  }
}

void conjecture_d(Ledger& l) {
  struct Case {
    const char* knot;
    std::size_t n;
  };
  for (const Case& c : {Case{"3_1", 2}, Case{"3_1", 3}, Case{"4_1", 2}}) {
    const auto r = covers::conjecture_d_check(l.knot(c.knot).wirtinger, CoverDescriptor::cyclic(c.n));
    const std::string tag = std::string(c.knot) + " n=" + std::to_string(c.n);
    l.expect(r.hypotheses_hold(), tag + ": hypotheses not detected");
    l.expect(r.exact(), tag + ": not exact");
  }
  const auto g = covers::conjecture_d_check(l.knot("3_1").wirtinger, CoverDescriptor::cyclic(1));
  std::vector<std::string> groups;
  for (const auto& x : g.invariants) groups.push_back(x.to_string());
  l.expect(groups == std::vector<std::string>{"0", "Z", "Z + Z", "Z", "0"}, "U = G groups differ");
  l.expect(g.exact(), "U = G sequence not exact");
}

void trefoil_goldens(Ledger& l) {
  struct Golden {
    std::size_t n;
    GroupOrder order;
    const char* u_abelian;
    const char* branched_abelian;
    covers::TheoremBVerdict verdict;
  };
  using V = covers::TheoremBVerdict;
  const std::vector<Golden> goldens{
      {1, GroupOrder::finite(1), "Z", "0", V::Trivial},
      {2, GroupOrder::finite(3), "Z/3 + Z", "Z/3", V::NotTrivial},
      {3, GroupOrder::finite(8), "Z/2 + Z/2 + Z", "Z/2 + Z/2", V::NotTrivial},
      {5, GroupOrder::finite(120), "Z", "0", V::NotTrivial},
  };
  for (const Golden& g : goldens) {
    const auto r = covers::branched_cover_report(l.knot("3_1"), CoverDescriptor::cyclic(g.n));
    const std::string tag = "3_1 n=" + std::to_string(g.n);
    l.expect(r.index == g.n, tag + " index");
    l.expect(r.branched_order == g.order && r.mu_index == g.order, tag + " order " + order_text(r.branched_order));
    l.expect(r.u_abelian.to_string() == g.u_abelian, tag + " H_1(U) = " + r.u_abelian.to_string());
    l.expect(r.branched_abelian.to_string() == g.branched_abelian, tag + " H_1(branched) = " + r.branched_abelian.to_string());
    l.expect(r.theorem_b == g.verdict, tag + " verdict " + covers::to_string(r.theorem_b));
    l.expect(r.orders_consistent, tag + " index bookkeeping");
  }
}

struct Item {
  const char* title;
  double limit;
  std::function<void(Ledger&, const Settings&)> run;
};

const std::vector<Item>& items() {
  static const std::vector<Item> s{
      {"trefoil three-fold cover: index 3, 3 generators / 2 relators, |U:M_U| = 8, Q8", 1.0,
       [](Ledger& l, const Settings&) { transcript(l); }},
      {"e f r = |G:U| with e = n, f = r = 1 for trefoil and figure-eight, n = 1..6", 0,
       [](Ledger& l, const Settings&) { ramification(l); }},
      {"trefoil n = 5 branched order 120, perfect, not trivial; n = 1 trivial", 5.0,
       [](Ledger& l, const Settings&) { theorem_b(l); }},
      {"reduced nine-term sequence for U = G on 3_1, 4_1, 5_2, exact at all nine positions", 0,
       [](Ledger& l, const Settings&) { reduced_sequence(l); }},
      {"nine-term constraints (a)-(f) for 3_1 n = 2, 3 and 4_1 n = 2 ((f) not applicable for U != G)", 30.0,
       [](Ledger& l, const Settings&) { nine_term_constraints(l); }},
      {"zeta self-duality identities over Z[m, l, m^-1, l^-1]", 0, [](Ledger& l, const Settings&) { zeta(l); }},
      {"fundamental identity on random words; |H_1(branched)| against the Alexander polynomial", 0,
       [](Ledger& l, const Settings& s) { fox_suite(l, s); }},
      {"reciprocity for odd primes < 200, Gauss sums q <= 17, Q(i) splitting p < 500", 0,
       [](Ledger& l, const Settings&) { arithmetic(l); }},
      {"degree-one sequence: hypotheses and exactness for 3_1 n = 2, 3, 4_1 n = 2, and U = G", 0,
       [](Ledger& l, const Settings&) { conjecture_d(l); }},
  };
  return s;
}

const Item& golden_item() {
  static const Item s{"trefoil cyclic branched covers n = 1, 2, 3, 5 match golden values", 0,
                      [](Ledger& l, const Settings&) { trefoil_goldens(l); }};
  return s;
}

CriterionResult run_item(int id, const Item& item, const Settings& settings) {
  CriterionResult r;
  r.id = id;
  r.title = item.title;
  r.limit_seconds = item.limit;
  Ledger ledger(settings.table);
  const auto start = std::chrono::steady_clock::now();
  try {
    item.run(ledger, settings);
  } catch (const std::exception& e) {
    ledger.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = ledger.passed() && (item.limit == 0 || r.seconds < item.limit);
  r.detail = ledger.detail(ledger.passed() && !r.passed ? "time limit exceeded" : "all checks hold");
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, const Settings& settings) {
  if (id < 1 || id > kCriteriaCount) throw ValidationError("criterion " + std::to_string(id) + " does not exist");
  return run_item(id, items()[static_cast<std::size_t>(id - 1)], settings);
}

std::vector<CriterionResult> run_suite(const std::string& suite, const Settings& settings) {
  std::vector<CriterionResult> out;
  for (int id : suite_criteria(suite)) out.push_back(run_criterion(id, settings));
  if (suite == "covers" || suite == "all") out.push_back(run_item(0, golden_item(), settings));
  return out;
}

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9};
  if (suite == "covers") return {1, 2, 3, 9};
  if (suite == "fox") return {4, 5, 7};
  if (suite == "zeta") return {6};
  if (suite == "arith") return {8};
  throw ValidationError("unknown suite '" + suite + "' (expected all, fox, zeta, covers or arith)");
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << " [" << (r.id == 0 ? std::string("golden") : std::to_string(r.id)) << "] " << r.title << " (" << std::fixed << std::setprecision(3)
      << r.seconds << " s";
  if (r.limit_seconds > 0) out << " < " << std::setprecision(0) << r.limit_seconds << " s";
  out << "): " << r.detail;
  return out.str();
}

}  // namespace knotarith::verify
