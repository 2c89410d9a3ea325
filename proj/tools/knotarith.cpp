// knotarith: command-line front end for the knot, cover and arithmetic pipelines.
#include "knotarith/arith/cyclotomic.hpp"
#include "knotarith/arith/quadratic.hpp"
#include "knotarith/covers/branched.hpp"
#include "knotarith/covers/conjecture_d.hpp"
#include "knotarith/errors.hpp"
#include "knotarith/foxhom/nine_term.hpp"
#include "knotarith/fpgroup/rewriting.hpp"
#include "knotarith/homalg/abelian.hpp"
#include "knotarith/knots/table.hpp"
#include "knotarith/report/json.hpp"
#include "knotarith/verify/criteria.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace knotarith;
using report::Json;

enum ExitCode { kOk = 0, kInternal = 1, kValidation = 2, kBudget = 3, kSuiteFailure = 4 };

struct Config {
  std::size_t max_cosets = fp::kDefaultMaxCosets;
  std::size_t tietze_budget = fp::kDefaultTietzeBudget;
  std::string format = "text";
  std::string table_path;
  std::uint32_t seed = 2024;

  covers::Budgets budgets() const { return {max_cosets, tietze_budget}; }
};

struct CoverArgs {
  std::string knot;
  std::size_t cyclic = 0;
  std::string perm;
  bool branched = false;
  bool degree_one = false;
};

void emit(const Config& cfg, const Json& j) {
  if (cfg.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << report::to_text(j);
}

const knots::KnotTable& table(const Config& cfg) {
  static std::optional<knots::KnotTable> loaded;
  if (cfg.table_path.empty()) return knots::KnotTable::builtin();
  if (!loaded) loaded = knots::KnotTable::from_file(cfg.table_path);
  return *loaded;
}

covers::KnotInput resolve(const Config& cfg, const std::string& name) {
  return covers::KnotInput::from_entry(table(cfg).lookup(name));
}

covers::CoverDescriptor descriptor(const CoverArgs& a) {
  if (!a.perm.empty()) return covers::CoverDescriptor::permutation(covers::parse_permutation_images(a.perm));
  return covers::CoverDescriptor::cyclic(a.cyclic);
}

int cmd_present(const Config& cfg, const std::string& name, const std::string& pd) {
  if (name.empty() == pd.empty()) throw ValidationError("give exactly one of a knot name or --pd");
  if (!pd.empty()) {
    emit(cfg, report::presentation_json("pd", knots::wirtinger(knots::parse_pd(pd))));
  } else {
    const auto& entry = table(cfg).lookup(name);
    emit(cfg, report::presentation_json(entry.name, knots::wirtinger(entry.diagram())));
  }
  return kOk;
}

Json unbranched_cover_json(const covers::KnotInput& k, const covers::CoverDescriptor& desc, const Config& cfg) {
  const fp::CosetTable t = covers::cover_table(k.wirtinger, desc);
  const fp::SubgroupPresentation sub(k.wirtinger.presentation, t, {true, cfg.tietze_budget});
  const fp::Presentation& u = sub.presentation();
  Json relators = Json::array();
  for (const auto& w : u.relators()) relators.push_back(fp::format_word(w, u.generators()));
  Json out{{"knot", k.name},
           {"kind", desc.kind == covers::CoverDescriptor::Kind::Cyclic ? "cyclic" : "permutation"},
           {"n", desc.n},
           {"index", t.size()},
           {"normal", fp::is_normal(t)},
           {"u_generators", u.generators()},
           {"u_relators", relators},
           {"u_abelian", report::to_json(homalg::abelian_invariants(u))}};
  if (fp::is_normal(t)) {
    const auto lattice = covers::peripheral_lattice(k.wirtinger, t);
    out["e"] = lattice.e;
    out["f"] = lattice.f;
    out["r"] = lattice.r;
    Json reps = Json::array();
    for (const auto& pair : covers::peripheral_basis_words(k.wirtinger, t, lattice))
      reps.push_back(fp::format_word(pair[0], {}));
    out["meridian_power_reps"] = reps;
  }
  return out;
}

int cmd_cover(const Config& cfg, const CoverArgs& a) {
  const covers::KnotInput k = resolve(cfg, a.knot);
  const covers::CoverDescriptor desc = descriptor(a);
  if (!a.branched) {
    emit(cfg, unbranched_cover_json(k, desc, cfg));
    return kOk;
  }
  const auto r = covers::branched_cover_report(k, desc, cfg.budgets());
  emit(cfg, report::to_json(r));
  // The report is printed either way; an order left unknown means the coset budget ran out.
  const auto unknown = covers::GroupOrder::unknown();
  if (r.branched_order == unknown || r.mu_index == unknown || r.g_mu_index == unknown) {
    std::cerr << "error: coset budget exceeded (max_cosets = " << cfg.max_cosets << "); some orders are unknown\n";
    return kBudget;
  }
  return kOk;
}

int cmd_ptseq(const Config& cfg, const CoverArgs& a) {
  const covers::KnotInput k = resolve(cfg, a.knot);
  if (!k.prime) throw NotPrime("knot '" + k.name + "' is not marked prime");
  const covers::CoverDescriptor desc = descriptor(a);
  if (a.degree_one) {
    const auto r = covers::conjecture_d_check(k.wirtinger, desc);
    emit(cfg, report::to_json(r));
    return kOk;
  }
  const auto r = fox::nine_term_report(k.wirtinger, desc);
  emit(cfg, report::to_json(r));
  return kOk;
}

int cmd_split(const Config& cfg, long long d, long long p) {
  const auto r = arith::split_prime(d, p);
  Json j = report::to_json(r);
  j["summary"] = std::to_string(p) + " is " + arith::to_string(r.type) + " in Q(sqrt(" + std::to_string(d) + "))";
  emit(cfg, j);
  return kOk;
}

int cmd_gauss(const Config& cfg, long long q, long long p) {
  const auto r = arith::gauss_sum_square(q);
  Json j = report::to_json(r);
  j["summary"] = "g^2 = " + r.g_squared.to_string() + (r.holds() ? ", identity holds" : ", identity fails");
  if (p != 0) j["congruence_mod_p"] = {{"p", p}, {"holds", arith::gauss_sum_congruence(q, p)}};
  emit(cfg, j);
  return r.holds() ? kOk : kSuiteFailure;
}

int cmd_legendre(const Config& cfg, long long a, long long p) {
  const int s = arith::legendre(a, p);
  emit(cfg, Json{{"a", a}, {"p", p}, {"legendre", s}});
  return kOk;
}

int cmd_verify(const Config& cfg, const std::string& suite) {
  verify::Settings settings;
  settings.seed = cfg.seed;
  if (!cfg.table_path.empty()) settings.table = &table(cfg);
  const auto results = verify::run_suite(suite, settings);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  if (cfg.format == "json") {
    Json items = Json::array();
    for (const auto& r : results)
      items.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"seconds", r.seconds},
                       {"detail", r.detail}});
    std::cout << Json{{"suite", suite}, {"seed", cfg.seed}, {"results", items}, {"passed", ok}}.dump(2) << "\n";
  } else {
    for (const auto& r : results) std::cout << verify::format_result(r) << "\n";
    std::cout << (ok ? "suite " + suite + " passed" : "suite " + suite + " FAILED") << "\n";
  }
  return ok ? kOk : kSuiteFailure;
}

std::size_t env_max_cosets() {
  const char* v = std::getenv("KNOTARITH_MAX_COSETS");
  if (v == nullptr || *v == '\0') return fp::kDefaultMaxCosets;
  try {
    std::size_t used = 0;
    const unsigned long long n = std::stoull(v, &used);
    if (used != std::string(v).size() || n == 0) throw std::invalid_argument(v);
    return static_cast<std::size_t>(n);
  } catch (const std::exception&) {
    throw ValidationError(std::string("KNOTARITH_MAX_COSETS must be a positive integer, got '") + v + "'");
  }
}

void add_cover_options(CLI::App* sub, CoverArgs& a) {
  sub->add_option("knot", a.knot, "knot name from the table")->required();
  auto* cyc = sub->add_option("--cyclic", a.cyclic, "n-fold cyclic cover")->check(CLI::Range(std::size_t{1}, std::size_t{1'000'000}));
  auto* perm = sub->add_option("--perm", a.perm, "permutation images, e.g. \"(1 2);(2 3);(1 3)\"");
  cyc->excludes(perm);
  sub->callback([sub] {
    if (sub->count("--cyclic") + sub->count("--perm") == 0) throw CLI::RequiredError("--cyclic or --perm");
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knot groups, their finite covers and the arithmetic analogies"};
  app.require_subcommand(1);
  Config cfg;
  std::optional<std::size_t> max_cosets;
  app.add_option("--max-cosets", max_cosets, "coset enumeration budget")->check(CLI::PositiveNumber);
  app.add_option("--tietze-budget", cfg.tietze_budget, "Tietze simplification step budget")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--table", cfg.table_path, "knot table file replacing the built-in table")->check(CLI::ExistingFile);
  app.add_option("--seed", cfg.seed, "seed for the random property suites");

  std::string knot_name, pd;
  auto* present = app.add_subcommand("present", "Wirtinger presentation, meridian, longitude, abelianization");
  present->add_option("knot", knot_name, "knot name from the table");
  present->add_option("--pd", pd, "planar diagram code");

  CoverArgs cover_args;
  auto* cover = app.add_subcommand("cover", "finite cover of a knot group; --branched adds the branched cover");
  add_cover_options(cover, cover_args);
  cover->add_flag("--branched", cover_args.branched, "compute the branched cover report");

  CoverArgs ptseq_args;
  auto* ptseq = app.add_subcommand("ptseq", "nine-term sequence and its constraint suite");
  add_cover_options(ptseq, ptseq_args);
  ptseq->add_flag("--degree-one", ptseq_args.degree_one, "five-term degree-one sequence instead");

  long long d = 0, p = 0, q = 0, a = 0, gp = 0, lp = 0;
  auto* split = app.add_subcommand("split", "decomposition of p in Q(sqrt(d))");
  split->add_option("--d", d, "squarefree d")->required();
  split->add_option("--p", p, "prime")->required();
  auto* gauss = app.add_subcommand("gauss", "quadratic Gauss sum identity in Z[zeta_q]");
  gauss->add_option("--q", q, "odd prime")->required();
  gauss->add_option("--p", gp, "odd prime for the congruence check");
  auto* legendre = app.add_subcommand("legendre", "Legendre symbol (a/p)");
  legendre->add_option("--a", a, "integer")->required();
  legendre->add_option("--p", lp, "odd prime")->required();

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", suite, "suite")->check(CLI::IsMember({"all", "fox", "zeta", "covers", "arith"}));

  for (auto* sub : {present, cover, ptseq, split, gauss, legendre, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    cfg.max_cosets = max_cosets ? *max_cosets : env_max_cosets();
    if (*present) return cmd_present(cfg, knot_name, pd);
    if (*cover) return cmd_cover(cfg, cover_args);
    if (*ptseq) return cmd_ptseq(cfg, ptseq_args);
    if (*split) return cmd_split(cfg, d, p);
    if (*gauss) return cmd_gauss(cfg, q, gp);
    if (*legendre) return cmd_legendre(cfg, a, lp);
    if (*verify) return cmd_verify(cfg, suite);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == Error::Kind::Budget ? kBudget : kValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
