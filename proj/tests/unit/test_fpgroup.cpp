#include "knotarith/errors.hpp"
#include "knotarith/fpgroup/coset_table.hpp"
#include "knotarith/fpgroup/presentation.hpp"
#include "knotarith/fpgroup/rewriting.hpp"
#include "knotarith/fpgroup/tietze.hpp"
#include "knotarith/homalg/abelian.hpp"

#include "../support/oracles.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace knotarith;
using namespace knotarith::fp;

namespace {

const char* kTrefoil = "< a, b | a b a = b a b >";

Word random_word(std::mt19937& rng, int gens, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), g(0, gens - 1), sign(0, 1);
  std::vector<Syllable> s;
  for (int i = len(rng); i > 0; --i) s.push_back({g(rng), sign(rng) ? 1 : -1});
  return free_reduce(s);
}

std::vector<std::pair<int, int>> as_pairs(const Word& w) {
  std::vector<std::pair<int, int>> out;
  for (Letter x : w.letters()) out.emplace_back(generator_of(x), is_inverse(x) ? -1 : 1);
  return out;
}

void require_relators_close(const Presentation& p, const CosetTable& t) {
  for (const auto& r : p.relators())
    for (std::size_t c = 0; c < t.size(); ++c) REQUIRE(t.trace(static_cast<int>(c), r) == static_cast<int>(c));
}

homalg::AbelianInvariants oracle_abelianization(const Presentation& p) {
  oracle::Mat rows;
  for (const auto& r : p.relators()) {
    std::vector<long long> row(p.num_generators(), 0);
    for (const auto& s : r.syllables()) row[static_cast<std::size_t>(s.gen)] += s.exp;
    rows.push_back(row);
  }
  auto [free, torsion] = oracle::abelianization(rows, p.num_generators());
  homalg::AbelianInvariants a;
  a.free_rank = free;
  for (long long t : torsion) a.torsion.push_back(t);
  return a;
}

}  // namespace

TEST_CASE("free_reduce cancels and merges", "[fpgroup][word]") {
  std::vector<Syllable> s1{{0, 1}, {0, -1}};
  CHECK(free_reduce(s1).empty());
  std::vector<Syllable> s2{{0, 1}, {1, 1}, {1, -1}, {0, 1}};
  CHECK(free_reduce(s2) == Word::generator(0, 2));
  std::vector<Syllable> s3{{0, 1}, {1, 1}, {0, -1}};
  CHECK(free_reduce(s3).syllables() == s3);
}

TEST_CASE("word reduction agrees with a stack reducer", "[fpgroup][word][property]") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(0, 30), g(0, 2), sign(0, 1);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::pair<int, int>> letters;
    std::vector<Syllable> syl;
    for (int i = len(rng); i > 0; --i) {
      const int gen = g(rng), e = sign(rng) ? 1 : -1;
      letters.emplace_back(gen, e);
      syl.push_back({gen, e});
    }
    const Word w = free_reduce(syl);
    CHECK(as_pairs(w) == oracle::stack_reduce(letters));
    CHECK(w.length() <= letters.size());
    CHECK(w.inverse().inverse() == w);
    CHECK((w * w.inverse()).empty());
    for (std::size_t i = 1; i < w.syllables().size(); ++i)
      CHECK(w.syllables()[i].gen != w.syllables()[i - 1].gen);
  }
}

TEST_CASE("presentation text round trip and errors", "[fpgroup][parse]") {
  const Presentation p = parse_presentation(kTrefoil);
  REQUIRE(p.num_generators() == 2);
  REQUIRE(p.relators().size() == 1);
  CHECK(cyclic_key(p.relators()[0]) == cyclic_key(parse_word("a b a b^-1 a^-1 b^-1", p.generators())));
  CHECK(parse_presentation(p.to_string()) == p);

  const Presentation q = parse_presentation("< x, y | x^2 = y^3 = (x y)^-2, x^+4 >");
  CHECK(q.relators().size() == 3);

  try {
    parse_presentation("< a, b |\n a c >");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 4);
  }
  CHECK_THROWS_AS(parse_presentation("< a, a | a >"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< a | a ^ >"), ParseError);
}

TEST_CASE("coset enumeration: trefoil subgroup of index 3", "[fpgroup][enum]") {
  const Presentation g = parse_presentation(kTrefoil);
  const SubgroupSpec h{{parse_word("a^-1 b", g.generators()), parse_word("a^-2 b a", g.generators()),
                        parse_word("a^3", g.generators())},
                       false};
  for (auto strategy : {Strategy::HLT, Strategy::Felsch}) {
    const CosetTable t = coset_enumeration(g, h, {1000, strategy});
    CHECK(t.index() == 3);
    require_relators_close(g, t);
    for (const auto& w : h.generators) CHECK(word_traces_into_subgroup(t, w));
  }
  SubgroupSpec normal = h;
  normal.normal_closure = true;
  const CosetTable tn = coset_enumeration(g, normal, 1000);
  CHECK(tn.index() == 3);
  CHECK(is_normal(tn));
  CHECK(word_traces_into_subgroup(tn, parse_word("a^3", g.generators())));
  CHECK_FALSE(word_traces_into_subgroup(tn, parse_word("a", g.generators())));
  CHECK(word_traces_into_subgroup(tn, Word()));
}

TEST_CASE("coset enumeration: trivial group and quaternion group", "[fpgroup][enum]") {
  const Presentation triv = parse_presentation("< a | a >");
  CHECK(coset_enumeration(triv, {}, 10).index() == 1);

  const Presentation q8 = parse_presentation("< i, j | i^2 = j^2 = (i j)^2, i^4 >");
  // Oracle: close {i, j} under quaternion multiplication and check the relators hold.
  const oracle::Quat qi{0, 1, 0, 0}, qj{0, 0, 1, 0}, one{1, 0, 0, 0};
  const auto group = oracle::closure<oracle::Quat>({qi, qj}, one, oracle::qmul);
  for (const auto& r : q8.relators()) {
    oracle::Quat v = one;
    for (Letter x : r.letters()) {
      oracle::Quat g = generator_of(x) == 0 ? qi : qj;
      if (is_inverse(x)) g = {g[0], -g[1], -g[2], -g[3]};
      v = oracle::qmul(v, g);
    }
    REQUIRE(v == one);
  }
  for (auto strategy : {Strategy::HLT, Strategy::Felsch}) {
    const CosetTable t = coset_enumeration(q8, {}, {100, strategy});
    CHECK(t.index() == group.size());
    CHECK(is_normal(t));
    require_relators_close(q8, t);
  }
}

TEST_CASE("coset enumeration respects its budget", "[fpgroup][enum]") {
  const Presentation g = parse_presentation(kTrefoil);
  CHECK_THROWS_AS(coset_enumeration(g, {}, 50), BudgetExceeded);
  CHECK_THROWS_AS(coset_enumeration(g, {}, EnumerationOptions{50, Strategy::Felsch}), BudgetExceeded);
  // Budget smaller than the index also fails.
  const Presentation q8 = parse_presentation("< i, j | i^2 = j^2 = (i j)^2, i^4 >");
  CHECK_THROWS_AS(coset_enumeration(q8, {}, 7), BudgetExceeded);
}

TEST_CASE("tables are standardised and transversals prefix closed", "[fpgroup][enum][property]") {
  const Presentation g = parse_presentation("< a, b | a^3, b^2, (a b)^5 >");  // A5
  const CosetTable hlt = coset_enumeration(g, {}, {1000, Strategy::HLT});
  const CosetTable felsch = coset_enumeration(g, {}, {1000, Strategy::Felsch});
  CHECK(hlt.index() == 60);
  CHECK(hlt == felsch);
  CHECK(hlt.transversal(0).empty());
  for (std::size_t c = 0; c < hlt.size(); ++c) {
    const Word& w = hlt.transversal(static_cast<int>(c));
    CHECK(hlt.trace(0, w) == static_cast<int>(c));
    if (!w.empty()) {
      auto letters = w.letters();
      letters.pop_back();
      const Word prefix = Word::from_letters(letters);
      CHECK(std::find(hlt.transversal().begin(), hlt.transversal().end(), prefix) != hlt.transversal().end());
    }
  }
  const CosetTable sub = coset_enumeration(g, {{parse_word("a", g.generators())}, false}, 1000);
  CHECK(sub.index() == 20);
  CHECK_FALSE(is_normal(sub));
}

TEST_CASE("kernel tables agree with enumeration on cyclic covers", "[fpgroup][kernel]") {
  const Presentation g = parse_presentation(kTrefoil);
  for (int n = 1; n <= 6; ++n) {
    Permutation cyc(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % n;
    const std::vector<Permutation> images{cyc, cyc};
    const CosetTable k = kernel_coset_table(g, images);
    CHECK(k.index() == static_cast<std::size_t>(n));
    CHECK(k.index() == oracle::orbit_size({cyc, cyc}));
    const SubgroupSpec s{{parse_word("a b^-1", g.generators()), Word::generator(0, n)}, true};
    const CosetTable e = coset_enumeration(g, s, 10000);
    CHECK(e.index() == static_cast<std::size_t>(n));
    CHECK(e == k);
  }
}

TEST_CASE("kernel_coset_table examples", "[fpgroup][kernel]") {
  const Presentation g = parse_presentation(kTrefoil);
  const std::vector<Permutation> id{{0, 1, 2}, {0, 1, 2}};
  CHECK(kernel_coset_table(g, id).index() == 1);

  // a, b -> (1 2): the relator has exponent sum 0, so it maps to an even power.
  const Permutation t{1, 0};
  const oracle::Perm tp{1, 0};
  oracle::Perm v{0, 1};
  for (Letter x : g.relators()[0].letters()) v = oracle::pmul(v, is_inverse(x) ? oracle::pinv(tp) : tp);
  REQUIRE(v == oracle::Perm{0, 1});
  const std::vector<Permutation> tt{t, t};
  CHECK(kernel_coset_table(g, tt).index() == 2);

  const std::vector<Permutation> bad{{1, 2, 0}, {0, 1, 2}};
  CHECK_THROWS_AS(kernel_coset_table(g, bad), RelatorViolation);
}

TEST_CASE("Reidemeister-Schreier on the index-3 subgroup", "[fpgroup][rs]") {
  const Presentation g = parse_presentation(kTrefoil);
  const SubgroupSpec h{{parse_word("a^-1 b", g.generators()), parse_word("a^-2 b a", g.generators()),
                        parse_word("a^3", g.generators())},
                       false};
  const CosetTable t = coset_enumeration(g, h, 1000);
  const SubgroupPresentation sp(g, t, {});
  CHECK(sp.raw().num_generators() == 4);  // 2 * 3 edges minus 2 tree edges
  CHECK(sp.presentation().num_generators() == 3);
  CHECK(sp.presentation().relators().size() == 2);

  // Oracle: determinantal divisors of the two relations listed for this subgroup,
  // u1^-1 u2 u1^-1 u2^-1 and u2 u3^-1 u2^-1 u3^-1.
  const auto [free, torsion] = oracle::abelianization({{-2, 0, 0}, {0, 0, -2}}, 3);
  homalg::AbelianInvariants expected;
  expected.free_rank = free;
  for (long long x : torsion) expected.torsion.push_back(x);
  CHECK(homalg::abelian_invariants(sp.presentation()) == expected);
  CHECK(homalg::abelian_invariants(sp.raw()) == expected);
  CHECK(expected.to_string() == "Z/2 + Z/2 + Z");

  // Rewriting the raw Schreier generator words returns the generators.
  for (std::size_t i = 0; i < sp.schreier_edges().size(); ++i) {
    const auto [c, gen] = sp.schreier_edges()[i];
    const Word w = t.transversal(c) * Word::generator(gen) * t.transversal(t.act(c, letter_of(gen, false))).inverse();
    CHECK(sp.rewrite_raw(w) == Word::generator(static_cast<int>(i)));
  }
  for (const auto& w : sp.generator_words()) CHECK(word_traces_into_subgroup(t, w));
  CHECK_THROWS_AS(sp.rewrite(Word::generator(0)), ValidationError);
}

TEST_CASE("Reidemeister-Schreier of the whole group", "[fpgroup][rs]") {
  const Presentation g = parse_presentation(kTrefoil);
  const CosetTable t = coset_enumeration(g, {{Word::generator(0), Word::generator(1)}, false}, 10);
  REQUIRE(t.index() == 1);
  const Presentation raw = reidemeister_schreier(g, t, {false});
  CHECK(raw.relators() == g.relators());
  const Presentation simplified = reidemeister_schreier(g, t);
  REQUIRE(simplified.relators().size() == 1);
  CHECK(cyclic_key(simplified.relators()[0]) == cyclic_key(g.relators()[0]));
}

TEST_CASE("Reidemeister-Schreier invariants ignore relator order and strategy", "[fpgroup][rs][property]") {
  const std::vector<std::string> groups{"< a, b | a b a = b a b >", "< a, b | a^3, b^2, (a b)^5 >",
                                        "< x, y | x^2 y^-3, (x y)^4 >"};
  std::mt19937 rng(11);
  for (const auto& text : groups) {
    const Presentation g = parse_presentation(text);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<Word> gens{random_word(rng, 2, 6), random_word(rng, 2, 6), Word::generator(0, 5)};
      std::optional<homalg::AbelianInvariants> reference;
      std::vector<Word> rels = g.relators();
      for (int perm = 0; perm < 2; ++perm) {
        std::shuffle(rels.begin(), rels.end(), rng);
        const Presentation gp = g.with_relators(rels, "");
        for (auto strategy : {Strategy::HLT, Strategy::Felsch}) {
          CosetTable t;
          try {
            t = coset_enumeration(gp, {gens, false}, {2000, strategy});
          } catch (const BudgetExceeded&) {
            continue;
          }
          const SubgroupPresentation sp(gp, t, {});
          const auto inv = homalg::abelian_invariants(sp.presentation());
          CHECK(inv == homalg::abelian_invariants(sp.raw()));
          if (!reference) reference = inv;
          CHECK(inv == *reference);
        }
      }
    }
  }
}

TEST_CASE("multiplicativity of indices for nested normal subgroups", "[fpgroup][property]") {
  const Presentation g = parse_presentation(kTrefoil);
  for (int n : {2, 3}) {
    const CosetTable u = coset_enumeration(g, {{parse_word("a b^-1", g.generators()), Word::generator(0, n)}, true}, 1000);
    const CosetTable m = coset_enumeration(g, {{Word::generator(0, n)}, true}, 10000);
    const SubgroupPresentation up(g, u, {});
    // |U : M| computed inside U: M is the normal closure in G of a^n, generated in U
    // by the conjugates t a^n t^-1 over a transversal t of U.
    std::vector<Word> conj;
    for (const auto& t : u.transversal()) conj.push_back(up.rewrite(t * Word::generator(0, n) * t.inverse()));
    const CosetTable um = coset_enumeration(up.presentation(), {conj, true}, 10000);
    CHECK(m.index() == u.index() * um.index());
  }
}

TEST_CASE("Tietze simplification examples", "[fpgroup][tietze]") {
  const Presentation wirt = parse_presentation("< a, b, c | a b = b c = c a >");
  const TietzeResult r = tietze_simplify_tracked(wirt);
  REQUIRE(r.presentation.num_generators() == 2);
  REQUIRE(r.presentation.relators().size() == 1);
  const Presentation target = parse_presentation("< a, b | a b a b^-1 a^-1 b^-1 >");
  CHECK(cyclic_key(r.presentation.relators()[0]) == cyclic_key(target.relators()[0]));
  CHECK(r.presentation.generators() == std::vector<std::string>{"a", "b"});
  // The substitution is a homomorphism from the input: every input relator maps to 1 in the output
  // (checked in a finite quotient where the output relator holds: S3 via transpositions).
  const std::vector<Permutation> images{{1, 0, 2}, {0, 2, 1}};
  const CosetTable q = kernel_coset_table(r.presentation, images);
  for (const auto& rel : wirt.relators()) CHECK(q.trace(0, rel.substitute(r.substitution)) == 0);

  const Presentation kill = parse_presentation("< a, b | b >");
  const Presentation k = tietze_simplify(kill);
  CHECK(k.generators() == std::vector<std::string>{"a"});
  CHECK(k.relators().empty());

  // Commutator subgroup of the trefoil group: x_j = a^j (a^-1 b) a^-j with
  // x_{j+1} = x_j x_{j+2}; a finite window collapses to two free generators.
  std::vector<std::string> names;
  for (int j = -1; j <= 6; ++j) names.push_back("x" + std::to_string(j + 1));
  std::vector<Word> rels;
  for (int j = 0; j + 2 < static_cast<int>(names.size()); ++j)
    rels.push_back(Word::generator(j) * Word::generator(j + 2) * Word::generator(j + 1).inverse());
  const Presentation window(names, rels);
  const Presentation s = tietze_simplify(window);
  CHECK(s.num_generators() == 2);
  CHECK(s.relators().empty());
}

TEST_CASE("Tietze never increases size and preserves abelianization", "[fpgroup][tietze][property]") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int gens = 2 + trial % 3;
    std::vector<std::string> names;
    for (int i = 0; i < gens; ++i) names.push_back(default_generator_name(static_cast<std::size_t>(i)));
    std::vector<Word> rels;
    for (int i = 0; i < 1 + trial % 4; ++i) rels.push_back(random_word(rng, gens, 8));
    const Presentation p(names, rels);
    const Presentation s = tietze_simplify(p);
    CHECK(s.num_generators() + s.total_relator_length() <= p.num_generators() + p.total_relator_length());
    CHECK(homalg::abelian_invariants(s) == oracle_abelianization(p));
  }
}
