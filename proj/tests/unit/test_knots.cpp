#include "knotarith/errors.hpp"
#include "knotarith/fpgroup/tietze.hpp"
#include "knotarith/homalg/abelian.hpp"
#include "knotarith/knots/diagram.hpp"
#include "knotarith/knots/table.hpp"
#include "knotarith/knots/wirtinger.hpp"

#include "../support/oracles.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

using namespace knotarith;
using namespace knotarith::knots;

namespace {

const char* kTrefoilPd = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kFigureEightPd = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

oracle::Perm word_image(const fp::Word& w, const std::vector<oracle::Perm>& images) {
  oracle::Perm p(images[0].size());
  std::iota(p.begin(), p.end(), 0);
  for (const auto& s : w.syllables()) {
    const oracle::Perm& g = images[static_cast<std::size_t>(s.gen)];
    const oracle::Perm x = s.exp > 0 ? g : oracle::pinv(g);
    for (int i = 0; i < std::abs(s.exp); ++i) p = oracle::pmul(p, x);
  }
  return p;
}

std::vector<oracle::Perm> all_perms(int k) {
  std::vector<oracle::Perm> out;
  oracle::Perm p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Every assignment of permutations of {0..k-1} to arcs satisfying the crossing
// relations a_j = a_k a_h a_k^-1, found by backtracking with propagation.
// Arcs are conjugate, so all images lie in the class of the image of arc 0.
void homomorphisms(const WirtingerData& w, int k, std::size_t limit, std::vector<std::vector<oracle::Perm>>& out) {
  const std::size_t arcs = w.presentation.num_generators();
  const auto perms = all_perms(k);
  std::vector<std::optional<oracle::Perm>> img(arcs);

  std::function<void()> search = [&]() {
    if (out.size() >= limit) return;
    // Propagate.
    auto saved = img;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : w.relations) {
        auto& j = img[static_cast<std::size_t>(r.j)];
        auto& kk = img[static_cast<std::size_t>(r.k)];
        auto& h = img[static_cast<std::size_t>(r.h)];
        if (kk && h) {
          const auto v = oracle::pmul(oracle::pmul(*kk, *h), oracle::pinv(*kk));
          if (!j) {
            j = v;
            changed = true;
          } else if (*j != v) {
            img = saved;
            return;
          }
        } else if (kk && j && !h) {
          h = oracle::pmul(oracle::pmul(oracle::pinv(*kk), *j), *kk);
          changed = true;
        }
      }
    }
    const auto it = std::find_if(img.begin(), img.end(), [](const auto& x) { return !x.has_value(); });
    if (it == img.end()) {
      std::vector<oracle::Perm> full;
      for (const auto& x : img) full.push_back(*x);
      out.push_back(full);
      img = saved;
      return;
    }
    for (const auto& p : perms) {
      if (it != img.begin()) {
        // Conjugate to the image of arc 0: same cycle type.
        auto cycle_type = [](const oracle::Perm& q) {
          std::vector<int> lens;
          std::vector<bool> seen(q.size());
          for (std::size_t s = 0; s < q.size(); ++s) {
            int len = 0;
            for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(q[x])) seen[x] = true, ++len;
            if (len) lens.push_back(len);
          }
          std::sort(lens.begin(), lens.end());
          return lens;
        };
        if (cycle_type(p) != cycle_type(*img[0])) continue;
      }
      *it = p;
      search();
      if (out.size() >= limit) break;
    }
    img = saved;
  };
  search();
}

}  // namespace

TEST_CASE("parse_pd accepts table codes and rejects malformed input", "[knots]") {
  const KnotDiagram trefoil = parse_pd(kTrefoilPd);
  CHECK(trefoil.num_crossings() == 3);
  CHECK(trefoil.edge_count() == 6);
  const KnotDiagram fig8 = parse_pd(kFigureEightPd);
  CHECK(fig8.num_crossings() == 4);
  CHECK(fig8.writhe() == 0);
  CHECK(std::abs(trefoil.writhe()) == 3);

  CHECK_THROWS_AS(parse_pd("X[1,4,2,5]"), EdgeCountMismatch);
  // Two disjoint unknotted kinks form a two-component diagram.
  CHECK_THROWS_AS(parse_pd("X[1,2,2,1] X[3,4,4,3]"), MultiComponent);
  CHECK_THROWS_AS(parse_pd("X[1,4,2"), ParseError);
  CHECK_THROWS_AS(parse_pd("Y[1,4,2,5]"), ParseError);
  try {
    parse_pd("X[1,4,2,5]\nX[3,6,;");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK(parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]") == trefoil);
  CHECK(parse_pd("").num_crossings() == 0);
}

TEST_CASE("PD text round-trips through the emitter", "[knots]") {
  for (const auto& e : KnotTable::builtin().entries()) {
    const KnotDiagram d = e.diagram();
    CHECK(parse_pd(d.to_string()) == d);
    CHECK(parse_pd(d.to_string()).to_string() == d.to_string());
  }
}

TEST_CASE("built-in table contents", "[knots]") {
  const auto& t = KnotTable::builtin();
  for (const char* name : {"3_1", "4_1", "5_1", "5_2", "6_1"}) {
    const auto& e = t.lookup(name);
    CHECK(e.prime);
    CHECK(static_cast<int>(e.diagram().num_crossings()) == e.crossing_number);
  }
  CHECK_FALSE(t.lookup("0_1").prime);
  CHECK_THROWS_AS(t.lookup("7_4"), UnknownKnot);
  CHECK_THROWS_AS(KnotTable::parse("3_1 4 true X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"), ValidationError);
}

TEST_CASE("Wirtinger presentations of table knots", "[knots]") {
  for (const auto& e : KnotTable::builtin().entries()) {
    const KnotDiagram d = e.diagram();
    const WirtingerData w = wirtinger(d);
    INFO(e.name);
    const std::size_t arcs = std::max<std::size_t>(1, d.num_crossings());
    CHECK(w.presentation.num_generators() == arcs);
    CHECK(w.presentation.relators().size() == d.num_crossings());
    CHECK(w.meridian == 0);
    CHECK(w.crossing_signs == d.signs());
    // Shape x a x^-1 b^-1 with x a generator, matching the recorded relation.
    for (std::size_t i = 0; i < w.relations.size(); ++i) {
      const auto& r = w.relations[i];
      const fp::Word expect = fp::Word::generator(r.k) * fp::Word::generator(r.h) *
                              fp::Word::generator(r.k, -1) * fp::Word::generator(r.j, -1);
      CHECK(w.presentation.relators()[i] == expect);
    }
    // Abelianization Z, by the independent determinantal oracle.
    oracle::Mat rows;
    for (const auto& r : w.presentation.relators()) {
      std::vector<long long> row(w.presentation.num_generators(), 0);
      for (const auto& s : r.syllables()) row[static_cast<std::size_t>(s.gen)] += s.exp;
      rows.push_back(row);
    }
    const auto ab = oracle::abelianization(rows, w.presentation.num_generators());
    CHECK(ab.first == 1);
    CHECK(ab.second.empty());
    CHECK(homalg::abelian_invariants(w.presentation).to_string() == "Z");
    // Longitude: exponent sum 0, and equal to the standalone computation.
    CHECK(winding_number(w.longitude) == 0);
    CHECK(w.longitude == longitude(d));
  }
}

TEST_CASE("trefoil and unknot groups", "[knots]") {
  const WirtingerData w = wirtinger(parse_pd(kTrefoilPd));
  const fp::Presentation s = fp::tietze_simplify(w.presentation);
  REQUIRE(s.num_generators() == 2);
  REQUIRE(s.relators().size() == 1);
  const fp::Word a = fp::Word::generator(0), b = fp::Word::generator(1);
  const auto key = fp::cyclic_key(s.relators()[0]);
  CHECK((key == fp::cyclic_key(a * b * a * (b * a * b).inverse()) ||
         key == fp::cyclic_key(b * a * b * (a * b * a).inverse())));

  const WirtingerData u = wirtinger(parse_pd(""));
  CHECK(u.presentation.num_generators() == 1);
  CHECK(u.presentation.relators().empty());
  CHECK(u.longitude.empty());

  const WirtingerData f = wirtinger(parse_pd(kFigureEightPd));
  CHECK(f.presentation.num_generators() == 4);
  CHECK(f.presentation.relators().size() == 4);
  // Writhe 0: the longitude is the product of the four over-arcs met.
  CHECK(f.longitude.length() <= 4);
  CHECK(winding_number(f.longitude) == 0);
}

TEST_CASE("longitude commutes with the meridian in finite quotients", "[knots]") {
  for (const auto& e : KnotTable::builtin().entries()) {
    if (e.crossing_number == 0) continue;
    const WirtingerData w = wirtinger(e.diagram());
    INFO(e.name);
    std::size_t nonabelian = 0;
    for (int k : {3, 4, 5}) {
      std::vector<std::vector<oracle::Perm>> homs;
      homomorphisms(w, k, 200, homs);
      for (const auto& images : homs) {
        for (const auto& r : w.presentation.relators()) {
          const auto p = word_image(r, images);
          for (std::size_t i = 0; i < p.size(); ++i) REQUIRE(p[i] == static_cast<int>(i));
        }
        if (std::any_of(images.begin(), images.end(), [&](const auto& x) { return x != images[0]; })) ++nonabelian;
        const auto ma = images[0];
        const auto ml = word_image(w.longitude, images);
        CHECK(oracle::pmul(ma, ml) == oracle::pmul(ml, ma));
      }
    }
    // Every nontrivial knot in the table has a nonabelian quotient in S3, S4 or S5.
    CHECK(nonabelian > 0);
  }
}

TEST_CASE("winding number", "[knots]") {
  const std::vector<std::string> names{"a", "b"};
  CHECK(winding_number(fp::parse_word("a b a^-1", names)) == 1);
  CHECK(winding_number(fp::parse_word("a b a^-1 b^-1", names)) == 0);
  CHECK(winding_number(fp::parse_word("a^3 b^-1", names)) == 2);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(0, 20), g(0, 3), sgn(0, 1);
  auto random_word = [&]() {
    std::vector<fp::Syllable> s;
    for (int i = len(rng); i > 0; --i) s.push_back({g(rng), sgn(rng) ? 1 : -1});
    return fp::free_reduce(s);
  };
  for (int i = 0; i < 500; ++i) {
    const fp::Word v = random_word(), w = random_word();
    CHECK(winding_number(v * w) == winding_number(v) + winding_number(w));
  }
}

TEST_CASE("wirtinger of parse_pd is deterministic", "[knots]") {
  for (const auto& e : KnotTable::builtin().entries()) {
    const WirtingerData a = wirtinger(parse_pd(e.pd_code));
    const WirtingerData b = wirtinger(parse_pd(e.pd_code));
    CHECK(a.presentation == b.presentation);
    CHECK(a.longitude == b.longitude);
    CHECK(a.presentation.to_string() == b.presentation.to_string());
  }
}
