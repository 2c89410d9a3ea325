#include "knotarith/covers/cover.hpp"
#include "knotarith/foxhom/alexander.hpp"
#include "knotarith/foxhom/nine_term.hpp"
#include "knotarith/knots/table.hpp"

#include <catch_amalgamated.hpp>

#include <chrono>

using namespace knotarith;
using namespace knotarith::fox;
using homalg::AbelianInvariants;

namespace {

knots::WirtingerData wirtinger_of(const char* name) {
  return knots::wirtinger(knots::KnotTable::builtin().lookup(name).diagram());
}

AbelianInvariants ab(std::size_t free_rank, std::vector<BigInt> torsion = {}) { return {free_rank, std::move(torsion)}; }

const Constraint& constraint(const NineTermReport& r, const std::string& name) {
  for (const auto& c : r.constraints)
    if (c.name == name) return c;
  throw std::logic_error("missing constraint " + name);
}

}  // namespace

TEST_CASE("U = G gives the reduced sequence", "[foxhom][nine]") {
  const std::array<AbelianInvariants, 9> reduced{ab(1), ab(1), ab(0), ab(1), ab(2), ab(1), ab(0), ab(1), ab(1)};
  for (const char* name : {"3_1", "4_1", "5_2", "6_1"}) {
    const NineTermReport r = nine_term_report(wirtinger_of(name), covers::CoverDescriptor::cyclic(1));
    CHECK(r.groups == reduced);
    REQUIRE(r.full_exactness.has_value());
    CHECK(r.full_exactness->size() == 9);
    for (const auto& v : *r.full_exactness) CHECK(v.exact());
    for (const auto& c : r.constraints) CHECK(c.status == Constraint::Status::Passed);
    CHECK(r.all_satisfied());
    // The meridian generates H_1(G); the longitude is null-homologous.
    CHECK(r.mu1.cols() == 2);
    CHECK(homalg::Lattice(r.h1.relations).contains(r.mu1.col(1)));
    CHECK_FALSE(homalg::Lattice(r.h1.relations).contains(r.mu1.col(0)));
  }
}

TEST_CASE("nine-term constraints on cyclic covers", "[foxhom][nine]") {
  struct Case {
    const char* knot;
    std::size_t n;
    AbelianInvariants h1;
  };
  // H_1 of the n-fold cyclic cover of the exterior is Z plus H_1 of the branched cover,
  // whose order is the product of |Delta| over the nontrivial n-th roots of unity.
  const std::vector<Case> cases{{"3_1", 2, ab(1, {3})}, {"3_1", 3, ab(1, {2, 2})}, {"4_1", 2, ab(1, {5})}};
  for (const auto& c : cases) {
    const auto w = wirtinger_of(c.knot);
    const auto start = std::chrono::steady_clock::now();
    const NineTermReport r = nine_term_report(w, covers::CoverDescriptor::cyclic(c.n));
    CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 10.0);
    CHECK(r.groups[5] == c.h1);
    const auto predicted = branched_homology_order(alexander_polynomial(w), c.n);
    REQUIRE(predicted.has_value());
    CHECK(AbelianInvariants{0, c.h1.torsion}.order() == *predicted);
    CHECK(r.groups[0] == ab(1));
    CHECK(r.groups[2] == ab(0));
    CHECK(r.groups[6] == ab(0, c.h1.torsion));
    for (const char* name : {"a", "b", "c", "d", "e"}) CHECK(constraint(r, name).status == Constraint::Status::Passed);
    CHECK(constraint(r, "f").status == Constraint::Status::NotApplicable);
    CHECK_FALSE(r.full_exactness.has_value());
    for (const auto& u : r.uct) CHECK(u.satisfied());
    CHECK(r.rank_balance() == 0);
    CHECK(r.all_satisfied());
  }
}

TEST_CASE("nine-term constraints across the table", "[foxhom][nine]") {
  for (const auto& e : knots::KnotTable::builtin().entries()) {
    const auto w = knots::wirtinger(e.diagram());
    for (std::size_t n = 1; n <= 4; ++n) {
      const NineTermReport r = nine_term_report(w, covers::CoverDescriptor::cyclic(n));
      INFO(e.name << " n=" << n);
      CHECK(r.all_satisfied());
      CHECK(static_cast<std::size_t>(r.lattice.e * r.lattice.f * r.lattice.r) == r.index);
    }
  }
}

TEST_CASE("nine-term constraints on a non-cyclic normal cover", "[foxhom][nine]") {
  // Regular S_3 cover of the trefoil: three boundary components.
  const auto w = wirtinger_of("3_1");
  std::vector<fp::Permutation> images;
  // a_i -> transpositions, then the regular action on the six elements of S_3.
  const std::vector<std::vector<int>> elements{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  const auto index_of = [&](const std::vector<int>& p) {
    return static_cast<int>(std::find(elements.begin(), elements.end(), p) - elements.begin());
  };
  const auto compose = [](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> z(3);
    for (int i = 0; i < 3; ++i) z[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(x[static_cast<std::size_t>(i)])];
    return z;
  };
  const std::vector<std::vector<int>> transpositions{{1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  bool found = false;
  for (const auto& x : transpositions)
    for (const auto& y : transpositions)
      for (const auto& z : transpositions) {
        if (found || x == y) continue;
        std::vector<fp::Permutation> candidate;
        for (const auto* g : {&x, &y, &z}) {
          fp::Permutation p(6);
          for (int i = 0; i < 6; ++i) p[static_cast<std::size_t>(i)] = index_of(compose(elements[static_cast<std::size_t>(i)], *g));
          candidate.push_back(p);
        }
        try {
          covers::cover_table(w, covers::CoverDescriptor::permutation(candidate));
          images = candidate;
          found = true;
        } catch (const std::exception&) {
        }
      }
  REQUIRE(found);
  const NineTermReport r = nine_term_report(w, covers::CoverDescriptor::permutation(images));
  CHECK(r.index == 6);
  CHECK(r.lattice.r == 3);
  CHECK(r.groups[1] == ab(3));
  CHECK(r.groups[2] == ab(2));  // H_2 of the exterior cover: r - 1 boundary tori
  for (const char* name : {"a", "b", "c", "d", "e"}) CHECK(constraint(r, name).status == Constraint::Status::Passed);
  CHECK(r.all_satisfied());
}

TEST_CASE("nine-term negative controls", "[foxhom][nine]") {
  const auto w = wirtinger_of("3_1");
  const fp::CosetTable t = covers::cover_table(w, covers::CoverDescriptor::cyclic(1));
  const covers::PeripheralLattice l = covers::peripheral_lattice(w, t);
  const DegreeOneMaps maps = degree_one_maps(w, t, l);
  // Dropping D sends H^1 onto the meridian line, which is not ker mu1.
  const IntMatrix undualized = maps.mu1.transpose() * maps.h1_dual_basis;
  const IntMatrix ker = homalg::preimage_of_relations(maps.mu1, maps.h1);
  CHECK_FALSE(homalg::Lattice(ker).contains_columns(undualized));
  // Either sign of D gives the same image.
  const DegreeOneMaps flipped = degree_one_maps(w, t, l, -1);
  CHECK(flipped.nu1 == -maps.nu1);
  CHECK(homalg::Lattice(ker).contains_columns(flipped.nu1));
}
