#include "knotarith/errors.hpp"
#include "knotarith/fpgroup/presentation.hpp"
#include "knotarith/homalg/abelian.hpp"
#include "knotarith/homalg/chain_complex.hpp"
#include "knotarith/homalg/exactness.hpp"
#include "knotarith/homalg/matrix_io.hpp"
#include "knotarith/homalg/smith.hpp"

#include "../support/oracles.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace knotarith;
using namespace knotarith::homalg;

namespace {

IntMatrix make(std::initializer_list<std::initializer_list<long long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
  IntMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

IntMatrix random_matrix(std::mt19937& rng, Eigen::Index r, Eigen::Index c, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  IntMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

oracle::Mat to_oracle(const IntMatrix& m) {
  oracle::Mat out(static_cast<std::size_t>(m.rows()), std::vector<long long>(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = to_ll(m(i, j));
  return out;
}

// Random unimodular matrix as a product of elementary operations.
IntMatrix random_unimodular(std::mt19937& rng, Eigen::Index n) {
  IntMatrix u = IntMatrix::Identity(n, n);
  if (n < 2) return u;
  std::uniform_int_distribution<Eigen::Index> idx(0, n - 1);
  std::uniform_int_distribution<int> q(-2, 2);
  for (int step = 0; step < 3 * n; ++step) {
    const auto a = idx(rng), b = idx(rng);
    if (a == b) continue;
    u.row(a) += BigInt(q(rng)) * u.row(b);
  }
  return u;
}

void check_smith(const IntMatrix& a) {
  const auto s = smith_normal_form(a);
  CHECK(s.U * a * s.V == s.D);
  for (Eigen::Index i = 0; i < s.D.rows(); ++i)
    for (Eigen::Index j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D(i, j) == 0);
  const auto d = s.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i] >= 0);
    if (i + 1 < d.size() && d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
    if (d[i] == 0 && i + 1 < d.size()) CHECK(d[i + 1] == 0);
  }
  // Determinantal-divisor oracle.
  const auto expected = oracle::determinantal_invariants(to_oracle(a));
  REQUIRE(expected.size() == d.size());
  for (std::size_t i = 0; i < d.size(); ++i) CHECK(d[i] == expected[i]);
  // Fixed point.
  CHECK(smith_normal_form(s.D).D == s.D);
}

}  // namespace

TEST_CASE("Smith normal form examples", "[homalg][snf]") {
  const auto id = smith_normal_form<BigInt>(IntMatrix::Identity(3, 3));
  CHECK(id.D == IntMatrix::Identity(3, 3));
  const auto s = smith_normal_form(make({{2, 0}, {0, 3}}));
  CHECK(s.D == make({{1, 0}, {0, 6}}));
  const auto z = smith_normal_form<BigInt>(IntMatrix::Zero(2, 3));
  CHECK(z.D.isZero());
  CHECK(z.rank == 0);
  // Template over machine integers.
  Matrix<long long> m(2, 2);
  m << 4, 6, 6, 4;
  const auto sl = smith_normal_form(m);
  CHECK(sl.D(0, 0) == 2);
  CHECK(sl.D(1, 1) == 10);
}

TEST_CASE("Smith normal form invariants on random matrices", "[homalg][snf][property]") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<int> dim(1, 4);
    const IntMatrix a = random_matrix(rng, dim(rng), dim(rng), trial % 2 ? 3 : 9);
    check_smith(a);
    const auto s = smith_normal_form(a);
    if (a.rows() == a.cols()) {
      // |det| preserved.
      oracle::Mat om = to_oracle(a);
      BigInt prod = 1;
      for (const auto& x : s.diagonal()) prod *= x;
      const long long det = oracle::cofactor_det(om);
      CHECK(prod == (det < 0 ? -det : det));
    }
    CHECK(to_ll(abs(BigInt(oracle::cofactor_det(to_oracle(s.U))))) == 1);
    CHECK(to_ll(abs(BigInt(oracle::cofactor_det(to_oracle(s.V))))) == 1);
  }
}

TEST_CASE("Smith normal form copes with coefficient growth", "[homalg][snf]") {
  IntMatrix a(3, 3);
  a << BigInt("123456789012345678901"), 2, 3, 4, BigInt("98765432109876543210"), 6, 7, 8, 9;
  const auto s = smith_normal_form(a);
  CHECK(s.U * a * s.V == s.D);
}

TEST_CASE("integer linear systems", "[homalg][snf]") {
  const IntMatrix a = make({{2, 0}, {0, 3}});
  CHECK(solve_integer<BigInt>(a, make({{4}, {9}})) == std::optional<IntVector>(make({{2}, {3}})));
  CHECK_FALSE(solve_integer<BigInt>(a, make({{1}, {0}})).has_value());
  CHECK_FALSE(solve_integer<BigInt>(make({{1}, {1}}), make({{1}, {2}})).has_value());
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix m = random_matrix(rng, 4, 3, 4);
    const IntVector x = random_matrix(rng, 3, 1, 5);
    const IntVector b = m * x;
    const auto y = solve_integer<BigInt>(m, b);
    REQUIRE(y.has_value());
    CHECK(m * *y == b);
    // Perturbing b off the lattice leaves it unsolvable exactly when it leaves colspan over Z.
    IntVector c = b;
    c(0) += 1;
    IntMatrix joined(4, 3);
    joined << m;
    CHECK(solve_integer<BigInt>(m, c).has_value() == Lattice(joined).contains(c));
  }
}

TEST_CASE("abelian invariants of presentations", "[homalg][abelian]") {
  using fp::parse_presentation;
  const auto trefoil = abelian_invariants(parse_presentation("< a, b | a b a b^-1 a^-1 b^-1 >"));
  CHECK(trefoil.free_rank == 1);
  CHECK(trefoil.torsion.empty());
  const auto q8 = abelian_invariants(parse_presentation("< i, j | i^2 = j^2 = (i j)^2, i^4 >"));
  CHECK(q8.free_rank == 0);
  CHECK(q8.torsion == std::vector<BigInt>{2, 2});
  const auto u3 = abelian_invariants(parse_presentation("< x, y, z | x^-1 y x^-1 y^-1, y z^-1 y^-1 z^-1 >"));
  CHECK(u3.encoded() == std::vector<BigInt>{2, 2, 0});
  CHECK(AbelianInvariants::from_encoded({2, 2, 0}) == u3);
  CHECK(u3.to_string() == "Z/2 + Z/2 + Z");
  CHECK_FALSE(u3.order());
  CHECK(*q8.order() == 4);
  CHECK(AbelianInvariants{}.to_string() == "0");
}

TEST_CASE("abelianization of the quaternion group by brute force", "[homalg][abelian]") {
  // Oracle: the commutator subgroup of the unit quaternions is {+1, -1}, so the
  // abelianization has 8/2 = 4 elements, each of order dividing 2.
  const oracle::Quat qi{0, 1, 0, 0}, qj{0, 0, 1, 0}, one{1, 0, 0, 0};
  const auto group = oracle::closure<oracle::Quat>({qi, qj}, one, oracle::qmul);
  std::set<oracle::Quat> comm;
  for (const auto& x : group)
    for (const auto& y : group) {
      const oracle::Quat xi{x[0], -x[1], -x[2], -x[3]}, yi{y[0], -y[1], -y[2], -y[3]};
      comm.insert(oracle::qmul(oracle::qmul(x, y), oracle::qmul(xi, yi)));
    }
  const auto q8 = abelian_invariants(fp::parse_presentation("< i, j | i^2 = j^2 = (i j)^2, i^4 >"));
  CHECK(*q8.order() == static_cast<long long>(group.size() / comm.size()));
  for (const auto& t : q8.torsion) CHECK(t == 2);
}

TEST_CASE("homology of small complexes", "[homalg][homology]") {
  const IntChainComplex point({1}, {});
  CHECK(homology(point, 0) == AbelianInvariants{1, {}});
  const IntChainComplex twice({1, 1}, {make({{2}})});
  CHECK(homology(twice, 0) == AbelianInvariants{0, {2}});
  CHECK(homology(twice, 1).is_trivial());
  CHECK(cohomology(twice, 1) == AbelianInvariants{0, {2}});
  CHECK(cohomology(twice, 0).is_trivial());
  // Circle: Z <- Z with zero boundary.
  const IntChainComplex circle({1, 1}, {make({{0}})});
  CHECK(homology(circle, 1) == AbelianInvariants{1, {}});
  CHECK_THROWS_AS(IntChainComplex({1, 2}, {make({{1}})}), DimensionMismatch);
  CHECK_THROWS_AS(IntChainComplex({1, 1, 1}, {make({{1}}), make({{1}})}), ValidationError);
  CHECK_THROWS_AS(homology(circle, 2), DimensionMismatch);
}

TEST_CASE("homology is invariant under change of basis", "[homalg][homology][property]") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    // Projective plane style complex Z <-0- Z <-2- Z plus random padding.
    std::uniform_int_distribution<int> dim(1, 3);
    const Eigen::Index n0 = dim(rng), n1 = dim(rng) + 1, n2 = dim(rng);
    IntMatrix d2 = random_matrix(rng, n1, n2, 3);
    // d1 = any matrix whose rows kill the image of d2: take left kernel rows.
    const IntMatrix left = integer_kernel<BigInt>(d2.transpose()).transpose();
    IntMatrix d1 = IntMatrix::Zero(n0, n1);
    for (Eigen::Index i = 0; i < std::min<Eigen::Index>(n0, left.rows()); ++i) d1.row(i) = BigInt(trial % 3 + 1) * left.row(i);
    const IntChainComplex c({static_cast<std::size_t>(n0), static_cast<std::size_t>(n1), static_cast<std::size_t>(n2)}, {d1, d2});
    const IntMatrix b0 = random_unimodular(rng, n0), b1 = random_unimodular(rng, n1), b2 = random_unimodular(rng, n2);
    // Change of basis: d_k' = B_{k-1} d_k B_k^{-1}; with unimodular B the inverse is integral.
    const IntMatrix b1inv = smith_normal_form(b1).V * smith_normal_form(b1).U;
    const IntMatrix b2inv = smith_normal_form(b2).V * smith_normal_form(b2).U;
    REQUIRE(b1 * b1inv == IntMatrix::Identity(n1, n1));
    const IntChainComplex c2({static_cast<std::size_t>(n0), static_cast<std::size_t>(n1), static_cast<std::size_t>(n2)},
                             {b0 * d1 * b1inv, b1 * d2 * b2inv});
    for (int k = 0; k <= 2; ++k) {
      CHECK(homology(c, k) == homology(c2, k));
      CHECK(cohomology(c, k) == cohomology(c2, k));
    }
    // Rank-nullity per boundary map.
    for (const IntMatrix* d : {&d1, &d2}) {
      const auto rank = integer_rank(*d);
      const IntMatrix ker = integer_kernel(*d);
      CHECK(ker.cols() + rank == d->cols());
      CHECK((*d * ker).isZero());
    }
  }
}

TEST_CASE("exactness checks", "[homalg][exact]") {
  const auto Z = PresentedGroup::free(1);
  const auto Z2 = PresentedGroup::cyclic(2);
  auto v = exactness_check({Z, Z}, {make({{1}})});
  for (const auto& x : v) CHECK(x.exact());
  v = exactness_check({Z, Z, Z2}, {make({{2}}), make({{1}})});
  for (const auto& x : v) CHECK(x.exact());
  v = exactness_check({Z, Z, Z2}, {make({{3}}), make({{1}})});
  CHECK(v[0].exact());
  CHECK_FALSE(v[1].exact());
  // Z/2 -> Z is not well defined unless the map is zero.
  CHECK_THROWS_AS(exactness_check({Z2, Z}, {make({{1}})}), IllDefinedMap);
  // Torsion membership: Z/4 -> Z/4 by 2 has kernel {0, 2} = image of Z/2 -> Z/4 by 2.
  const auto Z4 = PresentedGroup::cyclic(4);
  v = exactness_check({Z2, Z4, Z4}, {make({{2}}), make({{2}})});
  CHECK(v[0].exact());
  CHECK(v[1].exact());
  CHECK_FALSE(v[2].exact());
}

TEST_CASE("reduced nine-term sequence is exact", "[homalg][exact]") {
  // Z -> Z -> 0 -> Z -> Z+Z -> Z -> 0 -> Z -> Z with identity-like maps.
  const auto Z = PresentedGroup::free(1), Z2 = PresentedGroup::free(2), O = PresentedGroup::zero();
  const std::vector<PresentedGroup> groups{Z, Z, O, Z, Z2, Z, O, Z, Z};
  const std::vector<IntMatrix> maps{make({{1}}), IntMatrix::Zero(0, 1), IntMatrix::Zero(1, 0), make({{0}, {1}}),
                                    make({{1, 0}}), IntMatrix::Zero(0, 1), IntMatrix::Zero(1, 0), make({{1}})};
  const auto v = exactness_check(groups, maps);
  REQUIRE(v.size() == 9);
  for (const auto& x : v) CHECK(x.exact());
}

TEST_CASE("matrix text format round trip", "[homalg][io]") {
  const IntMatrix m = make({{1, -2, 3}, {0, 5, -6}});
  CHECK(matrix_from_text(matrix_to_text(m)) == m);
  CHECK(matrix_to_text(m) == "2 3\n1 -2 3\n0 5 -6\n");
  CHECK_THROWS_AS(matrix_from_text("2 2\n1 2 3"), ValidationError);
}
