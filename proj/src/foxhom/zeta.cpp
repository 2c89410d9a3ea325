#include "knotarith/foxhom/zeta.hpp"

#include "knotarith/foxhom/resolutions.hpp"

namespace knotarith::fox {

namespace {

LaurentBivar mono(long long i, long long j, long long c = 1) { return LaurentBivar::monomial(i, j, c); }

}  // namespace

LaurentChainMap zeta_map() {
  return {LaurentMatrix{{1}}, LaurentMatrix{{0, mono(1, 0, -1)}, {mono(0, 1), 0}}, LaurentMatrix{{mono(1, 1, -1)}}};
}

LaurentChainMap zeta_inverse_map() {
  return {LaurentMatrix{{1}}, LaurentMatrix{{0, mono(0, -1)}, {mono(-1, 0, -1), 0}},
          LaurentMatrix{{mono(-1, -1, -1)}}};
}

LaurentChainMap zeta_adjoint_map() {
  return {LaurentMatrix{{mono(-1, -1, -1)}}, LaurentMatrix{{0, mono(0, -1)}, {mono(-1, 0, -1), 0}},
          LaurentMatrix{{1}}};
}

bool ZetaVerdict::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

ZetaVerdict zeta_selfduality_check() {
  ZetaVerdict v;
  const auto add = [&](std::string name, bool ok) { v.checks.push_back({std::move(name), ok}); };
  const auto deg = [](int k) { return std::to_string(k); };

  const LaurentComplex q = peripheral_resolution();
  const LaurentComplex qs = peripheral_dual_explicit();
  const LaurentComplex qss = dual_complex(dual_complex(q));
  const auto z = zeta_map(), zi = zeta_inverse_map(), za = zeta_adjoint_map();

  add("Q: d1 d2 = 0", (q.d(2) * q.d(1)).is_zero());
  add("Q dual: d1 d2 = 0", (qs.d(2) * qs.d(1)).is_zero());
  const LaurentComplex computed_dual = dual_complex(q);
  for (int k = 1; k <= 2; ++k) {
    add("Q dual: d" + deg(k) + " is the antipode-transpose", computed_dual.d(k) == qs.d(k));
    add("Q double dual: d" + deg(k) + " equals Q", qss.d(k) == q.d(k));
  }
  for (int k = 1; k <= 2; ++k) {
    const auto k0 = static_cast<std::size_t>(k - 1), k1 = static_cast<std::size_t>(k);
    add("zeta chain map: degree " + deg(k) + " square", q.d(k) * z[k0] == z[k1] * qs.d(k));
    add("zeta inverse chain map: degree " + deg(k) + " square", qs.d(k) * zi[k0] == zi[k1] * q.d(k));
    add("zeta adjoint chain map: degree " + deg(k) + " square", qss.d(k) * za[k0] == za[k1] * qs.d(k));
  }
  const LaurentBivar unit = mono(-1, -1, -1);
  for (int k = 0; k <= 2; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    const auto id = LaurentMatrix::identity(z[kk].rows());
    add("zeta inverse: degree " + deg(k) + " left", zi[kk] * z[kk] == id);
    add("zeta inverse: degree " + deg(k) + " right", z[kk] * zi[kk] == id);
    add("zeta adjoint: degree " + deg(k) + " is the antipode-transpose of zeta_" + deg(2 - k),
        za[kk] == z[static_cast<std::size_t>(2 - k)].antipode_transpose());
    add("zeta adjoint: degree " + deg(k) + " equals -(m l)^-1 zeta", za[kk] == unit * z[kk]);
  }
  return v;
}

}  // namespace knotarith::fox
