#include "knotarith/covers/cover.hpp"

#include "knotarith/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace knotarith::covers {

namespace {

fp::Permutation compose(const fp::Permutation& x, const fp::Permutation& y) {  // x then y
  fp::Permutation out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = y[static_cast<std::size_t>(x[i])];
  return out;
}

}  // namespace

CoverDescriptor CoverDescriptor::cyclic(std::size_t n) {
  if (n == 0) throw ValidationError("cyclic cover degree must be at least 1");
  CoverDescriptor d;
  d.kind = Kind::Cyclic;
  d.n = n;
  return d;
}

CoverDescriptor CoverDescriptor::permutation(std::vector<fp::Permutation> images) {
  if (images.empty()) throw ValidationError("a permutation cover needs one image per generator");
  CoverDescriptor d;
  d.kind = Kind::Permutation;
  d.images = std::move(images);
  d.n = 0;
  for (const auto& p : d.images) d.n = std::max(d.n, p.size());
  return d;
}

std::string CoverDescriptor::to_string() const {
  if (kind == Kind::Cyclic) return "cyclic(" + std::to_string(n) + ")";
  std::string s = "permutation(";
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) s += "; ";
    s += "[";
    for (std::size_t j = 0; j < images[i].size(); ++j) s += (j ? " " : "") + std::to_string(images[i][j] + 1);
    s += "]";
  }
  return s + ")";
}

std::vector<fp::Permutation> parse_permutation_images(std::string_view text) {
  std::vector<std::vector<std::vector<int>>> cycles(1);
  int degree = 0;
  std::size_t i = 0;
  const auto fail = [&](const std::string& msg) { throw ParseError(msg, 1, i + 1); };
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t') {
      ++i;
    } else if (c == ';') {
      cycles.emplace_back();
      ++i;
    } else if (c == '(') {
      ++i;
      std::vector<int> cycle;
      while (true) {
        while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
        if (i >= text.size()) fail("unterminated cycle");
        if (text[i] == ')') {
          ++i;
          break;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected a point");
        int x = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          x = 10 * x + (text[i] - '0');
          if (x > 1'000'000) fail("point too large");
          ++i;
        }
        if (x < 1) fail("points are 1-based");
        if (std::find(cycle.begin(), cycle.end(), x - 1) != cycle.end()) fail("repeated point in a cycle");
        cycle.push_back(x - 1);
        degree = std::max(degree, x);
      }
      cycles.back().push_back(std::move(cycle));
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  std::vector<fp::Permutation> out;
  for (const auto& image : cycles) {
    fp::Permutation p(static_cast<std::size_t>(degree));
    for (int x = 0; x < degree; ++x) p[static_cast<std::size_t>(x)] = x;
    std::vector<bool> moved(static_cast<std::size_t>(degree), false);
    for (const auto& cycle : image)
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        if (moved[static_cast<std::size_t>(cycle[k])]) throw ParseError("cycles of one image are not disjoint", 1, 1);
        moved[static_cast<std::size_t>(cycle[k])] = true;
        p[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
      }
    out.push_back(std::move(p));
  }
  return out;
}

KnotInput KnotInput::from_entry(const knots::KnotTableEntry& e) {
  return {e.name, knots::wirtinger(e.diagram()), e.prime};
}

fp::CosetTable cyclic_cover_table(const knots::WirtingerData& w, std::size_t n) {
  if (n == 0) throw ValidationError("cyclic cover degree must be at least 1");
  const std::size_t ng = w.presentation.num_generators();
  std::vector<int> action(n * 2 * ng);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t g = 0; g < ng; ++g) {
      const auto shift = static_cast<std::size_t>(((knots::winding_number(fp::Word::generator(static_cast<int>(g))) %
                                                    static_cast<long long>(n)) + static_cast<long long>(n)) %
                                                   static_cast<long long>(n));
      action[c * 2 * ng + 2 * g] = static_cast<int>((c + shift) % n);
      action[c * 2 * ng + 2 * g + 1] = static_cast<int>((c + n - shift) % n);
    }
  return fp::CosetTable(ng, std::move(action));
}

fp::CosetTable cover_table(const knots::WirtingerData& w, const CoverDescriptor& desc) {
  if (desc.kind == CoverDescriptor::Kind::Cyclic) return cyclic_cover_table(w, desc.n);
  if (desc.images.size() != w.presentation.num_generators())
    throw ValidationError("expected " + std::to_string(w.presentation.num_generators()) +
                          " permutation images, got " + std::to_string(desc.images.size()));
  return fp::kernel_coset_table(w.presentation, desc.images);
}

IntMatrix PeripheralLattice::basis() const {
  IntMatrix b(2, 2);
  b << BigInt(e), BigInt(p), BigInt(0), BigInt(q);
  return b;
}

std::array<long long, 3> lattice_from_commuting_permutations(const fp::Permutation& A, const fp::Permutation& L,
                                                              int base) {
  if (A.size() != L.size() || base < 0 || static_cast<std::size_t>(base) >= A.size())
    throw ValidationError("permutations of different degrees or base point out of range");
  if (compose(A, L) != compose(L, A)) throw ValidationError("peripheral permutations do not commute");
  // Position of each point on the A-cycle through base.
  std::vector<long long> position(A.size(), -1);
  long long e = 0;
  for (int x = base; position[static_cast<std::size_t>(x)] < 0; x = A[static_cast<std::size_t>(x)]) position[static_cast<std::size_t>(x)] = e++;
  long long q = 1;
  int y = L[static_cast<std::size_t>(base)];
  while (position[static_cast<std::size_t>(y)] < 0) {
    y = L[static_cast<std::size_t>(y)];
    ++q;
  }
  // base . L^q = base . A^i, so A^{-i} L^q fixes base.
  const long long i = position[static_cast<std::size_t>(y)];
  const long long p = (e - i) % e;
  return {e, p, q};
}

PeripheralLattice peripheral_lattice(const knots::WirtingerData& w, const fp::CosetTable& t) {
  if (!fp::is_normal(t)) throw NonNormal();
  const fp::Permutation A = t.permutation(fp::Word::generator(w.meridian));
  const fp::Permutation L = t.permutation(w.longitude);
  const auto [e, p, q] = lattice_from_commuting_permutations(A, L, 0);

  PeripheralLattice out;
  out.e = e;
  out.p = p;
  out.q = q;
  out.f = q;
  out.index = t.size();
  std::vector<bool> seen(t.size(), false);
  for (std::size_t c = 0; c < t.size(); ++c) {
    if (seen[c]) continue;
    out.component_cosets.push_back(static_cast<int>(c));
    std::vector<int> stack{static_cast<int>(c)};
    seen[c] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto* g : {&A, &L}) {
        const int y = (*g)[static_cast<std::size_t>(x)];
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          stack.push_back(y);
        }
      }
    }
    if (lattice_from_commuting_permutations(A, L, static_cast<int>(c)) != std::array<long long, 3>{e, p, q})
      throw std::logic_error("peripheral lattice differs between components of a normal cover");
  }
  out.r = static_cast<long long>(out.component_cosets.size());
  if (static_cast<std::size_t>(out.e * out.f * out.r) != t.size())
    throw std::logic_error("e f r differs from the index");
  return out;
}

PeripheralLattice peripheral_lattice(const knots::WirtingerData& w, const CoverDescriptor& desc) {
  return peripheral_lattice(w, cover_table(w, desc));
}

std::vector<std::array<fp::Word, 2>> peripheral_basis_words(const knots::WirtingerData& w, const fp::CosetTable& t,
                                                            const PeripheralLattice& lattice) {
  const fp::Word a = fp::Word::generator(w.meridian);
  const fp::Word first = a.pow(lattice.e);
  const fp::Word second = a.pow(lattice.p) * w.longitude.pow(lattice.q);
  std::vector<std::array<fp::Word, 2>> out;
  for (int c : lattice.component_cosets) {
    const fp::Word& tw = t.transversal(c);
    out.push_back({tw * first * tw.inverse(), tw * second * tw.inverse()});
    for (const auto& x : out.back())
      if (!fp::word_traces_into_subgroup(t, x)) throw std::logic_error("peripheral basis word is not in the subgroup");
  }
  return out;
}

std::vector<fp::Word> meridian_power_representatives(const knots::WirtingerData& w, const CoverDescriptor& desc) {
  const fp::CosetTable t = cover_table(w, desc);
  const PeripheralLattice lattice = peripheral_lattice(w, t);
  std::vector<fp::Word> out;
  for (const auto& pair : peripheral_basis_words(w, t, lattice)) out.push_back(pair[0]);
  return out;
}

bool full_splitting_check(const knots::WirtingerData& w, const CoverDescriptor& desc) {
  const PeripheralLattice lattice = peripheral_lattice(w, desc);
  const bool split = static_cast<std::size_t>(lattice.r) == lattice.index;
  if (split != (lattice.index == 1)) throw std::logic_error("full splitting without U = G contradicts c = 1");
  return split;
}

}  // namespace knotarith::covers
