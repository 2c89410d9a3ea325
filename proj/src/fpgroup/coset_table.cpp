#include "knotarith/fpgroup/coset_table.hpp"

#include "knotarith/errors.hpp"

#include <numeric>
#include <queue>

namespace knotarith::fp {

CosetTable::CosetTable(std::size_t num_generators, std::vector<int> action)
    : num_generators_(num_generators) {
  const std::size_t cols = 2 * num_generators;
  if (cols == 0) {
    // Group with no generators: a single coset.
    size_ = 1;
    transversal_.assign(1, Word());
    parent_letter_.assign(1, -1);
    return;
  }
  if (action.empty() || action.size() % cols != 0) throw IncompleteTable();
  const std::size_t n = action.size() / cols;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t x = 0; x < cols; ++x) {
      const int d = action[c * cols + x];
      if (d < 0 || static_cast<std::size_t>(d) >= n) throw IncompleteTable();
      if (action[static_cast<std::size_t>(d) * cols + (x ^ 1U)] != static_cast<int>(c))
        throw IncompleteTable();
    }

  // Breadth-first renumbering from coset 0.
  std::vector<int> new_of(n, -1);
  std::vector<int> old_of;
  std::vector<int> parent_letter;
  old_of.reserve(n);
  new_of[0] = 0;
  old_of.push_back(0);
  parent_letter.push_back(-1);
  for (std::size_t k = 0; k < old_of.size(); ++k) {
    const std::size_t c = static_cast<std::size_t>(old_of[k]);
    for (std::size_t x = 0; x < cols; ++x) {
      const int d = action[c * cols + x];
      if (new_of[static_cast<std::size_t>(d)] < 0) {
        new_of[static_cast<std::size_t>(d)] = static_cast<int>(old_of.size());
        old_of.push_back(d);
        parent_letter.push_back(static_cast<int>(x));
      }
    }
  }
  size_ = old_of.size();
  action_.assign(size_ * cols, -1);
  for (std::size_t k = 0; k < size_; ++k) {
    const std::size_t c = static_cast<std::size_t>(old_of[k]);
    for (std::size_t x = 0; x < cols; ++x)
      action_[k * cols + x] = new_of[static_cast<std::size_t>(action[c * cols + x])];
  }
  parent_letter_ = std::move(parent_letter);
  transversal_.assign(size_, Word());
  for (std::size_t k = 1; k < size_; ++k) {
    const Letter x = parent_letter_[k];
    const int parent = act(static_cast<int>(k), inverse_letter(x));
    transversal_[k] = transversal_[static_cast<std::size_t>(parent)] *
                      Word::from_letters(std::span<const Letter>(&x, 1));
  }
}

int CosetTable::trace(int coset, const Word& w) const {
  for (const Syllable& s : w.syllables()) {
    const Letter x = letter_of(s.gen, s.exp < 0);
    for (int i = 0; i < std::abs(s.exp); ++i) coset = act(coset, x);
  }
  return coset;
}

Permutation CosetTable::permutation(const Word& w) const {
  Permutation p(size_);
  for (std::size_t c = 0; c < size_; ++c) p[c] = trace(static_cast<int>(c), w);
  return p;
}

bool CosetTable::is_tree_edge(int coset, Letter x) const {
  const int d = act(coset, x);
  if (d != 0 && parent_letter_[static_cast<std::size_t>(d)] == x &&
      act(d, inverse_letter(x)) == coset)
    return true;
  if (coset != 0 && parent_letter_[static_cast<std::size_t>(coset)] == inverse_letter(x))
    return true;
  return false;
}

bool CosetTable::satisfies(const Presentation& p) const {
  if (p.num_generators() != num_generators_) return false;
  for (const auto& r : p.relators())
    for (std::size_t c = 0; c < size_; ++c)
      if (trace(static_cast<int>(c), r) != static_cast<int>(c)) return false;
  return true;
}

CosetTable kernel_coset_table(const Presentation& p, std::span<const Permutation> images) {
  if (images.size() != p.num_generators())
    throw ValidationError("need one permutation image per generator");
  std::size_t k = 0;
  for (const auto& img : images) k = std::max(k, img.size());
  std::vector<Permutation> perms;
  std::vector<Permutation> inv;
  for (const auto& img : images) {
    Permutation q(k);
    std::iota(q.begin(), q.end(), 0);
    for (std::size_t i = 0; i < img.size(); ++i) q[i] = img[i];
    Permutation qi(k, -1);
    for (std::size_t i = 0; i < k; ++i) {
      if (q[i] < 0 || static_cast<std::size_t>(q[i]) >= k || qi[static_cast<std::size_t>(q[i])] >= 0)
        throw ValidationError("image is not a permutation");
      qi[static_cast<std::size_t>(q[i])] = static_cast<int>(i);
    }
    perms.push_back(std::move(q));
    inv.push_back(std::move(qi));
  }
  if (k == 0) k = 1;
  auto apply = [&](int point, const Word& w) {
    for (const Syllable& s : w.syllables()) {
      const auto& q = s.exp > 0 ? perms[static_cast<std::size_t>(s.gen)] : inv[static_cast<std::size_t>(s.gen)];
      for (int i = 0; i < std::abs(s.exp); ++i) point = q[static_cast<std::size_t>(point)];
    }
    return point;
  };
  for (std::size_t j = 0; j < p.relators().size(); ++j)
    for (std::size_t pt = 0; pt < k; ++pt)
      if (apply(static_cast<int>(pt), p.relators()[j]) != static_cast<int>(pt)) throw RelatorViolation(j);

  // Orbit of point 0.
  std::vector<int> local(k, -1);
  std::vector<int> orbit{0};
  local[0] = 0;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (std::size_t g = 0; g < perms.size(); ++g)
      for (const auto* q : {&perms[g], &inv[g]}) {
        const int d = (*q)[static_cast<std::size_t>(orbit[i])];
        if (local[static_cast<std::size_t>(d)] < 0) {
          local[static_cast<std::size_t>(d)] = static_cast<int>(orbit.size());
          orbit.push_back(d);
        }
      }
  const std::size_t cols = 2 * p.num_generators();
  std::vector<int> action(orbit.size() * cols);
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (std::size_t g = 0; g < perms.size(); ++g) {
      action[i * cols + 2 * g] = local[static_cast<std::size_t>(perms[g][static_cast<std::size_t>(orbit[i])])];
      action[i * cols + 2 * g + 1] = local[static_cast<std::size_t>(inv[g][static_cast<std::size_t>(orbit[i])])];
    }
  return CosetTable(p.num_generators(), std::move(action));
}

bool word_traces_into_subgroup(const CosetTable& t, const Word& w) { return t.trace(0, w) == 0; }

bool is_normal(const CosetTable& t) {
  const std::size_t n = t.size();
  const std::size_t cols = t.num_columns();
  if (cols == 0) return true;
  std::vector<int> phi(n);
  for (std::size_t target = 1; target < n; ++target) {
    // Candidate automorphism sending coset 0 to `target`, built along the transversal.
    for (std::size_t c = 0; c < n; ++c) phi[c] = t.trace(static_cast<int>(target), t.transversal(static_cast<int>(c)));
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t x = 0; x < cols; ++x)
        if (phi[static_cast<std::size_t>(t.act(static_cast<int>(c), static_cast<Letter>(x)))] !=
            t.act(phi[c], static_cast<Letter>(x)))
          return false;
  }
  return true;
}

std::size_t permutation_order(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  std::size_t order = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

}  // namespace knotarith::fp
