#include "knotarith/errors.hpp"
#include "knotarith/fpgroup/coset_table.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace knotarith::fp {

namespace {

// Todd-Coxeter enumerator. Rows are cosets; a dead coset c has forward_[c] != c
// and is never referenced from a live row once its coincidence has been processed.
class Enumerator {
 public:
  Enumerator(std::size_t num_generators, std::vector<std::vector<Letter>> relators,
             std::size_t max_cosets, Strategy strategy)
      : cols_(2 * num_generators),
        relators_(std::move(relators)),
        max_cosets_(std::max<std::size_t>(max_cosets, 1)),
        strategy_(strategy) {
    new_row();
    if (strategy_ == Strategy::Felsch) build_conjugates();
  }

  std::vector<int> run(const std::vector<std::vector<Letter>>& subgroup) {
    if (cols_ == 0) return {};
    for (const auto& w : subgroup) fill_at(0, w);
    if (strategy_ == Strategy::HLT)
      hlt();
    else
      felsch();
    for (const auto& w : subgroup) fill_at(0, w);
    while (!verify()) {
      if (strategy_ == Strategy::HLT)
        hlt();
      else
        felsch();
    }
    compact();
    return table_;
  }

 private:
  enum class Scan { Done, Restart };

  int& entry(int c, Letter x) { return table_[static_cast<std::size_t>(c) * cols_ + static_cast<std::size_t>(x)]; }
  bool live(int c) const { return forward_[static_cast<std::size_t>(c)] == c; }
  int rows() const { return static_cast<int>(forward_.size()); }

  int new_row() {
    const int c = rows();
    table_.resize(table_.size() + cols_, -1);
    forward_.push_back(c);
    ++live_;
    return c;
  }

  void set(int c, Letter x, int d) {
    entry(c, x) = d;
    entry(d, inverse_letter(x)) = c;
    if (strategy_ == Strategy::Felsch) deductions_.push_back({c, x});
  }

  // Returns false if no room is available under the budget.
  bool room() {
    if (live_ < max_cosets_) return true;
    if (strategy_ == Strategy::HLT) {
      lookahead();
      return live_ < max_cosets_;
    }
    return false;
  }

  void define(int c, Letter x) {
    const int d = new_row();
    set(c, x, d);
  }

  int rep(int c) {
    int r = c;
    while (forward_[static_cast<std::size_t>(r)] != r) r = forward_[static_cast<std::size_t>(r)];
    while (forward_[static_cast<std::size_t>(c)] != r) {
      const int next = forward_[static_cast<std::size_t>(c)];
      forward_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    const int lo = std::min(a, b), hi = std::max(a, b);
    forward_[static_cast<std::size_t>(hi)] = lo;
    --live_;
    queue_.push_back(hi);
  }

  void coincidence(int a, int b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const int g = queue_[i];
      for (std::size_t xi = 0; xi < cols_; ++xi) {
        const Letter x = static_cast<Letter>(xi);
        const int d = entry(g, x);
        if (d < 0) continue;
        const Letter xinv = inverse_letter(x);
        if (entry(d, xinv) == g) entry(d, xinv) = -1;
        const int mu = rep(g), nu = rep(d);
        if (entry(mu, x) >= 0) {
          merge(nu, entry(mu, x));
        } else if (entry(nu, xinv) >= 0) {
          merge(mu, entry(nu, xinv));
        } else {
          set(mu, x, nu);
        }
      }
    }
    queue_.clear();
    changed_ = true;
  }

  // Scan w at c, defining cosets as needed (HLT); Restart means a lookahead
  // ran and the caller must check liveness and rescan.
  Scan scan_and_fill(int c, const std::vector<Letter>& w) {
    if (w.empty()) return Scan::Done;
    for (;;) {
      int f = c, b = c;
      std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
      while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) >= 0) f = entry(f, w[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return Scan::Done;
      }
      while (j >= i && entry(b, inverse_letter(w[static_cast<std::size_t>(j)])) >= 0)
        b = entry(b, inverse_letter(w[static_cast<std::size_t>(j--)]));
      if (j < i) {
        coincidence(f, b);
        return Scan::Done;
      }
      if (i == j) {
        set(f, w[static_cast<std::size_t>(i)], b);
        changed_ = true;
        return Scan::Done;
      }
      if (live_ >= max_cosets_) {
        if (!room()) throw BudgetExceeded(max_cosets_);
        return Scan::Restart;
      }
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  void scan_only(int c, const std::vector<Letter>& w) {
    if (w.empty()) return;
    int f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) >= 0) f = entry(f, w[static_cast<std::size_t>(i++)]);
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && entry(b, inverse_letter(w[static_cast<std::size_t>(j)])) >= 0)
      b = entry(b, inverse_letter(w[static_cast<std::size_t>(j--)]));
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      set(f, w[static_cast<std::size_t>(i)], b);
      changed_ = true;
    }
  }

  // Fill w at coset 0 (subgroup generators), restarting after lookahead.
  void fill_at(int c, const std::vector<Letter>& w) {
    while (scan_and_fill(rep(c), w) == Scan::Restart) {
    }
    process_deductions();
  }

  void lookahead() {
    for (int c = 0; c < rows(); ++c)
      for (const auto& r : relators_) {
        if (!live(c)) break;
        scan_only(c, r);
      }
    deductions_.clear();
    compact();
  }

  // Renumber live cosets consecutively, preserving order. Pending deductions
  // must already be empty.
  void compact() {
    std::vector<int> new_of(forward_.size(), -1);
    int n = 0;
    for (int c = 0; c < rows(); ++c)
      if (live(c)) new_of[static_cast<std::size_t>(c)] = n++;
    if (n == rows()) return;
    std::vector<int> table(static_cast<std::size_t>(n) * cols_, -1);
    for (int c = 0; c < rows(); ++c) {
      if (!live(c)) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        const int d = table_[static_cast<std::size_t>(c) * cols_ + x];
        table[static_cast<std::size_t>(new_of[static_cast<std::size_t>(c)]) * cols_ + x] =
            d < 0 ? -1 : new_of[static_cast<std::size_t>(d)];
      }
    }
    // Map the HLT cursor to the first live coset at or after it.
    int cursor = 0;
    for (int c = 0; c < rows() && c < cursor_; ++c)
      if (live(c)) ++cursor;
    cursor_ = cursor;
    table_ = std::move(table);
    forward_.resize(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) forward_[static_cast<std::size_t>(c)] = c;
    live_ = static_cast<std::size_t>(n);
  }

  void hlt() {
    for (cursor_ = 0; cursor_ < rows(); ++cursor_) {
      const int c = cursor_;
      if (!live(c)) continue;
      bool restart = false;
      for (const auto& r : relators_) {
        if (!live(cursor_)) break;
        if (scan_and_fill(cursor_, r) == Scan::Restart) {
          restart = true;
          break;
        }
      }
      if (restart) {
        // Lookahead compacted the table; redo the current coset.
        --cursor_;
        continue;
      }
      if (!live(cursor_)) continue;
      for (std::size_t x = 0; x < cols_ && live(cursor_); ++x) {
        if (entry(cursor_, static_cast<Letter>(x)) >= 0) continue;
        if (!room()) throw BudgetExceeded(max_cosets_);
        if (live(cursor_) && entry(cursor_, static_cast<Letter>(x)) < 0) define(cursor_, static_cast<Letter>(x));
      }
    }
  }

  struct Deduction {
    int coset;
    Letter letter;
  };

  void build_conjugates() {
    conjugates_.assign(cols_, {});
    for (const auto& r : relators_) {
      std::vector<Letter> inv(r.rbegin(), r.rend());
      for (auto& x : inv) x = inverse_letter(x);
      for (const std::vector<Letter>* w : std::array<const std::vector<Letter>*, 2>{&r, &inv})
        for (std::size_t k = 0; k < w->size(); ++k) {
          std::vector<Letter> rot(w->size());
          for (std::size_t i = 0; i < w->size(); ++i) rot[i] = (*w)[(k + i) % w->size()];
          auto& bucket = conjugates_[static_cast<std::size_t>(rot[0])];
          if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end()) bucket.push_back(std::move(rot));
        }
    }
  }

  void process_deductions() {
    if (strategy_ != Strategy::Felsch) {
      deductions_.clear();
      return;
    }
    while (!deductions_.empty()) {
      const Deduction d = deductions_.back();
      deductions_.pop_back();
      if (!live(d.coset)) continue;
      const int target = entry(d.coset, d.letter);
      for (const auto& w : conjugates_[static_cast<std::size_t>(d.letter)]) {
        if (!live(d.coset)) break;
        scan_only(d.coset, w);
      }
      if (target >= 0 && live(target)) {
        const Letter xinv = inverse_letter(d.letter);
        for (const auto& w : conjugates_[static_cast<std::size_t>(xinv)]) {
          if (!live(target)) break;
          scan_only(target, w);
        }
      }
    }
  }

  void felsch() {
    for (;;) {
      process_deductions();
      int c = -1;
      Letter x = 0;
      for (int k = 0; k < rows() && c < 0; ++k) {
        if (!live(k)) continue;
        for (std::size_t xi = 0; xi < cols_; ++xi)
          if (entry(k, static_cast<Letter>(xi)) < 0) {
            c = k;
            x = static_cast<Letter>(xi);
            break;
          }
      }
      if (c < 0) return;
      if (!room()) throw BudgetExceeded(max_cosets_);
      define(c, x);
    }
  }

  // One scan-only pass over every live coset; true if nothing changed.
  bool verify() {
    changed_ = false;
    for (int c = 0; c < rows(); ++c)
      for (const auto& r : relators_) {
        if (!live(c)) break;
        scan_only(c, r);
      }
    for (int c = 0; c < rows(); ++c)
      if (live(c))
        for (std::size_t x = 0; x < cols_; ++x)
          if (entry(c, static_cast<Letter>(x)) < 0) changed_ = true;
    return !changed_;
  }

  std::size_t cols_;
  std::vector<std::vector<Letter>> relators_;
  std::size_t max_cosets_;
  Strategy strategy_;
  std::vector<int> table_;
  std::vector<int> forward_;
  std::vector<int> queue_;
  std::vector<Deduction> deductions_;
  std::vector<std::vector<std::vector<Letter>>> conjugates_;
  std::size_t live_ = 0;
  int cursor_ = 0;
  bool changed_ = false;
};

}  // namespace

CosetTable coset_enumeration(const Presentation& p, const SubgroupSpec& s,
                             const EnumerationOptions& options) {
  for (const auto& w : s.generators)
    if (w.max_generator() >= static_cast<int>(p.num_generators()))
      throw ValidationError("subgroup generator uses an unknown generator");
  std::vector<std::vector<Letter>> relators;
  for (const auto& r : p.relators()) {
    auto letters = r.cyclically_reduced().letters();
    if (!letters.empty()) relators.push_back(std::move(letters));
  }
  std::vector<std::vector<Letter>> subgroup;
  if (s.normal_closure) {
    for (const auto& w : s.generators) {
      auto letters = w.cyclically_reduced().letters();
      if (!letters.empty()) relators.push_back(std::move(letters));
    }
  } else {
    for (const auto& w : s.generators) subgroup.push_back(w.letters());
  }
  Enumerator e(p.num_generators(), std::move(relators), options.max_cosets, options.strategy);
  CosetTable t(p.num_generators(), e.run(subgroup));
  if (t.size() > options.max_cosets) throw BudgetExceeded(options.max_cosets);
  return t;
}

CosetTable coset_enumeration(const Presentation& p, const SubgroupSpec& s, std::size_t max_cosets) {
  return coset_enumeration(p, s, EnumerationOptions{max_cosets, Strategy::HLT});
}

}  // namespace knotarith::fp
