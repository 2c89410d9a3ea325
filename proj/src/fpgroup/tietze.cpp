#include "knotarith/fpgroup/tietze.hpp"

#include "knotarith/homalg/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>
#include <stdexcept>

namespace knotarith::fp {

namespace {

std::size_t cost(std::size_t generators, const std::vector<Word>& relators) {
  std::size_t n = generators;
  for (const auto& r : relators) n += r.length();
  return n;
}

struct State {
  std::vector<std::string> names;
  std::vector<int> kept;
  std::vector<Word> relators;
  std::vector<Word> substitution;  // input generator -> word in current generators
  std::size_t moves = 0;
};

// Pass 1. Returns true if anything changed.
bool tidy(State& s) {
  std::vector<Word> out;
  std::set<std::vector<Letter>> seen;
  bool changed = false;
  for (const auto& r : s.relators) {
    Word c = r.cyclically_reduced();
    if (c != r) changed = true;
    if (c.empty() || !seen.insert(cyclic_key(c)).second) {
      changed = true;
      continue;
    }
    out.push_back(std::move(c));
  }
  s.relators = std::move(out);
  return changed;
}

// Occurrences (letters) of generator g in r.
std::size_t occurrences(const Word& r, int g) {
  std::size_t n = 0;
  for (const auto& syl : r.syllables())
    if (syl.gen == g) n += static_cast<std::size_t>(std::abs(syl.exp));
  return n;
}

struct Elimination {
  int gen;
  std::size_t relator;
  Word value;  // gen = value, a word avoiding gen
  std::size_t new_cost;
};

// Pass 2: pick the single elimination with the smallest resulting cost.
std::optional<Elimination> best_elimination(const State& s) {
  std::optional<Elimination> best;
  const std::size_t ng = s.names.size();
  std::size_t total = 0;
  std::vector<std::vector<std::size_t>> containing(ng);
  for (std::size_t rj = 0; rj < s.relators.size(); ++rj) {
    total += s.relators[rj].length();
    int last = -1;
    for (const auto& syl : s.relators[rj].syllables())
      if (syl.gen != last) {
        auto& list = containing[static_cast<std::size_t>(syl.gen)];
        if (list.empty() || list.back() != rj) list.push_back(rj);
        last = syl.gen;
      }
  }
  std::vector<Word> images;
  for (std::size_t h = 0; h < ng; ++h) images.push_back(Word::generator(static_cast<int>(h)));
  for (std::size_t ri = 0; ri < s.relators.size(); ++ri) {
    const Word& r = s.relators[ri];
    const auto& syl = r.syllables();
    for (std::size_t k = 0; k < syl.size(); ++k) {
      const int g = syl[k].gen;
      if (std::abs(syl[k].exp) != 1 || occurrences(r, g) != 1) continue;
      // r = A g^e B, so g^e = A^-1 B^-1 and g = (B A)^-e.
      Word a = Word::from_syllables(std::span<const Syllable>(syl.data(), k));
      Word b = Word::from_syllables(std::span<const Syllable>(syl.data() + k + 1, syl.size() - k - 1));
      Word value = (b * a).pow(-syl[k].exp);
      // Only relators containing g change length.
      std::size_t new_len = total - r.length();
      images[static_cast<std::size_t>(g)] = value;
      for (std::size_t rj : containing[static_cast<std::size_t>(g)]) {
        if (rj == ri) continue;
        new_len -= s.relators[rj].length();
        new_len += s.relators[rj].substitute(images).cyclically_reduced().length();
      }
      images[static_cast<std::size_t>(g)] = Word::generator(g);
      const std::size_t c = (ng - 1) + new_len;
      const auto better = [&](const Elimination& e) {
        if (c != e.new_cost) return c < e.new_cost;
        if (g != e.gen) return g > e.gen;  // prefer eliminating later generators
        return ri < e.relator;
      };
      if (!best || better(*best)) best = Elimination{g, ri, value, c};
    }
  }
  if (best && best->new_cost > ng + total) return std::nullopt;
  return best;
}

void apply_elimination(State& s, const Elimination& e) {
  const std::size_t ng = s.names.size();
  // Images of current generators in the reduced generating set.
  std::vector<Word> images(ng);
  for (std::size_t h = 0, out = 0; h < ng; ++h) {
    if (static_cast<int>(h) == e.gen) continue;
    images[h] = Word::generator(static_cast<int>(out++));
  }
  images[static_cast<std::size_t>(e.gen)] = e.value.substitute(images);
  std::vector<Word> relators;
  for (std::size_t rj = 0; rj < s.relators.size(); ++rj)
    if (rj != e.relator) relators.push_back(s.relators[rj].substitute(images));
  s.relators = std::move(relators);
  for (auto& w : s.substitution) w = w.substitute(images);
  s.names.erase(s.names.begin() + e.gen);
  s.kept.erase(s.kept.begin() + e.gen);
  ++s.moves;
}

std::vector<Letter> rotate(const std::vector<Letter>& w, std::size_t k) {
  std::vector<Letter> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(k + i) % w.size()];
  return out;
}

std::vector<Letter> invert(const std::vector<Letter>& w) {
  std::vector<Letter> out(w.rbegin(), w.rend());
  for (auto& x : out) x = inverse_letter(x);
  return out;
}

// Pass 3: if a cyclic conjugate of r (or r^-1) is p q with |p| > |q| and p
// occurs cyclically in s, replace that occurrence by q^-1. One replacement per call.
bool substring_pass(State& s) {
  for (std::size_t ri = 0; ri < s.relators.size(); ++ri) {
    const auto r = s.relators[ri].letters();
    const std::size_t L = r.size();
    if (L < 2) continue;
    for (std::size_t si = 0; si < s.relators.size(); ++si) {
      if (si == ri) continue;
      const auto target = s.relators[si].letters();
      const std::size_t T = target.size();
      if (T < L / 2 + 1) continue;
      for (const auto& base : {r, invert(r)})
        for (std::size_t rot = 0; rot < L; ++rot) {
          const auto rho = rotate(base, rot);
          for (std::size_t k = std::min(L, T); k > L / 2; --k) {
            // Piece p = rho[0, k), replacement q^-1 where q = rho[k, L).
            for (std::size_t start = 0; start < T; ++start) {
              bool match = true;
              for (std::size_t i = 0; i < k && match; ++i) match = target[(start + i) % T] == rho[i];
              if (!match) continue;
              std::vector<Letter> repl;
              for (std::size_t i = L; i > k; --i) repl.push_back(inverse_letter(rho[i - 1]));
              std::vector<Letter> rebuilt = repl;
              for (std::size_t i = k; i < T; ++i) rebuilt.push_back(target[(start + i) % T]);
              Word w = Word::from_letters(rebuilt).cyclically_reduced();
              if (w.length() >= T) continue;
              s.relators[si] = std::move(w);
              ++s.moves;
              return true;
            }
          }
        }
    }
  }
  return false;
}

}  // namespace

TietzeResult tietze_simplify_tracked(const Presentation& p, std::size_t budget) {
  State s;
  s.names = p.generators();
  s.relators = p.relators();
  for (std::size_t g = 0; g < p.num_generators(); ++g) {
    s.kept.push_back(static_cast<int>(g));
    s.substitution.push_back(Word::generator(static_cast<int>(g)));
  }
  const std::size_t initial_cost = cost(s.names.size(), s.relators);

  for (;;) {
    tidy(s);
    if (s.moves >= budget) break;
    if (auto e = best_elimination(s)) {
      apply_elimination(s, *e);
      continue;
    }
    if (substring_pass(s)) continue;
    break;
  }
  tidy(s);

  TietzeResult out;
  out.presentation = Presentation(s.names, s.relators, p.provenance());
  out.substitution = std::move(s.substitution);
  out.kept = std::move(s.kept);
  out.moves = s.moves;

  if (cost(out.presentation.num_generators(), out.presentation.relators()) > initial_cost)
    throw std::logic_error("tietze simplification increased the presentation size");
  if (homalg::abelian_invariants(out.presentation) != homalg::abelian_invariants(p))
    throw std::logic_error("tietze simplification changed the abelian invariants");
  return out;
}

Presentation tietze_simplify(const Presentation& p, std::size_t budget) {
  return tietze_simplify_tracked(p, budget).presentation;
}

}  // namespace knotarith::fp
