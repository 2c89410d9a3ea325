#include "knotarith/fpgroup/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace knotarith::fp {

Word free_reduce(std::span<const Syllable> syllables) { return Word::from_syllables(syllables); }

Word Word::generator(int gen, int exp) {
  if (gen < 0) throw std::invalid_argument("negative generator index");
  Word w;
  if (exp != 0) w.syllables_.push_back({gen, exp});
  return w;
}

Word Word::from_syllables(std::span<const Syllable> syllables) {
  Word w;
  for (const Syllable& s : syllables) {
    if (s.exp == 0) continue;
    if (s.gen < 0) throw std::invalid_argument("negative generator index");
    auto& out = w.syllables_;
    if (!out.empty() && out.back().gen == s.gen) {
      out.back().exp += s.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return w;
}

Word Word::from_letters(std::span<const Letter> letters) {
  std::vector<Syllable> s;
  s.reserve(letters.size());
  for (Letter x : letters) s.push_back({generator_of(x), is_inverse(x) ? -1 : 1});
  return from_syllables(s);
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(length());
  for (const Syllable& s : syllables_) {
    const Letter x = letter_of(s.gen, s.exp < 0);
    for (int i = 0; i < std::abs(s.exp); ++i) out.push_back(x);
  }
  return out;
}

std::size_t Word::length() const noexcept {
  std::size_t n = 0;
  for (const Syllable& s : syllables_) n += static_cast<std::size_t>(std::abs(s.exp));
  return n;
}

int Word::max_generator() const noexcept {
  int m = -1;
  for (const Syllable& s : syllables_) m = std::max(m, s.gen);
  return m;
}

long long Word::exponent_sum() const noexcept {
  long long t = 0;
  for (const Syllable& s : syllables_) t += s.exp;
  return t;
}

long long Word::exponent_sum(int gen) const noexcept {
  long long t = 0;
  for (const Syllable& s : syllables_)
    if (s.gen == gen) t += s.exp;
  return t;
}

Word Word::inverse() const {
  Word w;
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    w.syllables_.push_back({it->gen, -it->exp});
  return w;
}

Word Word::pow(long long n) const {
  Word base = n < 0 ? inverse() : *this;
  Word out;
  for (long long k = n < 0 ? -n : n; k > 0; --k) out *= base;
  return out;
}

Word Word::cyclically_reduced() const {
  std::vector<Syllable> s = syllables_;
  std::size_t lo = 0, hi = s.size();
  while (hi - lo >= 2 && s[lo].gen == s[hi - 1].gen) {
    const int merged = s[lo].exp + s[hi - 1].exp;
    if (merged == 0) {
      ++lo;
      --hi;
      continue;
    }
    // Rotate the tail syllable to the front: g^x ... g^y ~ g^(x+y) ...
    s[lo].exp = merged;
    --hi;
    break;
  }
  Word w;
  w.syllables_.assign(s.begin() + static_cast<std::ptrdiff_t>(lo),
                      s.begin() + static_cast<std::ptrdiff_t>(hi));
  return w;
}

Word Word::substitute(std::span<const Word> images) const {
  Word out;
  for (const Syllable& s : syllables_) {
    if (static_cast<std::size_t>(s.gen) >= images.size())
      throw std::out_of_range("substitution has no image for generator");
    out *= images[static_cast<std::size_t>(s.gen)].pow(s.exp);
  }
  return out;
}

Word& Word::operator*=(const Word& rhs) {
  for (const Syllable& s : rhs.syllables_) {
    if (!syllables_.empty() && syllables_.back().gen == s.gen) {
      syllables_.back().exp += s.exp;
      if (syllables_.back().exp == 0) syllables_.pop_back();
    } else {
      syllables_.push_back(s);
    }
  }
  return *this;
}

Word operator*(const Word& lhs, const Word& rhs) {
  Word out = lhs;
  out *= rhs;
  return out;
}

Word commutator(const Word& v, const Word& w) { return v * w * v.inverse() * w.inverse(); }

std::vector<Letter> cyclic_key(const Word& w) {
  const auto forward = w.cyclically_reduced().letters();
  const auto backward = w.cyclically_reduced().inverse().letters();
  std::vector<Letter> best;
  bool have = false;
  for (const auto* seq : {&forward, &backward}) {
    const std::size_t n = seq->size();
    for (std::size_t r = 0; r < std::max<std::size_t>(n, 1); ++r) {
      std::vector<Letter> rot(n);
      for (std::size_t i = 0; i < n; ++i) rot[i] = (*seq)[(r + i) % n];
      if (!have || rot < best) {
        best = std::move(rot);
        have = true;
      }
    }
  }
  return best;
}

std::string default_generator_name(std::size_t index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  return "x" + std::to_string(index + 1);
}

std::string format_word(const Word& w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::string out;
  for (const Syllable& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += static_cast<std::size_t>(s.gen) < names.size() ? names[static_cast<std::size_t>(s.gen)]
                                                          : default_generator_name(s.gen);
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

}  // namespace knotarith::fp
