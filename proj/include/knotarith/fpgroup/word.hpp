#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace knotarith::fp {

/// A power g^exp of a single free generator.
struct Syllable {
  int gen = 0;
  int exp = 0;
  auto operator<=>(const Syllable&) const = default;
};

/// Letters index the columns of a coset table: generator g is 2g, its inverse 2g+1.
using Letter = int;

constexpr Letter letter_of(int gen, bool inverse) { return 2 * gen + (inverse ? 1 : 0); }
constexpr Letter inverse_letter(Letter x) { return x ^ 1; }
constexpr int generator_of(Letter x) { return x >> 1; }
constexpr bool is_inverse(Letter x) { return (x & 1) != 0; }

/// Element of a free group, always stored freely reduced.
class Word {
 public:
  Word() = default;

  static Word generator(int gen, int exp = 1);
  static Word from_syllables(std::span<const Syllable> syllables);
  static Word from_letters(std::span<const Letter> letters);

  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  std::vector<Letter> letters() const;

  bool empty() const noexcept { return syllables_.empty(); }
  std::size_t length() const noexcept;
  int max_generator() const noexcept;

  long long exponent_sum() const noexcept;
  long long exponent_sum(int gen) const noexcept;

  Word inverse() const;
  Word pow(long long n) const;

  /// Cyclically reduced form (conjugate of this word).
  Word cyclically_reduced() const;

  /// Replace each generator g by images[g]; free reduction is applied.
  Word substitute(std::span<const Word> images) const;

  friend Word operator*(const Word& lhs, const Word& rhs);
  Word& operator*=(const Word& rhs);

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Syllable> syllables_;
};

/// Unique freely reduced form of an arbitrary syllable sequence.
Word free_reduce(std::span<const Syllable> syllables);

/// Commutator v w v^-1 w^-1.
Word commutator(const Word& v, const Word& w);

/// Key identifying a relator up to cyclic permutation and inversion.
std::vector<Letter> cyclic_key(const Word& w);

/// Default generator naming: a, b, ..., z, then x27, x28, ...
std::string default_generator_name(std::size_t index);

std::string format_word(const Word& w, std::span<const std::string> names);

}  // namespace knotarith::fp
