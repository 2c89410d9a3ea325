#pragma once

#include "knotarith/fpgroup/word.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace knotarith::fp {

/// Finitely presented group <generators | relators>.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generators, std::vector<Word> relators,
               std::string provenance = {});

  std::size_t num_generators() const noexcept { return generators_.size(); }
  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  const std::string& provenance() const noexcept { return provenance_; }

  std::size_t total_relator_length() const noexcept;

  Presentation with_relators(std::vector<Word> relators, std::string provenance) const;

  /// Text form `< a, b | a b a^-1 ... >` accepted by parse_presentation.
  std::string to_string() const;

  bool operator==(const Presentation&) const = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
  std::string provenance_;
};

/// Parse `< a, b | a b a = b a b , ... >`. Juxtaposition is product, `^` takes an
/// optionally signed integer, `=` turns lhs = rhs into lhs rhs^-1 (chains allowed),
/// `1` denotes the identity. Throws ParseError with line/column.
Presentation parse_presentation(std::string_view text);

/// Parse a word over known generator names (same grammar as a relator side).
Word parse_word(std::string_view text, const std::vector<std::string>& generators);

}  // namespace knotarith::fp
