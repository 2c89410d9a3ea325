#include "knotarith/fpgroup/presentation.hpp"

#include "knotarith/errors.hpp"

#include <cctype>
#include <optional>
#include <set>

namespace knotarith::fp {

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators,
                           std::string provenance)
    : generators_(std::move(generators)), provenance_(std::move(provenance)) {
  std::set<std::string> seen;
  for (const auto& g : generators_)
    if (!seen.insert(g).second) throw ValidationError("duplicate generator name '" + g + "'");
  relators_.reserve(relators.size());
  for (auto& r : relators) {
    if (r.max_generator() >= static_cast<int>(generators_.size()))
      throw ValidationError("relator uses a generator index out of range");
    relators_.push_back(std::move(r));
  }
}

std::size_t Presentation::total_relator_length() const noexcept {
  std::size_t n = 0;
  for (const auto& r : relators_) n += r.length();
  return n;
}

Presentation Presentation::with_relators(std::vector<Word> relators, std::string provenance) const {
  return Presentation(generators_, std::move(relators), std::move(provenance));
}

std::string Presentation::to_string() const {
  std::string out = "< ";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += generators_[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    if (i) out += ", ";
    out += format_word(relators_[i], generators_);
  }
  out += relators_.empty() ? ">" : " >";
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation presentation() {
    expect('<');
    std::vector<std::string> gens;
    skip_space();
    if (peek() != '|') {
      gens.push_back(identifier());
      while (accept(',')) gens.push_back(identifier());
    }
    expect('|');
    generators_ = gens;
    std::set<std::string> seen;
    for (const auto& g : gens)
      if (!seen.insert(g).second) fail("duplicate generator '" + g + "'");
    std::vector<Word> relators;
    skip_space();
    if (peek() != '>') {
      relation(relators);
      while (accept(',')) relation(relators);
    }
    expect('>');
    skip_space();
    if (pos_ < text_.size()) fail("trailing input");
    return Presentation(gens, std::move(relators));
  }

  Word standalone_word(const std::vector<std::string>& gens) {
    generators_ = gens;
    Word w = word();
    skip_space();
    if (pos_ < text_.size()) fail("trailing input");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
  }

  std::string identifier() {
    skip_space();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected generator name");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void relation(std::vector<Word>& out) {
    Word lhs = word();
    bool chained = false;
    while (accept('=')) {
      Word rhs = word();
      out.push_back(lhs * rhs.inverse());
      lhs = std::move(rhs);
      chained = true;
    }
    if (!chained) out.push_back(std::move(lhs));
  }

  Word word() {
    Word w;
    bool any = false;
    for (;;) {
      const char c = peek();
      if (c == '*') {
        if (!any) fail("unexpected '*'");
        ++pos_;
        continue;
      }
      if (!(ident_start(c) || c == '(' || c == '1')) break;
      w *= factor();
      any = true;
    }
    if (!any) fail("expected word");
    return w;
  }

  Word factor() {
    Word base = atom();
    if (accept('^')) {
      skip_space();
      bool neg = false;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
        neg = text_[pos_] == '-';
        ++pos_;
      }
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected integer exponent");
      long long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + (text_[pos_] - '0');
        if (e > 1'000'000) fail("exponent too large");
        ++pos_;
      }
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  Word atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Word w = word();
      expect(')');
      return w;
    }
    if (c == '1') {
      ++pos_;
      return Word();
    }
    const std::size_t start = pos_;
    const std::string name = identifier();
    if (auto g = lookup(name)) return Word::generator(*g);
    // Juxtaposed single-letter generators such as "aba".
    Word w;
    for (std::size_t i = 0; i < name.size(); ++i) {
      auto g = lookup(std::string(1, name[i]));
      if (!g) {
        pos_ = start + i;
        fail("unknown generator '" + name + "'");
      }
      w *= Word::generator(*g);
    }
    return w;
  }

  std::optional<int> lookup(const std::string& name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
      if (generators_[i] == name) return static_cast<int>(i);
    return std::nullopt;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> generators_;
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return Parser(text).presentation(); }

Word parse_word(std::string_view text, const std::vector<std::string>& generators) {
  return Parser(text).standalone_word(generators);
}

}  // namespace knotarith::fp
