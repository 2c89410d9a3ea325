#include "knotarith/knots/diagram.hpp"

#include "knotarith/errors.hpp"

#include <cctype>
#include <numeric>

namespace knotarith::knots {

namespace {

int next_edge(int e, int m) { return e % m + 1; }

}  // namespace

KnotDiagram::KnotDiagram(std::vector<Crossing> crossings) : crossings_(std::move(crossings)) {
  const int n = static_cast<int>(crossings_.size());
  const int m = 2 * n;
  std::vector<int> seen(static_cast<std::size_t>(m), 0);
  for (const auto& c : crossings_)
    for (int e : c) {
      if (e < 1 || e > m)
        throw EdgeCountMismatch("edge label " + std::to_string(e) + " outside 1.." + std::to_string(m));
      ++seen[static_cast<std::size_t>(e - 1)];
    }
  for (int e = 1; e <= m; ++e)
    if (seen[static_cast<std::size_t>(e - 1)] != 2)
      throw EdgeCountMismatch("edge label " + std::to_string(e) + " appears " +
                              std::to_string(seen[static_cast<std::size_t>(e - 1)]) + " times");

  // Each edge must enter exactly one crossing and leave exactly one.
  std::vector<int> enters(static_cast<std::size_t>(m), 0), leaves(static_cast<std::size_t>(m), 0);
  ends_under_.assign(static_cast<std::size_t>(m), -1);
  for (int ci = 0; ci < n; ++ci) {
    const auto& [i, j, k, l] = crossings_[static_cast<std::size_t>(ci)];
    if (k != next_edge(i, m))
      throw MultiComponent("crossing " + std::to_string(ci + 1) + ": under-strand edges are not consecutive");
    int sign = 0;
    if (j == next_edge(l, m))
      sign = 1;
    else if (l == next_edge(j, m))
      sign = -1;
    else
      throw MultiComponent("crossing " + std::to_string(ci + 1) + ": over-strand edges are not consecutive");
    signs_.push_back(sign);
    const int over_in = sign > 0 ? l : j, over_out = sign > 0 ? j : l;
    ++enters[static_cast<std::size_t>(i - 1)];
    ++enters[static_cast<std::size_t>(over_in - 1)];
    ++leaves[static_cast<std::size_t>(k - 1)];
    ++leaves[static_cast<std::size_t>(over_out - 1)];
    ends_under_[static_cast<std::size_t>(i - 1)] = ci;
  }
  for (int e = 1; e <= m; ++e)
    if (enters[static_cast<std::size_t>(e - 1)] != 1 || leaves[static_cast<std::size_t>(e - 1)] != 1)
      throw MultiComponent("edge " + std::to_string(e) + " is not traversed exactly once");

  arc_of_edge_.assign(static_cast<std::size_t>(m), 0);
  int arc = 0;
  for (int e = 1; e <= m; ++e) {
    arc_of_edge_[static_cast<std::size_t>(e - 1)] = n == 0 ? 0 : arc % n;
    if (ends_under_[static_cast<std::size_t>(e - 1)] >= 0) ++arc;
  }
}

int KnotDiagram::writhe() const noexcept { return std::accumulate(signs_.begin(), signs_.end(), 0); }

std::string KnotDiagram::to_string() const {
  std::string out;
  for (const auto& c : crossings_) {
    if (!out.empty()) out += ' ';
    out += "X[" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) + "," +
           std::to_string(c[3]) + "]";
  }
  return out;
}

namespace {

class PdParser {
 public:
  explicit PdParser(std::string_view text) : text_(text) {}

  KnotDiagram parse() {
    std::vector<Crossing> crossings;
    skip();
    bool wrapped = false;
    if (text_.substr(pos_, 3) == "PD[") {
      pos_ += 3;
      wrapped = true;
    }
    for (;;) {
      skip();
      if (pos_ >= text_.size() || (wrapped && text_[pos_] == ']')) break;
      if (!crossings.empty() && text_[pos_] == ',') {
        ++pos_;
        skip();
      }
      crossings.push_back(crossing());
    }
    if (wrapped) {
      expect(']');
      skip();
    }
    if (pos_ < text_.size()) fail("trailing input");
    return KnotDiagram(std::move(crossings));
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

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int number() {
    skip();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected edge label");
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1'000'000) fail("edge label too large");
    }
    return static_cast<int>(v);
  }

  Crossing crossing() {
    expect('X');
    expect('[');
    Crossing c{};
    for (int i = 0; i < 4; ++i) {
      if (i) expect(',');
      c[static_cast<std::size_t>(i)] = number();
    }
    expect(']');
    return c;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

KnotDiagram parse_pd(std::string_view text) { return PdParser(text).parse(); }

}  // namespace knotarith::knots
