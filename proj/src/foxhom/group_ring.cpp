#include "knotarith/foxhom/group_ring.hpp"

#include <sstream>

namespace knotarith::fox {

namespace {

// "c*w" pieces joined with signs; "1" stands for the empty word.
template <typename Terms, typename Format>
std::string format_sum(const Terms& terms, Format format_key) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    const std::string body = format_key(key);
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (body == "1") {
      out << a.str();
    } else {
      if (a != 1) out << a.str() << "*";
      out << body;
    }
  }
  return out.str();
}

}  // namespace

GroupRingElement::GroupRingElement(long long c) {
  if (c != 0) terms_.emplace(fp::Word(), BigInt(c));
}

GroupRingElement GroupRingElement::word(const fp::Word& w, const BigInt& coefficient) {
  GroupRingElement x;
  x.add(w, coefficient);
  return x;
}

void GroupRingElement::add(const fp::Word& w, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement GroupRingElement::antipode() const {
  GroupRingElement x;
  for (const auto& [w, c] : terms_) x.add(w.inverse(), c);
  return x;
}

BigInt GroupRingElement::augmentation() const {
  BigInt s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& x) {
  for (const auto& [w, c] : x.terms_) add(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& x) {
  for (const auto& [w, c] : x.terms_) add(w, -c);
  return *this;
}

GroupRingElement operator-(const GroupRingElement& a) {
  GroupRingElement x;
  for (const auto& [w, c] : a.terms_) x.terms_.emplace(w, -c);
  return x;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement x;
  for (const auto& [v, c] : a.terms_)
    for (const auto& [w, d] : b.terms_) x.add(v * w, c * d);
  return x;
}

std::string GroupRingElement::to_string(std::span<const std::string> names) const {
  return format_sum(terms_, [&](const fp::Word& w) { return w.empty() ? std::string("1") : fp::format_word(w, names); });
}

LaurentBivar::LaurentBivar(long long c) {
  if (c != 0) terms_.emplace(std::pair<long long, long long>{0, 0}, BigInt(c));
}

LaurentBivar LaurentBivar::monomial(long long i, long long j, const BigInt& coefficient) {
  LaurentBivar x;
  x.add({i, j}, coefficient);
  return x;
}

void LaurentBivar::add(std::pair<long long, long long> e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentBivar LaurentBivar::antipode() const {
  LaurentBivar x;
  for (const auto& [e, c] : terms_) x.add({-e.first, -e.second}, c);
  return x;
}

BigInt LaurentBivar::augmentation() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool LaurentBivar::is_unit() const noexcept {
  return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

LaurentBivar& LaurentBivar::operator+=(const LaurentBivar& x) {
  for (const auto& [e, c] : x.terms_) add(e, c);
  return *this;
}

LaurentBivar& LaurentBivar::operator-=(const LaurentBivar& x) {
  for (const auto& [e, c] : x.terms_) add(e, -c);
  return *this;
}

LaurentBivar operator-(const LaurentBivar& a) {
  LaurentBivar x;
  for (const auto& [e, c] : a.terms_) x.terms_.emplace(e, -c);
  return x;
}

LaurentBivar operator*(const LaurentBivar& a, const LaurentBivar& b) {
  LaurentBivar x;
  for (const auto& [e, c] : a.terms_)
    for (const auto& [f, d] : b.terms_) x.add({e.first + f.first, e.second + f.second}, c * d);
  return x;
}

std::string LaurentBivar::to_string() const {
  const auto power = [](const char* v, long long k) -> std::string {
    if (k == 0) return {};
    if (k == 1) return v;
    return std::string(v) + "^" + std::to_string(k);
  };
  return format_sum(terms_, [&](const std::pair<long long, long long>& e) {
    std::string s = power("m", e.first);
    const std::string t = power("l", e.second);
    if (!s.empty() && !t.empty()) s += "*";
    s += t;
    return s.empty() ? std::string("1") : s;
  });
}

}  // namespace knotarith::fox
