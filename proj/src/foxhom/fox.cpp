#include "knotarith/foxhom/fox.hpp"

#include <algorithm>
#include <cstdlib>

namespace knotarith::fox {

std::vector<GroupRingElement> fox_gradient(const fp::Word& w, std::size_t num_generators) {
  std::size_t n = num_generators;
  if (!w.empty()) n = std::max(n, static_cast<std::size_t>(w.max_generator()) + 1);
  std::vector<GroupRingElement> out(n);
  fp::Word prefix;
  for (const fp::Letter x : w.letters()) {
    const int g = fp::generator_of(x);
    if (fp::is_inverse(x)) {
      prefix *= fp::Word::generator(g, -1);
      out[static_cast<std::size_t>(g)] -= GroupRingElement::word(prefix);
    } else {
      out[static_cast<std::size_t>(g)] += GroupRingElement::word(prefix);
      prefix *= fp::Word::generator(g);
    }
  }
  out.resize(num_generators);
  return out;
}

GroupRingElement fox_derivative(const fp::Word& w, int g) {
  if (g < 0) return {};
  const auto grad = fox_gradient(w, static_cast<std::size_t>(g) + 1);
  return grad[static_cast<std::size_t>(g)];
}

GroupRingMatrix fox_jacobian(std::span<const fp::Word> words, std::size_t num_generators) {
  GroupRingMatrix m(words.size(), num_generators);
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto grad = fox_gradient(words[i], num_generators);
    for (std::size_t g = 0; g < num_generators; ++g) m(i, g) = grad[g];
  }
  return m;
}

bool fundamental_identity_check(const fp::Word& w, std::size_t num_generators) {
  if (!w.empty() && static_cast<std::size_t>(w.max_generator()) >= num_generators) return false;
  const auto grad = fox_gradient(w, num_generators);
  GroupRingElement lhs;
  for (std::size_t g = 0; g < num_generators; ++g)
    lhs += grad[g] * (GroupRingElement::word(fp::Word::generator(static_cast<int>(g))) - 1);
  return lhs == GroupRingElement::word(w) - 1;
}

}  // namespace knotarith::fox
