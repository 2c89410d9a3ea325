#include "knotarith/knots/wirtinger.hpp"

#include "knotarith/homalg/abelian.hpp"

#include <stdexcept>

namespace knotarith::knots {

using fp::Word;

WirtingerData wirtinger(const KnotDiagram& d) {
  WirtingerData w;
  const std::size_t n = d.num_crossings();
  const std::size_t arcs = std::max<std::size_t>(n, 1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < arcs; ++i) {
    names.push_back(fp::default_generator_name(i));
    w.arc_of_generator.push_back(static_cast<int>(i));
  }
  std::vector<Word> relators;
  for (std::size_t ci = 0; ci < n; ++ci) {
    const auto& [i, j, k, l] = d.crossings()[ci];
    (void)l;
    const int in = d.arc_of_edge(i), out = d.arc_of_edge(k), over = d.arc_of_edge(j);
    // Positive: a_out = x^-1 a_in x; negative: a_out = x a_in x^-1.
    const CrossingRelation rel = d.sign(ci) > 0 ? CrossingRelation{in, over, out} : CrossingRelation{out, over, in};
    w.relations.push_back(rel);
    relators.push_back(Word::generator(rel.k) * Word::generator(rel.h) * Word::generator(rel.k, -1) *
                       Word::generator(rel.j, -1));
  }
  w.presentation = fp::Presentation(names, std::move(relators), "wirtinger");
  w.meridian = 0;
  w.longitude = longitude(d);
  w.crossing_signs = d.signs();

  const auto ab = homalg::abelian_invariants(w.presentation);
  if (ab.free_rank != 1 || !ab.torsion.empty())
    throw std::logic_error("Wirtinger presentation does not abelianize to Z");
  return w;
}

Word longitude(const KnotDiagram& d) {
  Word v;
  for (int e = 1; e <= d.edge_count(); ++e) {
    const int c = d.under_crossing_ending(e);
    if (c < 0) continue;
    const int over = d.arc_of_edge(d.crossings()[static_cast<std::size_t>(c)][1]);
    v *= Word::generator(over, d.sign(static_cast<std::size_t>(c)));
  }
  return v * Word::generator(0, -d.writhe());
}

long long winding_number(const Word& w) { return w.exponent_sum(); }

}  // namespace knotarith::knots
