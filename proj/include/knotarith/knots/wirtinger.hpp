#pragma once

#include "knotarith/fpgroup/presentation.hpp"
#include "knotarith/knots/diagram.hpp"

#include <vector>

namespace knotarith::knots {

/// Crossing relation a_j = a_k a_h a_k^-1 between arc generators.
struct CrossingRelation {
  int j = 0;
  int k = 0;
  int h = 0;
};

struct WirtingerData {
  /// One generator per arc, one relator x a_h x^-1 a_j^-1 per crossing.
  fp::Presentation presentation;
  /// Generator i is arc i.
  std::vector<int> arc_of_generator;
  std::vector<CrossingRelation> relations;
  int meridian = 0;
  fp::Word longitude;
  std::vector<int> crossing_signs;
};

WirtingerData wirtinger(const KnotDiagram& d);

/// Product of the over-arc generators met while traversing from edge 1, each
/// raised to the crossing sign, times meridian^-writhe.
fp::Word longitude(const KnotDiagram& d);

/// Total exponent sum.
long long winding_number(const fp::Word& w);

}  // namespace knotarith::knots
