#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace knotarith::knots {

/// Crossing X[i,j,k,l]: edge labels counterclockwise from the incoming
/// under-strand i; the under-strand leaves along k.
using Crossing = std::array<int, 4>;

/// Planar diagram of a knot. Edges are labelled 1..2n consecutively along
/// the orientation; every label appears in exactly two crossings.
class KnotDiagram {
 public:
  KnotDiagram() = default;
  /// Validates; throws EdgeCountMismatch or MultiComponent.
  explicit KnotDiagram(std::vector<Crossing> crossings);

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  std::size_t num_crossings() const noexcept { return crossings_.size(); }
  int edge_count() const noexcept { return static_cast<int>(2 * crossings_.size()); }

  /// +1 when the over-strand runs l -> j, -1 when it runs j -> l.
  int sign(std::size_t crossing) const { return signs_[crossing]; }
  const std::vector<int>& signs() const noexcept { return signs_; }
  int writhe() const noexcept;

  /// Arc containing an edge. Edge 1 lies on arc 0 and a new arc starts after
  /// each passage under a crossing.
  int arc_of_edge(int edge) const { return arc_of_edge_[static_cast<std::size_t>(edge - 1)]; }
  /// Crossing at which an edge ends as the incoming under-strand, or -1.
  int under_crossing_ending(int edge) const { return ends_under_[static_cast<std::size_t>(edge - 1)]; }

  /// "X[1,4,2,5] X[3,6,4,1] ..." (empty for the unknot).
  std::string to_string() const;

  bool operator==(const KnotDiagram& other) const { return crossings_ == other.crossings_; }

 private:
  std::vector<Crossing> crossings_;
  std::vector<int> signs_;
  std::vector<int> arc_of_edge_;
  std::vector<int> ends_under_;
};

/// Parse "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"; an optional PD[...] wrapper and
/// commas between crossings are accepted. Throws ParseError on malformed text.
KnotDiagram parse_pd(std::string_view text);

}  // namespace knotarith::knots
