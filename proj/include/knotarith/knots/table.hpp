#pragma once

#include "knotarith/knots/diagram.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace knotarith::knots {

struct KnotTableEntry {
  std::string name;
  std::string pd_code;
  int crossing_number = 0;
  bool prime = true;

  KnotDiagram diagram() const { return parse_pd(pd_code); }
};

/// Lines "name crossings prime pdcode"; blank lines and '#' comments are skipped.
/// Every entry is validated.
class KnotTable {
 public:
  KnotTable() = default;
  explicit KnotTable(std::vector<KnotTableEntry> entries);

  static KnotTable parse(std::string_view text);
  static KnotTable from_file(const std::string& path);
  /// Table compiled into the library.
  static const KnotTable& builtin();

  const std::vector<KnotTableEntry>& entries() const noexcept { return entries_; }
  /// Throws UnknownKnot.
  const KnotTableEntry& lookup(std::string_view name) const;

 private:
  std::vector<KnotTableEntry> entries_;
};

}  // namespace knotarith::knots
