#include "knotarith/knots/table.hpp"

#include "knotarith/errors.hpp"
#include "knotarith/knot_table_data.hpp"

#include <fstream>
#include <sstream>

namespace knotarith::knots {

KnotTable::KnotTable(std::vector<KnotTableEntry> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    const KnotDiagram d = e.diagram();
    if (static_cast<int>(d.num_crossings()) != e.crossing_number)
      throw ValidationError("knot " + e.name + ": crossing count does not match its PD code");
  }
}

KnotTable KnotTable::parse(std::string_view text) {
  std::vector<KnotTableEntry> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    KnotTableEntry e;
    std::string prime;
    if (!(fields >> e.name >> e.crossing_number >> prime))
      throw ParseError("knot table entry needs name, crossings and prime flag", line_no, 1);
    if (prime == "true")
      e.prime = true;
    else if (prime == "false")
      e.prime = false;
    else
      throw ParseError("prime flag must be true or false", line_no, 1);
    std::getline(fields, e.pd_code);
    const auto start = e.pd_code.find_first_not_of(" \t");
    const auto end = e.pd_code.find_last_not_of(" \t\r");
    e.pd_code = start == std::string::npos ? "" : e.pd_code.substr(start, end - start + 1);
    for (const auto& other : entries)
      if (other.name == e.name) throw ParseError("duplicate knot '" + e.name + "'", line_no, 1);
    entries.push_back(std::move(e));
  }
  return KnotTable(std::move(entries));
}

KnotTable KnotTable::from_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot read knot table '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse(buf.str());
}

const KnotTable& KnotTable::builtin() {
  static const KnotTable table = parse(detail::kBuiltinKnotTable);
  return table;
}

const KnotTableEntry& KnotTable::lookup(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return e;
  throw UnknownKnot(std::string(name));
}

}  // namespace knotarith::knots
