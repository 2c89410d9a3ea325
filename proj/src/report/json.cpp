#include "knotarith/report/json.hpp"

#include "knotarith/homalg/abelian.hpp"

#include <limits>
#include <sstream>

namespace knotarith::report {

namespace {

Json constraint_json(const fox::Constraint& c) {
  return {{"status", fox::to_string(c.status)}, {"detail", c.detail}};
}

std::string words_text(const fp::Word& w, const std::vector<std::string>& names) { return fp::format_word(w, names); }

bool is_scalar_array(const Json& j) {
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

void write_text(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const auto inline_value = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !is_scalar_array(value) && !value.empty())) {
        out << pad << key << ":\n";
        write_text(out, value, indent + 2);
      } else if (value.is_array()) {
        out << pad << key << ": " << value.dump() << "\n";
      } else {
        out << pad << key << ": " << inline_value(value) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_object()) {
        out << pad << "-\n";
        write_text(out, value, indent + 2);
      } else {
        out << pad << "- " << (value.is_array() ? value.dump() : inline_value(value)) << "\n";
      }
    }
  } else {
    out << pad << inline_value(j) << "\n";
  }
}

}  // namespace

Json to_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

Json to_json(const homalg::AbelianInvariants& a) {
  Json out = Json::array();
  for (const auto& f : a.encoded()) out.push_back(to_json(f));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const covers::GroupOrder& o) {
  if (o.is_finite()) return to_json(o.value);
  return o.to_string();
}

Json presentation_json(const std::string& name, const knots::WirtingerData& w) {
  const auto& names = w.presentation.generators();
  Json relators = Json::array();
  for (const auto& r : w.presentation.relators()) relators.push_back(words_text(r, names));
  const auto ab = homalg::abelian_invariants(w.presentation);
  return {{"knot", name},
          {"generators", names},
          {"relators", relators},
          {"meridian", names.empty() ? "" : names[static_cast<std::size_t>(w.meridian)]},
          {"longitude", words_text(w.longitude, names)},
          {"abelianization", to_json(ab)},
          {"abelianization_text", ab.to_string()}};
}

Json to_json(const covers::CoverReport& r) {
  Json reps = Json::array();
  const std::vector<std::string> parent_names;  // Wirtinger generators carry the default names
  for (const auto& w : r.meridian_power_reps) reps.push_back(words_text(w, parent_names));
  Json u_relators = Json::array();
  for (const auto& w : r.u_presentation.relators()) u_relators.push_back(words_text(w, r.u_presentation.generators()));
  Json b_relators = Json::array();
  for (const auto& w : r.branched_presentation.relators())
    b_relators.push_back(words_text(w, r.branched_presentation.generators()));

  Json out{{"knot", r.knot},
           {"kind", r.descriptor.kind == covers::CoverDescriptor::Kind::Cyclic ? "cyclic" : "permutation"},
           {"n", r.descriptor.n},
           {"index", r.index},
           {"e", r.lattice.e},
           {"f", r.lattice.f},
           {"r", r.lattice.r},
           {"p", r.lattice.p},
           {"q", r.lattice.q},
           {"u_generators", r.u_presentation.generators()},
           {"u_relators", u_relators},
           {"u_abelian", to_json(r.u_abelian)},
           {"meridian_power_reps", reps},
           {"g_mu_index", to_json(r.g_mu_index)},
           {"mu_index", to_json(r.mu_index)},
           {"branched_generators", r.branched_presentation.generators()},
           {"branched_relators", b_relators},
           {"branched_order", to_json(r.branched_order)},
           {"branched_abelian", to_json(r.branched_abelian)},
           {"theorem_b", covers::to_string(r.theorem_b)},
           {"theorem_b_implied", "conditions (2), (3), (5) follow from (1) <=> (4); not independently checked"},
           {"orders_consistent", r.orders_consistent}};
  if (r.q8)
    out["q8"] = {{"order_8", r.q8->order_8},
                 {"exponent_4", r.q8->exponent_4},
                 {"unique_involution", r.q8->unique_involution},
                 {"abelianization_2_2", r.q8->abelianization_2_2},
                 {"holds", r.q8->holds()}};
  if (r.alexander_prediction) {
    out["alexander_prediction"] = to_json(*r.alexander_prediction);
    out["alexander_consistent"] = r.alexander_consistent.value_or(false);
  }
  out["conjecture_d"] = to_json(r.conjecture_d);
  return out;
}

Json to_json(const covers::ConjectureDReport& r) {
  Json groups = Json::array();
  for (std::size_t i = 0; i < r.invariants.size(); ++i)
    groups.push_back({{"label", covers::conjecture_d_labels()[i]}, {"group", to_json(r.invariants[i])}});
  Json exact = Json::array();
  for (const auto& v : r.exactness) exact.push_back(v.exact());
  return {{"components", r.components},
          {"longitude_in_u", r.longitude_in_u},
          {"longitude_null_homologous", r.longitude_null_homologous},
          {"hypotheses_hold", r.hypotheses_hold()},
          {"groups", groups},
          {"exact_at", exact},
          {"exact", r.exact()}};
}

Json to_json(const fox::NineTermReport& r) {
  Json groups = Json::array();
  for (std::size_t i = 0; i < r.groups.size(); ++i)
    groups.push_back({{"label", fox::nine_term_labels()[i]}, {"group", to_json(r.groups[i])}});
  Json verdicts = Json::object();
  for (const auto& c : r.constraints) verdicts[c.name] = constraint_json(c);
  Json uct = Json::array();
  for (const auto& c : r.uct) uct.push_back({{"check", c.name}, {"status", fox::to_string(c.status)}});
  Json out{{"kind", r.descriptor.kind == covers::CoverDescriptor::Kind::Cyclic ? "cyclic" : "permutation"},
           {"n", r.descriptor.n},
           {"index", r.index},
           {"e", r.lattice.e},
           {"f", r.lattice.f},
           {"r", r.lattice.r},
           {"groups", groups},
           {"mu0", to_json(r.mu0)},
           {"mu1", to_json(r.mu1)},
           {"nu1", to_json(r.nu1)},
           {"duality_sign", r.duality_sign},
           {"verdicts", verdicts},
           {"uct", uct},
           {"rank_balance", r.rank_balance()},
           {"all_satisfied", r.all_satisfied()},
           {"notes", r.notes}};
  if (r.full_exactness) {
    Json exact = Json::array();
    for (const auto& v : *r.full_exactness) exact.push_back(v.exact());
    out["full_exactness"] = exact;
  }
  return out;
}

Json to_json(const fox::ZetaVerdict& v) {
  Json checks = Json::array();
  for (const auto& c : v.checks) checks.push_back({{"check", c.name}, {"passed", c.passed}});
  return {{"checks", checks}, {"all_passed", v.all_passed()}};
}

Json to_json(const arith::SplittingReport& r) {
  return {{"d", r.d}, {"p", r.p}, {"type", arith::to_string(r.type)}, {"e", r.e}, {"f", r.f}, {"r", r.r}};
}

Json to_json(const arith::GaussSumReport& r) {
  return {{"q", r.q},
          {"g", r.g.to_string()},
          {"g_squared", r.g_squared.to_string()},
          {"expected", to_json(r.expected)},
          {"holds", r.holds()}};
}

std::string to_text(const Json& j) {
  std::ostringstream out;
  write_text(out, j, 0);
  return out.str();
}

}  // namespace knotarith::report
