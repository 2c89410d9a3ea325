#include "knotarith/foxhom/resolutions.hpp"

#include "knotarith/foxhom/fox.hpp"

namespace knotarith::fox {

namespace {

LaurentBivar mono(long long i, long long j) { return LaurentBivar::monomial(i, j); }

}  // namespace

LaurentComplex peripheral_resolution() {
  const LaurentBivar m = LaurentBivar::m(), l = LaurentBivar::l();
  LaurentComplex q;
  q.ranks = {1, 2, 1};
  q.basis = {{"0"}, {"m", "l"}, {"r"}};
  q.boundaries = {LaurentMatrix{{m - 1}, {l - 1}}, LaurentMatrix{{1 - l, m - 1}}};
  return q;
}

LaurentComplex peripheral_dual_explicit() {
  LaurentComplex q;
  q.ranks = {1, 2, 1};
  q.basis = {{"r*"}, {"m*", "l*"}, {"0*"}};
  q.boundaries = {LaurentMatrix{{1 - mono(0, -1)}, {mono(-1, 0) - 1}},
                  LaurentMatrix{{mono(-1, 0) - 1, mono(0, -1) - 1}}};
  return q;
}

GroupRingComplex presentation_resolution(const knots::WirtingerData& w) {
  const fp::Presentation& p = w.presentation;
  const std::size_t d = p.num_generators();
  if (d == 0) throw NotWirtinger("a Wirtinger presentation has at least one generator");
  const bool unknot = d == 1 && w.relations.empty() && p.relators().empty();
  if (!unknot && (w.relations.size() != d || p.relators().size() != d))
    throw NotWirtinger("a Wirtinger presentation has one relation per generator");

  std::vector<fp::Word> words;
  for (std::size_t i = 0; i < w.relations.size(); ++i) {
    const auto& r = w.relations[i];
    for (int g : {r.j, r.k, r.h})
      if (g < 0 || static_cast<std::size_t>(g) >= d) throw NotWirtinger("relation refers to an unknown arc");
    const fp::Word x = fp::Word::generator(r.k);
    if (p.relators()[i] != x * fp::Word::generator(r.h) * x.inverse() * fp::Word::generator(r.j, -1))
      throw NotWirtinger("relator " + std::to_string(i) + " does not match its crossing relation");
    if (i + 1 < w.relations.size())
      words.push_back(fp::Word::generator(r.j) * x * fp::Word::generator(r.h, -1) * x.inverse());
  }

  GroupRingComplex c;
  const std::size_t relators = unknot ? 0 : d - 1;
  c.ranks = {1, d, relators};
  std::vector<std::string> rel_names;
  for (std::size_t j = 0; j < relators; ++j) rel_names.push_back("r" + std::to_string(j + 1));
  c.basis = {{"1"}, p.generators(), rel_names};
  GroupRingMatrix g1(d, 1);
  for (std::size_t i = 0; i < d; ++i) g1(i, 0) = GroupRingElement::word(fp::Word::generator(static_cast<int>(i))) - 1;
  c.boundaries = {g1, fox_jacobian(words, d)};
  return c;
}

GroupRingComplex dual_resolution(const GroupRingComplex& p) { return dual_complex(p); }

IntMatrix restrict_and_augment(const GroupRingMatrix& m, const fp::CosetTable& t) {
  const std::size_t n = t.size();
  if (n == 0) throw IncompleteTable();
  IntMatrix out = IntMatrix::Zero(static_cast<Eigen::Index>(m.rows() * n), static_cast<Eigen::Index>(m.cols() * n));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto& [w, coeff] : m(i, j).terms()) {
        if (!w.empty() && static_cast<std::size_t>(w.max_generator()) >= t.num_generators()) throw IncompleteTable();
        for (std::size_t c = 0; c < n; ++c) {
          const auto image = static_cast<std::size_t>(t.trace(static_cast<int>(c), w));
          out(static_cast<Eigen::Index>(i * n + c), static_cast<Eigen::Index>(j * n + image)) += coeff;
        }
      }
  return out;
}

homalg::IntChainComplex restrict_and_augment(const GroupRingComplex& c, const fp::CosetTable& t) {
  std::vector<std::size_t> dims;
  for (std::size_t r : c.ranks) dims.push_back(r * t.size());
  std::vector<IntMatrix> boundaries;
  for (const auto& b : c.boundaries) boundaries.push_back(restrict_and_augment(b, t).transpose());
  return homalg::IntChainComplex(std::move(dims), std::move(boundaries));
}

}  // namespace knotarith::fox
