#include "knotarith/fpgroup/rewriting.hpp"

#include "knotarith/errors.hpp"

namespace knotarith::fp {

SubgroupPresentation::SubgroupPresentation(const Presentation& parent, CosetTable table,
                                           const RewriteOptions& options)
    : table_(std::move(table)) {
  const std::size_t ng = parent.num_generators();
  if (table_.num_generators() != ng || table_.size() == 0) throw IncompleteTable();
  if (!table_.satisfies(parent)) throw IncompleteTable();

  const std::size_t n = table_.size();
  edge_index_.assign(n * ng, -1);
  std::vector<std::string> names;
  std::vector<Word> raw_words;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t g = 0; g < ng; ++g) {
      const Letter x = letter_of(static_cast<int>(g), false);
      if (table_.is_tree_edge(static_cast<int>(c), x)) continue;
      edge_index_[c * ng + g] = static_cast<int>(edges_.size());
      edges_.emplace_back(static_cast<int>(c), static_cast<int>(g));
      names.push_back("s" + std::to_string(edges_.size()));
      const int d = table_.act(static_cast<int>(c), x);
      raw_words.push_back(table_.transversal(static_cast<int>(c)) * Word::generator(static_cast<int>(g)) *
                          table_.transversal(d).inverse());
    }

  std::vector<Word> relators;
  for (std::size_t c = 0; c < n; ++c)
    for (const auto& r : parent.relators()) {
      const Word conj = table_.transversal(static_cast<int>(c)) * r * table_.transversal(static_cast<int>(c)).inverse();
      relators.push_back(rewrite_raw(conj));
    }
  raw_ = Presentation(names, std::move(relators), "reidemeister-schreier");

  if (options.simplify) {
    TietzeResult t = tietze_simplify_tracked(raw_, options.tietze_budget);
    presentation_ = Presentation(t.presentation.generators(), t.presentation.relators(),
                                 "reidemeister-schreier");
    raw_to_output_ = std::move(t.substitution);
    for (int k : t.kept) generator_words_.push_back(raw_words[static_cast<std::size_t>(k)]);
  } else {
    presentation_ = raw_;
    for (std::size_t i = 0; i < edges_.size(); ++i) raw_to_output_.push_back(Word::generator(static_cast<int>(i)));
    generator_words_ = std::move(raw_words);
  }
}

Word SubgroupPresentation::rewrite_raw(const Word& w) const {
  const std::size_t ng = table_.num_generators();
  std::vector<Syllable> out;
  int c = 0;
  for (const Syllable& s : w.syllables()) {
    for (int i = 0; i < std::abs(s.exp); ++i) {
      if (s.exp > 0) {
        const int k = edge_index_[static_cast<std::size_t>(c) * ng + static_cast<std::size_t>(s.gen)];
        if (k >= 0) out.push_back({k, 1});
        c = table_.act(c, letter_of(s.gen, false));
      } else {
        const int d = table_.act(c, letter_of(s.gen, true));
        const int k = edge_index_[static_cast<std::size_t>(d) * ng + static_cast<std::size_t>(s.gen)];
        if (k >= 0) out.push_back({k, -1});
        c = d;
      }
    }
  }
  if (c != 0) throw ValidationError("word does not lie in the subgroup");
  return free_reduce(out);
}

Word SubgroupPresentation::rewrite(const Word& w) const { return rewrite_raw(w).substitute(raw_to_output_); }

Presentation reidemeister_schreier(const Presentation& p, const CosetTable& t, const RewriteOptions& options) {
  return SubgroupPresentation(p, t, options).presentation();
}

}  // namespace knotarith::fp
