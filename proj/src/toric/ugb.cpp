#include <algorithm>
#include <set>
#include <stdexcept>

#include "ncpoly/statepoly.hpp"
#include "ncpoly/toric/graver.hpp"
#include "ncpoly/toric/groebner.hpp"
#include "ncpoly/toric/matrices.hpp"

namespace ncpoly::toric {

UgbResult ugb(const IntMatrix& m, int degree_bound) {
  if (!is_homogeneous(m)) throw std::invalid_argument("ugb: matrix is not homogeneous");
  GraverResult g = graver(m, degree_bound);
  UgbResult res;
  res.degree_bound = degree_bound;
  res.hit_bound = g.hit_bound;
  if (g.elements.empty()) {
    res.method = "unimodular";
    return res;
  }
  if (is_unimodular(m)) {
    res.method = "unimodular";
    res.elements = std::move(g.elements);
    return res;
  }
  if (is_lawrence(m)) {
    res.method = "lawrence";
    res.elements = std::move(g.elements);
    return res;
  }
  // The normal fan of Newt(Graver) refines the Gröbner fan, so its vertex
  // weights reach every reduced Gröbner basis.
  res.method = "state-polytope";
  const statepoly::WeightedPolytope newt = statepoly::newton_weighted(g.elements);
  std::set<Binomial> all;
  for (const IntVec& w : newt.weights) {
    for (const Binomial& b : reduced_gb(g.elements, WeightOrder(w)).binomials()) all.insert(b);
  }
  res.elements.assign(all.begin(), all.end());
  return res;
}

std::vector<std::pair<codes::Word, long long>> default_three_neuron_weights() {
  return {{codes::parse_word("110"), 1}, {codes::parse_word("101"), 1}, {codes::parse_word("011"), 1}};
}

WeightedGbCheck weighted_grevlex_check(const codes::NeuralCode& c,
                                       const std::vector<std::pair<codes::Word, long long>>& word_weights) {
  const IntMatrix m = code_matrix(c);
  const auto words = c.nonzero_words();
  IntVec w(words.size(), 0), grading(words.size(), 0);
  for (std::size_t j = 0; j < words.size(); ++j) {
    for (const auto& [word, weight] : word_weights) {
      if (word == words[j]) w[j] = weight;
    }
    for (auto bit : words[j]) grading[j] += bit;
  }
  WeightedGbCheck res;
  res.pierced_1 = codes::is_inductively_pierced(codes::to_abstract(c), 1).pierced;
  std::vector<Binomial> gens;
  if (!words.empty()) {
    gens = graver_graded(m, grading, static_cast<int>(6 * c.n())).elements;
  }
  res.basis = gens.empty() ? GroebnerBasis{{}, WeightOrder(w), true} : reduced_gb(gens, WeightOrder(w));
  res.max_degree = res.basis.max_degree();
  res.agrees = res.pierced_1 == (res.max_degree <= 2);
  return res;
}

}  // namespace ncpoly::toric
