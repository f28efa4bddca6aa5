#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "ncpoly/codes.hpp"
#include "ncpoly/int_matrix.hpp"
#include "ncpoly/toric/binomial.hpp"

namespace ncpoly::toric {

// lead - trail with lead ≻ trail. The terms may share variables while an
// ideal that is not saturated is being completed.
struct GbElement {
  Monomial lead;
  Monomial trail;
  auto operator<=>(const GbElement&) const = default;
};

GbElement orient(const Monomial& a, const Monomial& b, const WeightOrder& ord);
GbElement orient(const Binomial& b, const WeightOrder& ord);

struct GroebnerBasis {
  std::vector<GbElement> elements;  // sorted by lead
  WeightOrder order;
  bool reduced = false;

  long long max_degree() const;
  // Each element as t^{lead} - t^{trail} with the common factor removed.
  std::vector<Binomial> binomials() const;
};

inline constexpr long long kReductionStepCap = 5'000'000;

// Normal form of t^m modulo the leads of g. Throws std::runtime_error past
// kReductionStepCap steps.
Monomial normal_form(const Monomial& m, std::span<const GbElement> g);

// Fully reduced remainder of b, oriented, or nullopt when b reduces to zero.
std::optional<GbElement> reduce(const Binomial& b, std::span<const Binomial> g, const WeightOrder& ord);
std::optional<GbElement> reduce(const Binomial& b, const GroebnerBasis& g);

// Buchberger completion on binomials, then minimalization and interreduction.
GroebnerBasis reduced_gb(std::span<const Binomial> gens, const WeightOrder& ord);

MonomialIdeal initial_ideal(const GroebnerBasis& g);
// (init(p) | p ∈ U); the initial ideal itself when U is a universal GB.
MonomialIdeal initial_terms(std::span<const Binomial> u, const WeightOrder& ord);

bool s_pairs_reduce_to_zero(std::span<const Binomial> g, const WeightOrder& ord);

nlohmann::json to_json(const GroebnerBasis& g);

struct UgbResult {
  std::vector<Binomial> elements;  // sorted
  std::string method;              // "unimodular", "lawrence" or "state-polytope"
  int degree_bound = 0;
  bool hit_bound = false;
};

// Throws std::invalid_argument when M is not homogeneous.
UgbResult ugb(const IntMatrix& m, int degree_bound);

// Reduced GB of I_C under weighted grevlex, with the weights given per
// codeword. Default: weight 1 on the three two-neuron words of a 3-neuron code.
struct WeightedGbCheck {
  GroebnerBasis basis;
  long long max_degree = 0;
  bool pierced_1 = false;
  bool agrees = false;  // pierced_1 == (max_degree <= 2)
};
WeightedGbCheck weighted_grevlex_check(const codes::NeuralCode& c,
                                       const std::vector<std::pair<codes::Word, long long>>& word_weights);
std::vector<std::pair<codes::Word, long long>> default_three_neuron_weights();

}  // namespace ncpoly::toric
