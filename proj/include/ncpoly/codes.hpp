#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace ncpoly::codes {

using Word = std::vector<std::uint8_t>;

/// A combinatorial neural code. Words keep their construction order (the zero
/// word first), which fixes the column order of the code matrix.
class NeuralCode {
 public:
  NeuralCode() = default;
  // Validates lengths and entries, prepends the zero word if absent and drops
  // repeated words (first occurrence wins).
  NeuralCode(std::size_t n, std::vector<Word> words);

  std::size_t n() const { return n_; }
  const std::vector<Word>& words() const { return words_; }
  std::vector<Word> nonzero_words() const;
  bool contains(const Word& w) const;

  // Same word set, ignoring order.
  bool same_words(const NeuralCode& o) const;

 private:
  std::size_t n_ = 0;
  std::vector<Word> words_;
};

std::string word_string(const Word& w);
Word parse_word(const std::string& s);

NeuralCode star_code(int n);
NeuralCode pair_code(int n);
// Component i is a chain of l_i + 1 curves; all curves sit in one outer curve.
NeuralCode path_code(const std::vector<int>& ell);

// λ is 1-based.
NeuralCode delete_neuron(const NeuralCode& c, int lambda);

// Same word set up to some permutation of the neurons.
bool equivalent_up_to_relabeling(const NeuralCode& a, const NeuralCode& b);

std::string to_text(const NeuralCode& c);
NeuralCode from_text(const std::string& text);
nlohmann::json to_json(const NeuralCode& c);
NeuralCode code_from_json(const nlohmann::json& j);

// Label λ (1-based) is bit λ-1; a zone or label set is a bit mask.
using LabelSet = std::uint32_t;
inline LabelSet label_bit(int lambda) { return LabelSet{1} << (lambda - 1); }
LabelSet label_set(std::initializer_list<int> labels);
std::vector<int> labels_of(LabelSet s);

struct AbstractDescription {
  LabelSet labels = 0;
  std::vector<LabelSet> zones;  // sorted, unique, contains 0

  bool operator==(const AbstractDescription&) const = default;
};

AbstractDescription make_description(LabelSet labels, std::vector<LabelSet> zones);
AbstractDescription to_abstract(const NeuralCode& c);
AbstractDescription remove_label(const AbstractDescription& d, int lambda);

std::vector<LabelSet> zones_containing(const AbstractDescription& d, int lambda);
std::vector<LabelSet> cluster(LabelSet z, LabelSet lambda_set);

struct PiercingWitness {
  int pierced_label = 0;
  LabelSet pierced_set = 0;
  LabelSet background_zone = 0;
};

std::optional<PiercingWitness> is_k_piercing(const AbstractDescription& d, LabelSet lambda_set,
                                             int lambda);

struct PiercingResult {
  bool pierced = false;
  std::vector<PiercingWitness> removals;  // in removal order, when pierced
};

inline constexpr int kMaxPiercingLabels = 12;

// Throws std::length_error beyond kMaxPiercingLabels labels.
PiercingResult is_inductively_pierced(const AbstractDescription& d, int k);

nlohmann::json to_json(const PiercingWitness& w);

}  // namespace ncpoly::codes
