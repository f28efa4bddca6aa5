#include "ncpoly/codes.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace ncpoly::codes {

NeuralCode::NeuralCode(std::size_t n, std::vector<Word> words) : n_(n) {
  std::set<Word> seen;
  const Word zero(n, 0);
  words_.push_back(zero);
  seen.insert(zero);
  for (Word& w : words) {
    if (w.size() != n) throw std::invalid_argument("codeword has wrong length");
    for (std::uint8_t b : w) {
      if (b > 1) throw std::invalid_argument("codeword entries must be 0 or 1");
    }
    if (seen.insert(w).second) words_.push_back(std::move(w));
  }
}

std::vector<Word> NeuralCode::nonzero_words() const {
  std::vector<Word> out;
  for (const Word& w : words_) {
    if (std::any_of(w.begin(), w.end(), [](std::uint8_t b) { return b != 0; })) out.push_back(w);
  }
  return out;
}

bool NeuralCode::contains(const Word& w) const {
  return std::find(words_.begin(), words_.end(), w) != words_.end();
}

bool NeuralCode::same_words(const NeuralCode& o) const {
  if (n_ != o.n_) return false;
  std::set<Word> a(words_.begin(), words_.end()), b(o.words_.begin(), o.words_.end());
  return a == b;
}

std::string word_string(const Word& w) {
  std::string s;
  for (std::uint8_t b : w) s.push_back(b ? '1' : '0');
  return s;
}

Word parse_word(const std::string& s) {
  Word w;
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("bad codeword '" + s + "'");
    w.push_back(ch == '1');
  }
  return w;
}

NeuralCode star_code(int n) {
  if (n < 1) throw std::invalid_argument("star_code: n must be positive");
  const auto m = static_cast<std::size_t>(n) + 1;
  std::vector<Word> words;
  for (int i = 1; i <= 2 * n; ++i) {
    Word w(m, 0);
    w[m - 1] = 1;
    if (i < n) {
      w[0] = 1;
      w[static_cast<std::size_t>(i)] = 1;
    } else if (i == n) {
      w[0] = 1;
    } else if (i < 2 * n) {
      w[static_cast<std::size_t>(i - n)] = 1;
    }
    words.push_back(std::move(w));
  }
  return NeuralCode(m, std::move(words));
}

NeuralCode pair_code(int n) {
  if (n < 1) throw std::invalid_argument("pair_code: n must be positive");
  return path_code(std::vector<int>(static_cast<std::size_t>(n), 1));
}

NeuralCode path_code(const std::vector<int>& ell) {
  if (ell.empty()) throw std::invalid_argument("path_code: empty length vector");
  std::size_t curves = 0;
  for (int l : ell) {
    if (l < 0) throw std::invalid_argument("path_code: negative length");
    curves += static_cast<std::size_t>(l) + 1;
  }
  const std::size_t m = curves + 1;
  std::vector<Word> words;
  std::size_t first = 0;
  for (int l : ell) {
    for (std::size_t j = 0; j <= static_cast<std::size_t>(l); ++j) {
      Word single(m, 0);
      single[first + j] = single[m - 1] = 1;
      words.push_back(single);
      if (j < static_cast<std::size_t>(l)) {
        Word both = single;
        both[first + j + 1] = 1;
        words.push_back(both);
      }
    }
    first += static_cast<std::size_t>(l) + 1;
  }
  Word outer(m, 0);
  outer[m - 1] = 1;
  words.push_back(outer);
  return NeuralCode(m, std::move(words));
}

NeuralCode delete_neuron(const NeuralCode& c, int lambda) {
  if (lambda < 1 || static_cast<std::size_t>(lambda) > c.n()) {
    throw std::out_of_range("delete_neuron: index out of range");
  }
  std::vector<Word> words;
  for (Word w : c.words()) {
    w.erase(w.begin() + (lambda - 1));
    words.push_back(std::move(w));
  }
  return NeuralCode(c.n() - 1, std::move(words));
}

bool equivalent_up_to_relabeling(const NeuralCode& a, const NeuralCode& b) {
  if (a.n() != b.n() || a.words().size() != b.words().size()) return false;
  const std::size_t n = a.n();
  auto degrees = [n](const NeuralCode& c) {
    std::vector<std::size_t> d(n, 0);
    for (const Word& w : c.words())
      for (std::size_t i = 0; i < n; ++i) d[i] += w[i];
    return d;
  };
  const auto da = degrees(a), db = degrees(b);
  const std::set<Word> target(b.words().begin(), b.words().end());
  std::vector<std::size_t> perm(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == n) {
      for (const Word& w : a.words()) {
        Word img(n, 0);
        for (std::size_t k = 0; k < n; ++k) img[perm[k]] = w[k];
        if (!target.count(img)) return false;
      }
      return true;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || da[i] != db[j]) continue;
      used[j] = true;
      perm[i] = j;
      if (go(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return go(0);
}

std::string to_text(const NeuralCode& c) {
  std::string out;
  for (const Word& w : c.words()) out += word_string(w) + "\n";
  return out;
}

NeuralCode from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Word> words;
  std::optional<std::size_t> n;
  while (std::getline(in, line)) {
    line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char ch) { return std::isspace(ch); }),
               line.end());
    if (line.empty() || line[0] == '#') continue;
    Word w = parse_word(line);
    if (n && *n != w.size()) throw std::invalid_argument("code file: words of different lengths");
    n = w.size();
    words.push_back(std::move(w));
  }
  if (!n) throw std::invalid_argument("code file: no codewords");
  return NeuralCode(*n, std::move(words));
}

nlohmann::json to_json(const NeuralCode& c) {
  nlohmann::json words = nlohmann::json::array();
  for (const Word& w : c.words()) words.push_back(word_string(w));
  return {{"n", c.n()}, {"words", words}};
}

NeuralCode code_from_json(const nlohmann::json& j) {
  std::vector<Word> words;
  for (const auto& s : j.at("words")) words.push_back(parse_word(s.get<std::string>()));
  return NeuralCode(j.at("n").get<std::size_t>(), std::move(words));
}

LabelSet label_set(std::initializer_list<int> labels) {
  LabelSet s = 0;
  for (int l : labels) s |= label_bit(l);
  return s;
}

std::vector<int> labels_of(LabelSet s) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if (s & (LabelSet{1} << i)) out.push_back(i + 1);
  }
  return out;
}

AbstractDescription make_description(LabelSet labels, std::vector<LabelSet> zones) {
  zones.push_back(0);
  for (LabelSet z : zones) {
    if ((z & ~labels) != 0) throw std::invalid_argument("zone uses a label outside the label set");
  }
  std::sort(zones.begin(), zones.end());
  zones.erase(std::unique(zones.begin(), zones.end()), zones.end());
  return {labels, std::move(zones)};
}

AbstractDescription to_abstract(const NeuralCode& c) {
  if (c.n() > 32) throw std::length_error("to_abstract: more than 32 neurons");
  LabelSet labels = c.n() == 32 ? ~LabelSet{0} : (LabelSet{1} << c.n()) - 1;
  std::vector<LabelSet> zones;
  for (const Word& w : c.words()) {
    LabelSet z = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i]) z |= LabelSet{1} << i;
    }
    zones.push_back(z);
  }
  return make_description(labels, std::move(zones));
}

AbstractDescription remove_label(const AbstractDescription& d, int lambda) {
  const LabelSet bit = label_bit(lambda);
  if (!(d.labels & bit)) throw std::invalid_argument("remove_label: unknown label");
  std::vector<LabelSet> zones;
  for (LabelSet z : d.zones) zones.push_back(z & ~bit);
  return make_description(d.labels & ~bit, std::move(zones));
}

std::vector<LabelSet> zones_containing(const AbstractDescription& d, int lambda) {
  if (lambda < 1 || lambda > 32 || !(d.labels & label_bit(lambda))) {
    throw std::invalid_argument("zones_containing: unknown label");
  }
  std::vector<LabelSet> out;
  for (LabelSet z : d.zones) {
    if (z & label_bit(lambda)) out.push_back(z);
  }
  return out;
}

std::vector<LabelSet> cluster(LabelSet z, LabelSet lambda_set) {
  if (z & lambda_set) throw std::invalid_argument("cluster: zone meets the label set");
  std::vector<LabelSet> out;
  // all submasks of lambda_set
  LabelSet s = lambda_set;
  for (;;) {
    out.push_back(z | s);
    if (s == 0) break;
    s = (s - 1) & lambda_set;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<PiercingWitness> is_k_piercing(const AbstractDescription& d, LabelSet lambda_set,
                                             int lambda) {
  const LabelSet bit = label_bit(lambda);
  if (lambda_set & bit) throw std::invalid_argument("is_k_piercing: pierced label lies in Λ");
  if (((lambda_set | bit) & ~d.labels) != 0) throw std::invalid_argument("is_k_piercing: unknown label");
  const std::vector<LabelSet> x = zones_containing(d, lambda);
  if (x.size() != (std::size_t{1} << __builtin_popcount(lambda_set))) return std::nullopt;
  auto in_zones = [&](LabelSet s) { return std::binary_search(d.zones.begin(), d.zones.end(), s); };
  for (LabelSet z : d.zones) {
    if (z & (lambda_set | bit)) continue;
    if (cluster(z | bit, lambda_set) != x) continue;
    const auto y = cluster(z, lambda_set);
    if (std::all_of(y.begin(), y.end(), in_zones)) return PiercingWitness{lambda, lambda_set, z};
  }
  return std::nullopt;
}

namespace {

struct Search {
  int k;
  std::map<AbstractDescription, bool, bool (*)(const AbstractDescription&, const AbstractDescription&)> memo{
      [](const AbstractDescription& a, const AbstractDescription& b) {
        return std::tie(a.labels, a.zones) < std::tie(b.labels, b.zones);
      }};

  bool run(const AbstractDescription& d, std::vector<PiercingWitness>& path) {
    if (d.labels == 0) return true;
    if (auto it = memo.find(d); it != memo.end() && !it->second) return false;
    for (int lambda : labels_of(d.labels)) {
      const LabelSet rest = d.labels & ~label_bit(lambda);
      for (int j = 0; j <= k; ++j) {
        // subsets of `rest` with exactly j elements
        for (LabelSet s = rest;; s = (s - 1) & rest) {
          if (__builtin_popcount(s) == j) {
            if (auto w = is_k_piercing(d, s, lambda)) {
              path.push_back(*w);
              if (run(remove_label(d, lambda), path)) {
                memo[d] = true;
                return true;
              }
              path.pop_back();
            }
          }
          if (s == 0) break;
        }
      }
    }
    memo[d] = false;
    return false;
  }
};

}  // namespace

PiercingResult is_inductively_pierced(const AbstractDescription& d, int k) {
  if (k < 0) throw std::invalid_argument("is_inductively_pierced: negative k");
  if (__builtin_popcount(d.labels) > kMaxPiercingLabels) {
    throw std::length_error("is_inductively_pierced: more than 12 labels");
  }
  Search s{k};
  PiercingResult r;
  r.pierced = s.run(d, r.removals);
  if (!r.pierced) r.removals.clear();
  return r;
}

nlohmann::json to_json(const PiercingWitness& w) {
  return {{"label", w.pierced_label},
          {"pierced_set", labels_of(w.pierced_set)},
          {"background_zone", labels_of(w.background_zone)}};
}

}  // namespace ncpoly::codes
