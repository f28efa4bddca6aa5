#include <set>

#include "doctest.h"
#include "ncpoly/codes.hpp"

using namespace ncpoly::codes;

namespace {

std::set<std::string> word_set(const NeuralCode& c) {
  std::set<std::string> s;
  for (const auto& w : c.words()) s.insert(word_string(w));
  return s;
}

using Zones = std::vector<LabelSet>;

}  // namespace

TEST_CASE("star codes") {
  CHECK(word_set(star_code(1)) == std::set<std::string>{"00", "11", "01"});
  CHECK(word_set(star_code(2)) == std::set<std::string>{"000", "111", "101", "011", "001"});
  auto s5 = star_code(5);
  CHECK(s5.contains(parse_word("100001")));
  CHECK(s5.contains(parse_word("010001")));
  CHECK(s5.contains(parse_word("000001")));
  CHECK(word_string(s5.words()[5]) == "100001");   // s_5
  CHECK(word_string(s5.words()[6]) == "010001");   // s_6
  CHECK(word_string(s5.words()[10]) == "000001");  // s_10
  for (int n = 1; n <= 8; ++n) {
    auto s = star_code(n);
    CHECK(s.words().size() == static_cast<std::size_t>(2 * n + 1));
    for (const auto& w : s.nonzero_words()) CHECK(w.back() == 1);
  }
  CHECK_THROWS(star_code(0));
}

TEST_CASE("pair and path codes") {
  CHECK(word_set(pair_code(1)) == std::set<std::string>{"101", "111", "011", "001", "000"});
  auto p3 = pair_code(3);
  for (const char* w : {"1000001", "0000011", "0000001"}) CHECK(p3.contains(parse_word(w)));
  for (int n = 1; n <= 8; ++n) {
    auto p = pair_code(n);
    CHECK(p.words().size() == static_cast<std::size_t>(3 * n + 2));
    for (const auto& w : p.nonzero_words()) CHECK(w.back() == 1);
  }
  // column order of M_2
  std::vector<std::string> m2;
  for (const auto& w : pair_code(2).nonzero_words()) m2.push_back(word_string(w));
  CHECK(m2 == std::vector<std::string>{"10001", "11001", "01001", "00101", "00111", "00011", "00001"});

  CHECK(path_code({1, 1, 1}).same_words(pair_code(3)));
  CHECK(equivalent_up_to_relabeling(path_code({1, 1, 1}), pair_code(3)));
  auto p5 = path_code({5});
  CHECK(p5.n() == 7);
  CHECK(p5.nonzero_words().size() == 12);
  CHECK(path_code({0}).same_words(star_code(1)));
  CHECK_THROWS(path_code({}));
  CHECK_FALSE(equivalent_up_to_relabeling(path_code({2}), path_code({0, 0, 0})));
}

TEST_CASE("deleting neurons") {
  for (int n = 2; n <= 6; ++n) {
    // λ_n of S_n
    CHECK(delete_neuron(star_code(n), n).same_words(star_code(n - 1)));
    auto p = delete_neuron(delete_neuron(pair_code(n), 2 * n), 2 * n - 1);
    CHECK(p.same_words(pair_code(n - 1)));
  }
  NeuralCode z(2, {});
  CHECK(word_set(delete_neuron(z, 1)) == std::set<std::string>{"0"});
  CHECK_THROWS(delete_neuron(z, 3));

  // abstraction commutes with deletion
  for (int n = 2; n <= 5; ++n) {
    auto c = pair_code(n);
    for (int l = 1; l <= static_cast<int>(c.n()); ++l) {
      auto lhs = to_abstract(delete_neuron(c, l));
      auto rhs = remove_label(to_abstract(c), l);
      // deletion shifts later labels down by one
      std::vector<LabelSet> zones;
      for (LabelSet z : rhs.zones) {
        LabelSet low = z & (label_bit(l) - 1);
        LabelSet high = (z >> 1) & ~(label_bit(l) - 1);
        zones.push_back(low | high);
      }
      CHECK(lhs == make_description(lhs.labels, zones));
    }
  }
}

TEST_CASE("abstract descriptions and clusters") {
  auto d1 = to_abstract(star_code(1));
  CHECK(d1.labels == label_set({1, 2}));
  CHECK(d1.zones == Zones{0, label_set({2}), label_set({1, 2})});
  auto dp = to_abstract(pair_code(1));
  CHECK(dp.zones == Zones{0, label_set({3}), label_set({1, 3}), label_set({2, 3}), label_set({1, 2, 3})});
  CHECK(zones_containing(dp, 2) == Zones{label_set({2, 3}), label_set({1, 2, 3})});
  CHECK(to_abstract(NeuralCode(3, {})).zones == Zones{0});

  for (int n = 2; n <= 6; ++n) {
    auto d = to_abstract(star_code(n));
    CHECK(zones_containing(d, n) == Zones{label_set({n, n + 1}), label_set({1, n, n + 1})});
    auto y = cluster(label_set({n + 1}), label_set({1}));
    CHECK(y == Zones{label_set({n + 1}), label_set({1, n + 1})});
  }
  CHECK(cluster(label_set({2}), 0) == Zones{label_set({2})});
  CHECK(cluster(0, label_set({1, 2})) == Zones{0, label_set({1}), label_set({2}), label_set({1, 2})});
  CHECK_THROWS(cluster(label_set({1}), label_set({1})));
  auto bare = make_description(label_set({1, 2, 3}), {label_set({1})});
  CHECK(zones_containing(bare, 3).empty());
}

TEST_CASE("piercings") {
  for (int n = 2; n <= 6; ++n) {
    auto d = to_abstract(star_code(n));
    auto w = is_k_piercing(d, label_set({1}), n);
    REQUIRE(w);
    CHECK(w->background_zone == label_set({n + 1}));
  }
  auto w0 = is_k_piercing(to_abstract(star_code(1)), 0, 1);
  REQUIRE(w0);
  CHECK(w0->background_zone == label_set({2}));
  auto d2 = to_abstract(star_code(2));
  CHECK(zones_containing(d2, 1).size() == 2);
  CHECK_FALSE(is_k_piercing(d2, 0, 1));
  CHECK_THROWS(is_k_piercing(d2, label_set({1}), 1));

  // P(2_n): λ_2n pierces {λ_2n-1}; then λ_2n-1 is a 0-piercing
  for (int n = 1; n <= 4; ++n) {
    auto d = to_abstract(pair_code(n));
    auto w = is_k_piercing(d, label_set({2 * n - 1}), 2 * n);
    REQUIRE(w);
    CHECK(w->background_zone == label_set({2 * n + 1}));
    auto w2 = is_k_piercing(remove_label(d, 2 * n), 0, 2 * n - 1);
    REQUIRE(w2);
  }
}

TEST_CASE("inductive piercedness") {
  for (int n = 1; n <= 5; ++n) {
    auto d = to_abstract(star_code(n));
    auto r = is_inductively_pierced(d, 1);
    CHECK(r.pierced);
    CHECK(r.removals.size() == static_cast<std::size_t>(n + 1));
    CHECK(is_inductively_pierced(d, 0).pierced == (n == 1));
  }
  for (int n = 1; n <= 4; ++n) {
    auto d = to_abstract(pair_code(n));
    auto r = is_inductively_pierced(d, 1);
    CHECK(r.pierced);
    // replay the certificate
    auto cur = d;
    for (const auto& w : r.removals) {
      CHECK(is_k_piercing(cur, w.pierced_set, w.pierced_label));
      cur = remove_label(cur, w.pierced_label);
    }
    CHECK(cur.labels == 0);
    CHECK(is_inductively_pierced(d, 0).pierced == false);
  }
  CHECK(is_inductively_pierced(make_description(0, {}), 0).pierced);
  CHECK_THROWS_AS(is_inductively_pierced(to_abstract(star_code(12)), 1), std::length_error);
}

TEST_CASE("code files") {
  auto c = pair_code(2);
  CHECK(from_text(to_text(c)).words() == c.words());
  CHECK(code_from_json(to_json(c)).words() == c.words());
  CHECK(from_text("# comment\n11\n01\n").words().size() == 3);
  CHECK_THROWS(from_text("11\n0\n"));
  CHECK_THROWS(from_text("12\n"));
}
