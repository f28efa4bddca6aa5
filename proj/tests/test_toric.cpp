#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "ncpoly/codes.hpp"
#include "ncpoly/linalg.hpp"
#include "ncpoly/toric/graver.hpp"
#include "ncpoly/toric/groebner.hpp"
#include "ncpoly/toric/matrices.hpp"

using namespace ncpoly;
using namespace ncpoly::toric;

namespace {

IntMatrix star_matrix(int n) { return code_matrix(codes::star_code(n)); }
IntMatrix pair_matrix(int n) { return code_matrix(codes::pair_code(n)); }

bool in_kernel(const IntMatrix& m, const Binomial& b) {
  const IntVec img = m * b.u();
  return std::all_of(img.begin(), img.end(), [](long long x) { return x == 0; });
}

// Every kernel vector with entries in [-r, r], then the conformally minimal ones.
std::vector<Binomial> brute_graver(const IntMatrix& m, long long r) {
  const std::size_t k = m.cols();
  std::vector<IntVec> ker;
  IntVec u(k, -r);
  for (;;) {
    const IntVec img = m * u;
    if (std::any_of(u.begin(), u.end(), [](long long x) { return x != 0; }) &&
        std::all_of(img.begin(), img.end(), [](long long x) { return x == 0; }))
      ker.push_back(u);
    std::size_t i = 0;
    while (i < k && u[i] == r) u[i++] = -r;
    if (i == k) break;
    ++u[i];
  }
  auto conformal_below = [](const IntVec& v, const IntVec& w) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0 && (v[i] > 0) != (w[i] > 0)) return false;
      if (std::llabs(v[i]) > std::llabs(w[i])) return false;
    }
    return true;
  };
  std::set<Binomial> out;
  for (const IntVec& w : ker) {
    bool primitive = std::none_of(ker.begin(), ker.end(), [&](const IntVec& v) { return v != w && conformal_below(v, w); });
    if (primitive) out.insert(Binomial(w));
  }
  return {out.begin(), out.end()};
}

// Every square minor by cofactor expansion.
bool brute_tu(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::function<long long(const std::vector<std::size_t>&, const std::vector<std::size_t>&)> det =
      [&](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) -> long long {
    if (rows.size() == 1) return m(rows[0], cols[0]);
    long long s = 0;
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (m(rows[0], cols[j]) == 0) continue;
      std::vector<std::size_t> sub_cols;
      for (std::size_t t = 0; t < cols.size(); ++t)
        if (t != j) sub_cols.push_back(cols[t]);
      s += (j % 2 ? -1 : 1) * m(rows[0], cols[j]) * det(sub_rows, sub_cols);
    }
    return s;
  };
  for (std::uint32_t rs = 1; rs < (1u << r); ++rs)
    for (std::uint32_t cs = 1; cs < (1u << c); ++cs) {
      if (__builtin_popcount(rs) != __builtin_popcount(cs)) continue;
      std::vector<std::size_t> rows, cols;
      for (std::size_t i = 0; i < r; ++i)
        if (rs & (1u << i)) rows.push_back(i);
      for (std::size_t j = 0; j < c; ++j)
        if (cs & (1u << j)) cols.push_back(j);
      if (std::llabs(det(rows, cols)) > 1) return false;
    }
  return true;
}

std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

IntVec pi_weight(const std::vector<int>& p) {
  const auto n = static_cast<long long>(p.size());
  IntVec w;
  for (int x : p) w.push_back(x);
  for (int x : p) w.push_back(n + 1 - x);
  return w;
}

Monomial mono(std::size_t k, std::initializer_list<int> vars) {
  Monomial a(k, 0);
  for (int v : vars) a[static_cast<std::size_t>(v - 1)] += 1;
  return a;
}

}  // namespace

TEST_CASE("binomials and monomial orders") {
  Binomial b(IntVec{-1, 1, 1, -1});
  CHECK(b.u() == IntVec{1, -1, -1, 1});
  CHECK(b.plus() == IntVec{1, 0, 0, 1});
  CHECK(b.minus() == IntVec{0, 1, 1, 0});
  CHECK(b.degree() == 2);
  CHECK(to_string(b) == "t1*t4 - t2*t3");
  CHECK(binomial_from_json(to_json(b)) == b);
  CHECK(make_binomial(4, {1, 4}, {2, 3}) == b);
  CHECK(make_binomial(4, {2, 3}, {1, 4}) == b);
  CHECK_THROWS(Binomial::from_terms(mono(3, {1, 2}), mono(3, {2, 3})));
  CHECK_THROWS(Binomial(IntVec{0, 0}));

  const auto grevlex = WeightOrder::grevlex(3);
  CHECK(grevlex.greater(mono(3, {1}), mono(3, {2})));
  CHECK(grevlex.greater(mono(3, {2, 2}), mono(3, {1, 3})));  // t3 decides
  CHECK(grevlex.greater(mono(3, {3, 3}), mono(3, {1})));     // degree first
  const WeightOrder w(IntVec{0, 0, 5});
  CHECK(w.greater(mono(3, {3}), mono(3, {1, 1})));
  CHECK(WeightOrder::from_rational({Rat(1, 2), Rat(1, 3), Rat(0)}).weight() == IntVec{3, 2, 0});

  MonomialIdeal ideal({mono(3, {1, 2}), mono(3, {1}), mono(3, {2, 3})});
  CHECK(ideal.generators().size() == 2);
  CHECK(ideal.contains(mono(3, {1, 3})));
  CHECK_FALSE(ideal.contains(mono(3, {2, 2})));
}

TEST_CASE("code matrices and homogeneity witnesses") {
  CHECK(star_matrix(2) == IntMatrix::from_columns({{1, 1, 1}, {1, 0, 1}, {0, 1, 1}, {0, 0, 1}}, 3));
  CHECK(pair_matrix(1) == IntMatrix::from_columns({{1, 0, 1}, {1, 1, 1}, {0, 1, 1}, {0, 0, 1}}, 3));
  CHECK(code_matrix(codes::NeuralCode(3, {})).cols() == 0);

  auto witness_ok = [](const IntMatrix& m, const IntVec& w) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (dot(m.column(j), w) != 1) return false;
    }
    return true;
  };
  for (int n = 1; n <= 5; ++n) {
    IntVec e(static_cast<std::size_t>(n + 1), 0);
    e[static_cast<std::size_t>(n)] = 1;
    CHECK(witness_ok(star_matrix(n), e));
    auto w = is_homogeneous(star_matrix(n));
    REQUIRE(w);
    CHECK(witness_ok(star_matrix(n), to_int(*w)));
  }
  for (int n = 1; n <= 4; ++n) {
    IntVec e(static_cast<std::size_t>(2 * n + 1), 0);
    e[static_cast<std::size_t>(2 * n)] = 1;
    CHECK(witness_ok(pair_matrix(n), e));
    CHECK(is_homogeneous(pair_matrix(n)));
  }
  CHECK_FALSE(is_homogeneous(IntMatrix::from_columns({{1, 0}, {2, 0}}, 2)));
  CHECK_FALSE(is_homogeneous(IntMatrix::from_rows({{1, 1, 0}, {0, 1, 1}})));
}

TEST_CASE("Lawrence liftings and the star row transform") {
  CHECK(lawrence(IntMatrix::from_rows({{1, 1}})) == IntMatrix::from_rows({{1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}}));
  CHECK(is_lawrence(lawrence(IntMatrix::from_rows({{1, 2, 3}}))));
  CHECK_FALSE(is_lawrence(star_matrix(3)));
  CHECK(lawrence(IntMatrix(0, 2)) == IntMatrix::from_rows({{1, 0, 1, 0}, {0, 1, 0, 1}}));
  for (int n = 1; n <= 5; ++n) {
    const IntMatrix a = star_matrix(n);
    const IntMatrix f = row_transform_star(a);
    CHECK(f == lawrence(IntMatrix(1, static_cast<std::size_t>(n), 1)));
    std::vector<RatVec> ra, rf;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      ra.push_back(to_rat(a.row(i)));
      rf.push_back(to_rat(f.row(i)));
    }
    CHECK(nullspace(ra, a.cols()) == nullspace(rf, f.cols()));
  }
  CHECK_THROWS(row_transform_star(IntMatrix(3, 3)));
}

TEST_CASE("consecutive ones and total unimodularity") {
  for (int n = 1; n <= 6; ++n) CHECK(has_consecutive_ones(pair_matrix(n)));
  CHECK_FALSE(has_consecutive_ones(IntMatrix::from_rows({{1, 0, 1}})));
  CHECK(has_consecutive_ones(code_matrix(codes::path_code({5}))));
  CHECK_THROWS(has_consecutive_ones(IntMatrix::from_rows({{2, 0}})));

  const auto a = IntMatrix::from_rows({{1, 1, 0}, {0, 1, 1}});
  const auto cycle = IntMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK(is_totally_unimodular(a));
  CHECK(brute_tu(a));
  CHECK_FALSE(is_totally_unimodular(cycle));
  CHECK_FALSE(brute_tu(cycle));
  for (int n = 1; n <= 2; ++n) {
    CHECK(all_minors_unimodular(pair_matrix(n)));
    CHECK(brute_tu(pair_matrix(n)));
  }
  CHECK(is_totally_unimodular(pair_matrix(4)));
  CHECK_THROWS_AS(all_minors_unimodular(IntMatrix(13, 2)), std::length_error);

  for (int n = 2; n <= 5; ++n) CHECK(is_unimodular(star_matrix(n)));
  CHECK(is_unimodular(code_matrix(codes::path_code({5}))));
  CHECK_FALSE(is_unimodular(IntMatrix::from_rows({{1, 1, 1, 1}, {0, 1, 3, 4}})));
}

TEST_CASE("fibers") {
  const IntMatrix m1 = pair_matrix(1);
  const IntVec b = m1 * mono(4, {1, 3});
  CHECK(b == IntVec{1, 1, 2});
  CHECK(fiber(m1, b) == std::vector<Monomial>{mono(4, {2, 4}), mono(4, {1, 3})});

  const IntMatrix m2 = pair_matrix(2);
  const IntVec b2 = m2 * mono(7, {1, 3, 5});
  CHECK(b2 == IntVec{1, 1, 1, 1, 3});
  std::vector<Monomial> tri{mono(7, {1, 3, 5}), mono(7, {4, 6, 2}), mono(7, {2, 5, 7})};
  std::sort(tri.begin(), tri.end());
  CHECK(fiber(m2, b2) == tri);

  CHECK(fiber(m2, IntVec(5, 0)) == std::vector<Monomial>{Monomial(7, 0)});
  CHECK(fiber(m2, IntVec{1, 0, 0, 0, 0}).empty());
  CHECK_THROWS(fiber(IntMatrix::from_rows({{1, 1, 0}, {0, 1, 1}}), IntVec{1, 1}));
}

TEST_CASE("Graver bases against brute force") {
  CHECK(graver(star_matrix(2), 4).elements == std::vector<Binomial>{make_binomial(4, {1, 4}, {2, 3})});
  CHECK(graver(pair_matrix(1), 4).elements == std::vector<Binomial>{make_binomial(4, {1, 3}, {2, 4})});
  CHECK_THROWS_AS(graver(IntMatrix::from_rows({{1, 1, 0}, {0, 1, 1}}), 3), std::invalid_argument);

  for (const IntMatrix& m : {star_matrix(3), pair_matrix(2), star_matrix(2)}) {
    const auto g = graver(m, 6);
    CHECK_FALSE(g.hit_bound);
    CHECK(g.elements == brute_graver(m, 2));
    for (const Binomial& e : g.elements) CHECK(in_kernel(m, e));
  }
  // quadratics only up to degree 2; the bound is reached
  const auto low = graver(pair_matrix(2), 2);
  CHECK(low.hit_bound);
  CHECK(low.elements.size() == 2);

  const IntMatrix q = IntMatrix::from_rows({{1, 1, 1, 1}, {0, 1, 3, 4}});
  CHECK(graver(q, 6).elements == brute_graver(q, 4));

  const IntMatrix p5 = code_matrix(codes::path_code({5}));
  CHECK(graver(p5, 8).elements == circuits(p5));
  CHECK(circuits(star_matrix(4)) == claimed_ugb_star(4));

  // graded variant for a code that has no homogeneity witness
  std::vector<codes::Word> ws;
  for (const char* s : {"100", "010", "001", "110", "101", "011", "111"}) ws.push_back(codes::parse_word(s));
  const IntMatrix venn = code_matrix(codes::NeuralCode(3, ws));
  CHECK_FALSE(is_homogeneous(venn));
  const auto gv = graver_graded(venn, {1, 1, 1, 2, 2, 2, 3}, 18);
  CHECK_FALSE(gv.hit_bound);
  CHECK(gv.elements == brute_graver(venn, 2));
  CHECK_THROWS(graver_graded(venn, {1, 1, 1, 1, 1, 1, 1}, 4));
}

TEST_CASE("universal Gröbner bases of the star and pair families") {
  for (int n = 2; n <= 5; ++n) {
    const auto u = ugb(star_matrix(n), 4);
    CHECK(u.method == "unimodular");
    CHECK_FALSE(u.hit_bound);
    CHECK(u.elements == claimed_ugb_star(n));
    CHECK(u.elements.size() == static_cast<std::size_t>(n * (n - 1) / 2));
  }
  for (int n = 1; n <= 4; ++n) {
    const auto u = ugb(pair_matrix(n), 8);
    CHECK_FALSE(u.hit_bound);
    CHECK(u.elements == claimed_ugb_pair(n));
    CHECK(u.elements.size() == static_cast<std::size_t>(n + n * (n - 1) / 2));
  }
  const auto u3 = claimed_ugb_star(3);
  CHECK(std::set<Binomial>(u3.begin(), u3.end()) ==
        std::set<Binomial>{make_binomial(6, {1, 5}, {2, 4}), make_binomial(6, {1, 6}, {3, 4}),
                           make_binomial(6, {2, 6}, {3, 5})});
  const auto v2 = claimed_ugb_pair(2);
  CHECK(std::set<Binomial>(v2.begin(), v2.end()) ==
        std::set<Binomial>{make_binomial(7, {1, 3}, {2, 7}), make_binomial(7, {4, 6}, {5, 7}),
                           make_binomial(7, {1, 3, 5}, {4, 6, 2})});

  const auto p5 = ugb(code_matrix(codes::path_code({5})), 10);
  CHECK_FALSE(p5.hit_bound);
  int census[5] = {0, 0, 0, 0, 0};
  for (const Binomial& b : p5.elements) ++census[std::min<long long>(b.degree(), 4)];
  CHECK(census[2] == 9);
  CHECK(census[3] == 11);
  CHECK(census[4] == 3);
  // one of the listed quadratics
  CHECK(std::count(p5.elements.begin(), p5.elements.end(), make_binomial(12, {1, 3}, {2, 12})) == 1);

  CHECK_THROWS(ugb(IntMatrix::from_rows({{1, 1, 0}, {0, 1, 1}}), 3));
}

TEST_CASE("UGB through the state polytope for a non-unimodular matrix") {
  const IntMatrix q = IntMatrix::from_rows({{1, 1, 1, 1}, {0, 1, 3, 4}});
  const auto u = ugb(q, 8);
  CHECK(u.method == "state-polytope");
  const auto g = graver(q, 8).elements;
  for (const Binomial& b : u.elements) CHECK(std::binary_search(g.begin(), g.end(), b));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> coef(0, 50);
  for (int t = 0; t < 60; ++t) {
    IntVec w(4);
    for (auto& x : w) x = coef(rng);
    for (const Binomial& b : reduced_gb(g, WeightOrder(w)).binomials()) {
      CHECK(std::binary_search(u.elements.begin(), u.elements.end(), b));
    }
  }
}

TEST_CASE("reduction and reduced Gröbner bases") {
  const auto u2 = claimed_ugb_star(2);
  const WeightOrder any = WeightOrder::grevlex(4);
  CHECK_FALSE(reduce(u2[0], u2, any));
  CHECK_FALSE(reduce(Binomial::from_terms(IntVec{2, 0, 0, 2}, IntVec{0, 2, 2, 0}), u2, any));
  const Binomial lone = make_binomial(4, {1, 1}, {2, 3});
  auto r = reduce(lone, std::vector<Binomial>{make_binomial(4, {1, 4}, {3, 3})}, any);
  REQUIRE(r);
  CHECK(*r == orient(lone, any));

  const auto gb = reduced_gb(u2, WeightOrder(IntVec{2, 1, 1, 2}));
  REQUIRE(gb.elements.size() == 1);
  CHECK(gb.elements[0].lead == mono(4, {1, 4}));
  CHECK(initial_ideal(gb) == MonomialIdeal({mono(4, {1, 4})}));

  const auto v1 = claimed_ugb_pair(1);
  CHECK(reduced_gb(v1, WeightOrder::grevlex(4)).binomials() == v1);
  CHECK(reduced_gb(v1, WeightOrder(IntVec{0, 3, 0, 1})).binomials() == v1);

  const auto u3 = claimed_ugb_star(3);
  const auto id = reduced_gb(u3, WeightOrder(pi_weight({1, 2, 3})));
  CHECK(initial_ideal(id) == MonomialIdeal({mono(6, {2, 4}), mono(6, {3, 4}), mono(6, {3, 5})}));
  const auto rev = reduced_gb(u3, WeightOrder(pi_weight({3, 2, 1})));
  CHECK(initial_ideal(rev) == MonomialIdeal({mono(6, {1, 5}), mono(6, {1, 6}), mono(6, {2, 6})}));

  // idempotent, leads pairwise non-dividing
  const auto again = reduced_gb(rev.binomials(), rev.order);
  CHECK(again.elements == rev.elements);
  for (const auto& a : rev.elements)
    for (const auto& b : rev.elements)
      if (&a != &b) CHECK_FALSE(divides(a.lead, b.lead));
}

TEST_CASE("initial ideals of the star ideal follow inversion sets") {
  for (int n = 2; n <= 5; ++n) {
    const auto u = claimed_ugb_star(n);
    const auto m = static_cast<std::size_t>(2 * n);
    std::set<MonomialIdeal> seen;
    for (const auto& p : all_perms(n)) {
      std::vector<Monomial> expected;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          const bool inversion = p[static_cast<std::size_t>(i - 1)] > p[static_cast<std::size_t>(j - 1)];
          expected.push_back(inversion ? mono(m, {i, n + j}) : mono(m, {j, n + i}));
        }
      const auto gb = reduced_gb(u, WeightOrder(pi_weight(p)));
      CHECK(initial_ideal(gb) == MonomialIdeal(expected));
      CHECK(initial_terms(u, WeightOrder(pi_weight(p))) == MonomialIdeal(expected));
      seen.insert(initial_ideal(gb));
    }
    CHECK(seen.size() == all_perms(n).size());
  }
}

TEST_CASE("Graver sets satisfy the Buchberger criterion") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> coef(0, 20);
  const std::vector<IntMatrix> ms{star_matrix(4), pair_matrix(3), code_matrix(codes::path_code({5}))};
  for (const IntMatrix& m : ms) {
    const auto g = graver(m, 8).elements;
    for (int t = 0; t < 5; ++t) {
      IntVec w(m.cols());
      for (auto& x : w) x = coef(rng);
      CHECK(s_pairs_reduce_to_zero(g, WeightOrder(w)));
    }
    CHECK(s_pairs_reduce_to_zero(g, WeightOrder::grevlex(m.cols())));
  }
  // U_3 without the third element is not a Gröbner basis of anything closed
  const auto u3 = claimed_ugb_star(3);
  CHECK_FALSE(s_pairs_reduce_to_zero(std::vector<Binomial>{u3[0], u3[2]}, WeightOrder(pi_weight({3, 2, 1}))));
}

TEST_CASE("quadratics generate the pair ideals") {
  for (int n = 1; n <= 4; ++n) {
    const auto quad = claimed_quadratics_pair(n);
    const auto gb = reduced_gb(quad, WeightOrder::grevlex(static_cast<std::size_t>(3 * n + 1)));
    for (const Binomial& g : graver(pair_matrix(n), 8).elements) CHECK_FALSE(reduce(g, gb));
    // the explicit cubic combination t_{3j+2} q_i - t_{3i+2} q_j
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const auto m = static_cast<std::size_t>(3 * n + 1);
        IntVec qi = make_binomial(m, {3 * i + 1, 3 * i + 3}, {3 * i + 2, 3 * n + 1}).u();
        IntVec qj = make_binomial(m, {3 * j + 1, 3 * j + 3}, {3 * j + 2, 3 * n + 1}).u();
        // t_{3j+2}(t^{qi+} - t^{qi-}) - t_{3i+2}(t^{qj+} - t^{qj-}): the t_{3i+2}t_{3j+2}t_{3n+1} terms cancel
        IntVec cubic(m, 0);
        for (std::size_t v = 0; v < m; ++v) cubic[v] = std::max(qi[v], 0LL) - std::max(qj[v], 0LL);
        cubic[static_cast<std::size_t>(3 * j + 1)] += 1;
        cubic[static_cast<std::size_t>(3 * i + 1)] -= 1;
        CHECK(Binomial(cubic) == make_binomial(m, {3 * i + 1, 3 * i + 3, 3 * j + 2}, {3 * j + 1, 3 * j + 3, 3 * i + 2}));
      }
  }
}

TEST_CASE("zero toric ideal matches 0-piercing") {
  using codes::NeuralCode;
  using codes::parse_word;
  auto zero_ideal = [](const NeuralCode& c) {
    const IntMatrix m = code_matrix(c);
    return m.cols() == 0 || rank(m) == m.cols();
  };
  auto pierced0 = [](const NeuralCode& c) { return codes::is_inductively_pierced(codes::to_abstract(c), 0).pierced; };
  std::vector<NeuralCode> battery;
  for (int n = 1; n <= 4; ++n) {
    std::vector<codes::Word> ws;
    for (int i = 0; i < n; ++i) {
      codes::Word w(static_cast<std::size_t>(n), 0);
      w[static_cast<std::size_t>(i)] = 1;
      ws.push_back(w);
    }
    battery.emplace_back(n, ws);
  }
  battery.emplace_back(2, std::vector<codes::Word>{parse_word("10"), parse_word("11")});
  battery.emplace_back(3, std::vector<codes::Word>{parse_word("100"), parse_word("110"), parse_word("001")});
  for (int n = 2; n <= 4; ++n) {
    battery.push_back(codes::star_code(n));
    battery.push_back(codes::pair_code(n));
  }
  for (const NeuralCode& c : battery) CHECK(zero_ideal(c) == pierced0(c));
  CHECK(zero_ideal(battery[0]));
  CHECK_FALSE(zero_ideal(codes::star_code(2)));
}

TEST_CASE("weighted grevlex harness") {
  const auto p21 = weighted_grevlex_check(codes::pair_code(1), default_three_neuron_weights());
  CHECK(p21.pierced_1);
  CHECK(p21.max_degree == 2);
  CHECK(p21.agrees);

  std::vector<codes::Word> ws;
  for (const char* s : {"100", "010", "001", "110", "101", "011", "111"}) ws.push_back(codes::parse_word(s));
  const auto venn = weighted_grevlex_check(codes::NeuralCode(3, ws), default_three_neuron_weights());
  CHECK_FALSE(venn.pierced_1);
  CHECK(venn.max_degree == 3);
  CHECK(venn.agrees);
  CHECK(venn.basis.order.weight() == IntVec{0, 0, 0, 1, 1, 1, 0});
}
