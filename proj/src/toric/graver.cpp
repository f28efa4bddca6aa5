#include "ncpoly/toric/graver.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "ncpoly/linalg.hpp"
#include "ncpoly/toric/matrices.hpp"

namespace ncpoly::toric {

namespace {

struct VecHash {
  std::size_t operator()(const IntVec& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (long long x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

bool nonnegative(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) < 0) return false;
    }
  return true;
}

// Calls f on every exponent vector a with grading·a == d.
template <class F>
void for_each_graded(const IntVec& g, long long d, F&& f) {
  const std::size_t k = g.size();
  Monomial a(k, 0);
  if (k == 0) {
    if (d == 0) f(a);
    return;
  }
  std::function<void(std::size_t, long long)> go = [&](std::size_t j, long long left) {
    if (j + 1 == k) {
      if (left % g[j] == 0) {
        a[j] = left / g[j];
        f(a);
        a[j] = 0;
      }
      return;
    }
    for (long long x = left / g[j]; x >= 0; --x) {
      a[j] = x;
      go(j + 1, left - x * g[j]);
    }
    a[j] = 0;
  };
  go(0, d);
}

}  // namespace

std::vector<Monomial> fiber(const IntMatrix& m, const IntVec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("fiber: degree vector has wrong length");
  auto w = is_homogeneous(m);
  if (!w) throw std::invalid_argument("fiber: no homogeneity witness, fiber may be infinite");
  const Rat deg = dot(b, *w);
  std::vector<Monomial> out;
  if (deg.get_den() != 1 || deg < 0) return out;
  const long long d = deg.get_num().get_si();
  const bool prune = nonnegative(m);
  const std::size_t k = m.cols();

  Monomial a(k, 0);
  IntVec residual = b;
  auto zero = [&] { return std::all_of(residual.begin(), residual.end(), [](long long x) { return x == 0; }); };
  auto shift = [&](std::size_t j, long long times) {
    for (std::size_t i = 0; i < m.rows(); ++i) residual[i] -= m(i, j) * times;
  };
  std::function<void(std::size_t, long long)> go = [&](std::size_t j, long long left) {
    if (j == k) {
      if (left == 0 && zero()) out.push_back(a);
      return;
    }
    if (j + 1 == k) {  // the last coordinate takes the remaining degree
      shift(j, left);
      a[j] = left;
      if (zero()) out.push_back(a);
      shift(j, -left);
      a[j] = 0;
      return;
    }
    long long taken = 0;
    for (long long x = 0; x <= left; ++x) {
      if (x > 0) {
        shift(j, 1);
        ++taken;
        if (prune && std::any_of(residual.begin(), residual.end(), [](long long v) { return v < 0; })) break;
      }
      a[j] = x;
      go(j + 1, left - x);
    }
    shift(j, -taken);
    a[j] = 0;
  };
  go(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

GraverResult graver(const IntMatrix& m, int degree_bound) {
  if (!is_homogeneous(m)) throw std::invalid_argument("graver: matrix is not homogeneous");
  return graver_graded(m, IntVec(m.cols(), 1), degree_bound);
}

GraverResult graver_graded(const IntMatrix& m, const IntVec& grading, int degree_bound) {
  if (degree_bound < 1) throw std::invalid_argument("graver: degree bound must be positive");
  const std::size_t k = m.cols();
  if (grading.size() != k || std::any_of(grading.begin(), grading.end(), [](long long g) { return g <= 0; })) {
    throw std::invalid_argument("graver: grading must be positive on every column");
  }
  {
    std::vector<RatVec> cols(k, RatVec(m.rows()));
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < m.rows(); ++i) cols[j][i] = static_cast<long>(m(i, j));
    if (!solve_linear(cols, to_rat(grading), m.rows())) {
      throw std::invalid_argument("graver: grading is not constant on fibers");
    }
  }
  if (k > 64) throw std::length_error("graver: more than 64 variables");

  GraverResult res;
  res.degree_bound = degree_bound;
  std::vector<Monomial> plus, minus;  // parts of the elements found so far

  for (long long d = 1; d <= degree_bound; ++d) {
    std::vector<Monomial> monos;
    std::unordered_map<IntVec, std::vector<std::size_t>, VecHash> fibers;
    for_each_graded(grading, d, [&](const Monomial& a) {
      fibers[m * a].push_back(monos.size());
      monos.push_back(a);
    });
    const std::size_t words = plus.size() / 64 + 1;
    std::vector<std::uint64_t> pbits(monos.size() * words, 0), nbits(monos.size() * words, 0);
    std::vector<std::uint64_t> support(monos.size(), 0);
    for (std::size_t i = 0; i < monos.size(); ++i) {
      for (std::size_t v = 0; v < k; ++v) {
        if (monos[i][v] != 0) support[i] |= std::uint64_t{1} << v;
      }
      for (std::size_t g = 0; g < plus.size(); ++g) {
        if (divides(plus[g], monos[i])) pbits[i * words + g / 64] |= std::uint64_t{1} << (g % 64);
        if (divides(minus[g], monos[i])) nbits[i * words + g / 64] |= std::uint64_t{1} << (g % 64);
      }
    }
    // (a, b) is primitive unless a lower-degree g has g+ | a and g- | b, or
    // the same with g reversed.
    auto blocked = [&](std::size_t a, std::size_t b) {
      for (std::size_t w = 0; w < words; ++w) {
        if ((pbits[a * words + w] & nbits[b * words + w]) != 0) return true;
        if ((nbits[a * words + w] & pbits[b * words + w]) != 0) return true;
      }
      return false;
    };
    std::vector<Binomial> found;
    for (const auto& [image, members] : fibers) {
      for (std::size_t x = 0; x < members.size(); ++x)
        for (std::size_t y = x + 1; y < members.size(); ++y) {
          const std::size_t a = members[x], b = members[y];
          if ((support[a] & support[b]) != 0 || blocked(a, b)) continue;
          found.push_back(Binomial::from_terms(monos[a], monos[b]));
        }
    }
    if (!found.empty() && d == degree_bound) res.hit_bound = true;
    for (const Binomial& g : found) {
      plus.push_back(g.plus());
      minus.push_back(g.minus());
      res.elements.push_back(g);
    }
  }
  std::sort(res.elements.begin(), res.elements.end());
  return res;
}

std::vector<Binomial> circuits(const IntMatrix& m) {
  const std::size_t k = m.cols();
  if (k > 24) throw std::length_error("circuits: too many columns");
  const std::size_t r = rank(m);
  std::vector<Binomial> out;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << k); ++s) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(s));
    if (size > r + 1) continue;
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < k; ++j) {
      if (s & (std::uint32_t{1} << j)) cols.push_back(j);
    }
    std::vector<RatVec> sub(m.rows(), RatVec(size));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < size; ++j) sub[i][j] = static_cast<long>(m(i, cols[j]));
    auto ker = nullspace(sub, size);
    if (ker.size() != 1) continue;
    if (std::any_of(ker[0].begin(), ker[0].end(), [](const Rat& x) { return sgn(x) == 0; })) continue;
    IntVec small = primitive_integer_multiple(ker[0]);
    IntVec u(k, 0);
    for (std::size_t j = 0; j < size; ++j) u[cols[j]] = small[j];
    out.emplace_back(std::move(u));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ncpoly::toric
