#include "ncpoly/linalg.hpp"

#include <stdexcept>

namespace ncpoly {

Rref rref(std::vector<RatVec> m, std::size_t cols) {
  for (const RatVec& row : m) {
    if (row.size() != cols) throw std::invalid_argument("rref: ragged matrix");
  }
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rat inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(m[r][j]) != 0) m[i][j] -= f * m[r][j];
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

std::vector<RatVec> nullspace(const std::vector<RatVec>& m, std::size_t cols) {
  const Rref e = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve_linear(const std::vector<RatVec>& a, const RatVec& b,
                                   std::size_t cols) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_linear: size mismatch");
  std::vector<RatVec> aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    if (aug[i].size() != cols) throw std::invalid_argument("solve_linear: ragged matrix");
    aug[i].push_back(b[i]);
  }
  const Rref e = rref(std::move(aug), cols + 1);
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.rows[i][cols];
  return x;
}

}  // namespace ncpoly
