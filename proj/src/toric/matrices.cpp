#include "ncpoly/toric/matrices.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ncpoly/linalg.hpp"

namespace ncpoly::toric {

IntMatrix code_matrix(const codes::NeuralCode& c) {
  std::vector<IntVec> cols;
  for (const codes::Word& w : c.nonzero_words()) cols.emplace_back(w.begin(), w.end());
  return IntMatrix::from_columns(cols, c.n());
}

std::optional<RatVec> is_homogeneous(const IntMatrix& m) {
  std::vector<RatVec> rows;
  for (std::size_t j = 0; j < m.cols(); ++j) rows.push_back(to_rat(m.column(j)));
  return solve_linear(rows, RatVec(m.cols(), Rat(1)), m.rows());
}

IntMatrix lawrence(const IntMatrix& m) {
  const std::size_t r = m.rows(), k = m.cols();
  IntMatrix out(r + k, 2 * k, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j) out(i, j) = m(i, j);
  for (std::size_t j = 0; j < k; ++j) {
    out(r + j, j) = 1;
    out(r + j, k + j) = 1;
  }
  return out;
}

bool is_lawrence(const IntMatrix& m) {
  if (m.cols() % 2 != 0 || m.rows() < m.cols() / 2) return false;
  const std::size_t k = m.cols() / 2, r = m.rows() - k;
  IntMatrix a(r, k, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j) a(i, j) = m(i, j);
  return lawrence(a) == m;
}

IntMatrix row_transform_star(const IntMatrix& m) {
  if (m.rows() < 2 || m.cols() != 2 * (m.rows() - 1)) {
    throw std::invalid_argument("row_transform_star: expected an (n+1) x 2n matrix");
  }
  const std::size_t n = m.rows() - 1;
  IntMatrix out = m;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 1; i < n; ++i) out(n, j) -= m(i, j);
  }
  return out;
}

namespace {

void require_binary(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0 && m(i, j) != 1) throw std::invalid_argument("matrix is not 0/1");
    }
}

bool rows_consecutive(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int blocks = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 1 && (j == 0 || m(i, j - 1) == 0)) ++blocks;
    }
    if (blocks > 1) return false;
  }
  return true;
}

bool is_binary(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0 && m(i, j) != 1) return false;
    }
  return true;
}

constexpr std::size_t kMaxBruteForce = 12;

// Visit every k-subset of {0..n-1}; stop early when f returns false.
bool for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return true;
  for (;;) {
    if (!f(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

mpz_class minor(const IntMatrix& m, const std::vector<std::size_t>& rows,
                const std::vector<std::size_t>& cols) {
  IntMatrix sub(rows.size(), cols.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(rows[i], cols[j]);
  return determinant(sub);
}

}  // namespace

bool has_consecutive_ones(const IntMatrix& m) {
  require_binary(m);
  return rows_consecutive(m);
}

bool all_minors_unimodular(const IntMatrix& m) {
  if (m.rows() > kMaxBruteForce || m.cols() > kMaxBruteForce) {
    throw std::length_error("all_minors_unimodular: matrix too large for brute force");
  }
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    bool ok = for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      return for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        return abs(minor(m, rows, cols)) <= 1;
      });
    });
    if (!ok) return false;
  }
  return true;
}

bool is_totally_unimodular(const IntMatrix& m) {
  if (is_binary(m) && (rows_consecutive(m) || rows_consecutive(m.transpose()))) return true;
  return all_minors_unimodular(m);
}

bool is_unimodular(const IntMatrix& m) {
  std::vector<RatVec> rows;
  std::vector<std::size_t> basis;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows.push_back(to_rat(m.row(i)));
    if (rref(rows, m.cols()).pivots.size() == rows.size()) {
      basis.push_back(i);
    } else {
      rows.pop_back();
    }
  }
  if (basis.empty()) return true;
  mpz_class common = 0;
  bool ok = true;
  for_each_subset(m.cols(), basis.size(), [&](const std::vector<std::size_t>& cols) {
    mpz_class d = abs(minor(m, basis, cols));
    if (d == 0) return true;
    if (common == 0) common = d;
    ok = d == common;
    return ok;
  });
  return ok;
}

std::vector<Binomial> claimed_ugb_star(int n) {
  if (n < 1) throw std::invalid_argument("claimed_ugb_star: n must be positive");
  const auto m = static_cast<std::size_t>(2 * n);
  std::vector<Binomial> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(make_binomial(m, {i, n + j}, {j, n + i}));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Binomial> claimed_quadratics_pair(int n) {
  if (n < 1) throw std::invalid_argument("claimed_ugb_pair: n must be positive");
  const auto m = static_cast<std::size_t>(3 * n + 1);
  std::vector<Binomial> out;
  for (int i = 0; i < n; ++i) out.push_back(make_binomial(m, {3 * i + 1, 3 * i + 3}, {3 * i + 2, 3 * n + 1}));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Binomial> claimed_ugb_pair(int n) {
  std::vector<Binomial> out = claimed_quadratics_pair(n);
  const auto m = static_cast<std::size_t>(3 * n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      out.push_back(make_binomial(m, {3 * i + 1, 3 * i + 3, 3 * j + 2}, {3 * j + 1, 3 * j + 3, 3 * i + 2}));
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ncpoly::toric
