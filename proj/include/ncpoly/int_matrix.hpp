#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "ncpoly/rational.hpp"

namespace ncpoly {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, long long fill = 0);

  static IntMatrix from_rows(const std::vector<IntVec>& rows);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
  static IntMatrix from_columns(const std::vector<IntVec>& cols, std::size_t rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  long long& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  long long operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVec row(std::size_t r) const;
  IntVec column(std::size_t c) const;

  IntMatrix transpose() const;
  IntVec operator*(const IntVec& x) const;
  RatVec operator*(const RatVec& x) const;
  IntMatrix operator*(const IntMatrix& other) const;

  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<long long> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Exact determinant (Bareiss); throws std::invalid_argument for non-square input.
mpz_class determinant(const IntMatrix& m);

// Exact rank over the rationals.
std::size_t rank(const IntMatrix& m);
std::size_t rank(const std::vector<RatVec>& rows);

}  // namespace ncpoly
