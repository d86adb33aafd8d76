// SPDX-License-Identifier: Apache-2.0
#include <algorithm>

#include "semilinear/diophantine.hpp"
#include "semilinear/errors.hpp"

namespace semilinear {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  if (rows.empty() || rows.front().empty()) throw InvalidInput("matrix must be non-empty");
  IntegerMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw InvalidInput("matrix rows have different lengths");
    for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(std::span<const std::vector<Integer>> columns) {
  if (columns.empty() || columns.front().empty()) throw InvalidInput("matrix must be non-empty");
  IntegerMatrix m(columns.front().size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != m.rows_) throw InvalidInput("matrix columns have different lengths");
    for (std::size_t r = 0; r < m.rows_; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

Integer IntegerMatrix::norm() const {
  Integer best = 0;
  for (const auto& e : data_) {
    Integer a = abs(e);
    if (a > best) best = a;
  }
  return best;
}

bool IntegerMatrix::is_nonnegative() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& e) { return sgn(e) >= 0; });
}

std::vector<Integer> IntegerMatrix::column(std::size_t c) const {
  std::vector<Integer> col(rows_);
  for (std::size_t r = 0; r < rows_; ++r) col[r] = at(r, c);
  return col;
}

std::vector<Integer> IntegerMatrix::apply(std::span<const Integer> x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector product with wrong vector length");
  std::vector<Integer> y(rows_, Integer(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) y[r] += at(r, c) * x[c];
  }
  return y;
}

namespace {

// Fraction-free row echelon form. Returns the rank; `sign` tracks row swaps.
// Every division by the previous pivot is exact.
std::size_t bareiss(std::vector<std::vector<Integer>>& m, int& sign) {
  sign = 1;
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m.front().size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      std::swap(m[pivot], m[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

std::vector<std::vector<Integer>> to_rows(const IntegerMatrix& a) {
  std::vector<std::vector<Integer>> rows(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) rows[r][c] = a.at(r, c);
  }
  return rows;
}

}  // namespace

std::size_t rank(const IntegerMatrix& a) {
  auto rows = to_rows(a);
  int sign = 1;
  return bareiss(rows, sign);
}

Integer determinant(const IntegerMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("determinant of a non-square matrix");
  auto rows = to_rows(a);
  int sign = 1;
  if (bareiss(rows, sign) < a.rows()) return 0;
  Integer d = rows.back().back();
  return sign < 0 ? Integer(-d) : d;
}

}  // namespace semilinear
