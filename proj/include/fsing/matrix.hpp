#ifndef FSING_MATRIX_HPP
#define FSING_MATRIX_HPP

#include "fsing/polynomial.hpp"

#include <vector>

namespace fsing {

/// Dense rows x cols matrix of polynomials over one ring, stored row-major.
class PolyMatrix {
 public:
  PolyMatrix(Ring ring, std::size_t rows, std::size_t cols);
  /// Columns must all have `rows` entries.
  static PolyMatrix from_columns(const Ring& ring, std::size_t rows,
                                 const std::vector<std::vector<Polynomial>>& columns);
  static PolyMatrix from_rows(const Ring& ring, const std::vector<std::vector<Polynomial>>& rows);
  static PolyMatrix identity(const Ring& ring, std::size_t n);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::vector<Polynomial> column(std::size_t c) const;
  std::vector<Polynomial> row(std::size_t r) const;
  bool is_zero() const;

  PolyMatrix operator*(const PolyMatrix& o) const;
  /// M * v for a column vector v.
  std::vector<Polynomial> apply(const std::vector<Polynomial>& v) const;
  PolyMatrix transpose() const;
  /// Entrywise p^e-th power.
  PolyMatrix frobenius_power(unsigned e) const;
  PolyMatrix without_row(std::size_t r) const;
  PolyMatrix without_column(std::size_t c) const;

  bool operator==(const PolyMatrix& o) const;

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

}  // namespace fsing

#endif  // FSING_MATRIX_HPP
