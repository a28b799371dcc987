#include "fsing/matrix.hpp"

#include "fsing/errors.hpp"

namespace fsing {

PolyMatrix::PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::from_columns(const Ring& ring, std::size_t rows,
                                    const std::vector<std::vector<Polynomial>>& columns) {
  PolyMatrix M(ring, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InputError("matrix: column has wrong length");
    for (std::size_t r = 0; r < rows; ++r) {
      require_same_ring(ring, columns[c][r].ring(), "matrix");
      M(r, c) = columns[c][r];
    }
  }
  return M;
}

PolyMatrix PolyMatrix::from_rows(const Ring& ring,
                                 const std::vector<std::vector<Polynomial>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  PolyMatrix M(ring, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("matrix: rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) {
      require_same_ring(ring, rows[r][c].ring(), "matrix");
      M(r, c) = rows[r][c];
    }
  }
  return M;
}

PolyMatrix PolyMatrix::identity(const Ring& ring, std::size_t n) {
  PolyMatrix M(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) M(i, i) = Polynomial::constant(ring, 1);
  return M;
}

std::vector<Polynomial> PolyMatrix::column(std::size_t c) const {
  std::vector<Polynomial> v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

std::vector<Polynomial> PolyMatrix::row(std::size_t r) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

bool PolyMatrix::is_zero() const {
  for (const auto& f : entries_)
    if (!f.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  require_same_ring(ring_, o.ring_, "matrix product");
  if (cols_ != o.rows_) throw InputError("matrix product: dimension mismatch");
  PolyMatrix out(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Polynomial& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) out(i, j) += a * o(k, j);
    }
  return out;
}

std::vector<Polynomial> PolyMatrix::apply(const std::vector<Polynomial>& v) const {
  if (v.size() != cols_) throw InputError("matrix apply: dimension mismatch");
  std::vector<Polynomial> out(rows_, Polynomial(ring_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (!(*this)(i, k).is_zero() && !v[k].is_zero()) out[i] += (*this)(i, k) * v[k];
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

PolyMatrix PolyMatrix::frobenius_power(unsigned e) const {
  PolyMatrix out(ring_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].frobenius_power(e);
  return out;
}

PolyMatrix PolyMatrix::without_row(std::size_t r) const {
  PolyMatrix out(ring_, rows_ - 1, cols_);
  for (std::size_t i = 0, k = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0; j < cols_; ++j) out(k, j) = (*this)(i, j);
    ++k;
  }
  return out;
}

PolyMatrix PolyMatrix::without_column(std::size_t c) const {
  PolyMatrix out(ring_, rows_, cols_ - 1);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0, k = 0; j < cols_; ++j) {
      if (j == c) continue;
      out(i, k++) = (*this)(i, j);
    }
  return out;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

}  // namespace fsing
