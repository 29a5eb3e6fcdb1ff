#include "ncqm/matrix.hpp"

#include "ncqm/errors.hpp"

#include <cassert>
#include <utility>

namespace ncqm {

namespace {

void require_same_shape(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DomainError(ErrorKind::DimensionMismatch,
                      "matrix shapes differ: " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                          "x" + std::to_string(b.cols()));
  }
}

}  // namespace

RatMatrix RatMatrix::from_rows(
    std::initializer_list<std::initializer_list<Rational>> rows) {
  RatMatrix m(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    assert(row.size() == m.cols_);
    std::size_t j = 0;
    for (const auto& value : row) m(i, j++) = value;
    ++i;
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rational>& entries) {
  RatMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
  require_same_shape(*this, other);
  RatMatrix result(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) result.data_[k] = data_[k] + other.data_[k];
  return result;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const {
  require_same_shape(*this, other);
  RatMatrix result(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) result.data_[k] = data_[k] - other.data_[k];
  return result;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_) {
    throw DomainError(ErrorKind::DimensionMismatch,
                      "inner dimensions differ: " + std::to_string(cols_) + " vs " +
                          std::to_string(other.rows_));
  }
  RatMatrix result(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        result(i, j) += aik * other(k, j);
      }
    }
  }
  return result;
}

RatMatrix RatMatrix::scaled(const Rational& factor) const {
  RatMatrix result(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) result.data_[k] = data_[k] * factor;
  return result;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix result(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) result(j, i) = (*this)(i, j);
  return result;
}

Rational RatMatrix::determinant() const {
  assert(is_square());
  RatMatrix work(*this);
  const std::size_t n = rows_;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(work(pivot, j), work(col, j));
      det = -det;
    }
    det *= work(col, col);
    const Rational inv_pivot = Rational(1) / work(col, col);
    for (std::size_t row = col + 1; row < n; ++row) {
      if (work(row, col) == 0) continue;
      const Rational factor = work(row, col) * inv_pivot;
      for (std::size_t j = col; j < n; ++j) work(row, j) -= factor * work(col, j);
    }
  }
  return det;
}

RatMatrix RatMatrix::inverse() const {
  assert(is_square());
  const std::size_t n = rows_;
  RatMatrix work(*this);
  RatMatrix result = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) {
      throw DomainError(ErrorKind::SingularMatrix, "matrix is singular");
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(result(pivot, j), result(col, j));
      }
    }
    const Rational inv_pivot = Rational(1) / work(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) *= inv_pivot;
      result(col, j) *= inv_pivot;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || work(row, col) == 0) continue;
      const Rational factor = work(row, col);
      for (std::size_t j = 0; j < n; ++j) {
        work(row, j) -= factor * work(col, j);
        result(row, j) -= factor * result(col, j);
      }
    }
  }
  return result;
}

std::size_t RatMatrix::rank() const {
  RatMatrix work(*this);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && work(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(work(pivot, j), work(rank, j));
    }
    const Rational inv_pivot = Rational(1) / work(rank, col);
    for (std::size_t row = rank + 1; row < rows_; ++row) {
      if (work(row, col) == 0) continue;
      const Rational factor = work(row, col) * inv_pivot;
      for (std::size_t j = col; j < cols_; ++j) work(row, j) -= factor * work(rank, j);
    }
    ++rank;
  }
  return rank;
}

bool RatMatrix::is_antisymmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RatMatrix::is_zero() const {
  for (const auto& value : data_)
    if (value != 0) return false;
  return true;
}

}  // namespace ncqm
