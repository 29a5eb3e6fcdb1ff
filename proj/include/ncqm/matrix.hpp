#pragma once

#include "ncqm/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace ncqm {

/// Dense matrix over exact rationals. Desk-scale dimensions only; every
/// operation (product, inverse, determinant, rank) is exact.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Row-major construction, e.g. RatMatrix::from_rows({{1,0},{0,1}}).
  static RatMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
  static RatMatrix identity(std::size_t n);
  static RatMatrix diagonal(const std::vector<Rational>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const RatMatrix& other) const = default;

  RatMatrix operator+(const RatMatrix& other) const;
  RatMatrix operator-(const RatMatrix& other) const;
  RatMatrix operator*(const RatMatrix& other) const;  // DimensionMismatch
  RatMatrix scaled(const Rational& factor) const;
  RatMatrix transpose() const;

  Rational determinant() const;  // square only
  RatMatrix inverse() const;     // SingularMatrix when det = 0
  std::size_t rank() const;

  bool is_antisymmetric() const;
  bool is_symmetric() const;
  bool is_zero() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

}  // namespace ncqm
