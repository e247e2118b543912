#ifndef CELLALG_MATRIX_HPP
#define CELLALG_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "cellalg/field.hpp"

namespace cellalg {

using Vec = std::vector<Scalar>;

/// Dense matrix over an exact field. Immutable in spirit: mutating access
/// is used only during construction.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix zero(const Field& f, std::size_t rows, std::size_t cols) {
    return Matrix(f, rows, cols);
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vec apply(const Vec& v) const;  // matrix * column vector
  bool equals(const Matrix& o) const;
  bool is_zero() const;

  void set_int(std::size_t i, std::size_t j, long v) {
    at(i, j) = field_.from_int(v);
  }

  Vec col(std::size_t j) const;
  Vec row(std::size_t i) const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

}  // namespace cellalg

#endif
