#include "cellalg/matrix.hpp"

#include <stdexcept>

namespace cellalg {

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix::mul: shape");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (field_.is_zero(at(i, k))) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) = field_.add(r.at(i, j), field_.mul(at(i, k), o.at(k, j)));
    }
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: shape");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!field_.is_zero(at(i, j)))
        r[i] = field_.add(r[i], field_.mul(at(i, j), v[j]));
  return r;
}

bool Matrix::equals(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!field_.equal(a_[i], o.a_[i])) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!field_.is_zero(x)) return false;
  return true;
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

}  // namespace cellalg
