#include "cellalg/linalg.hpp"

#include <stdexcept>
#include <string>

namespace cellalg {

Rref rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    // first-nonzero pivot rule
    std::size_t piv = r;
    while (piv < a.rows() && f.is_zero(a.at(piv, c))) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a.at(piv, j), a.at(r, j));
    Scalar ipv = f.inv(a.at(r, c));
    for (std::size_t j = c; j < a.cols(); ++j)
      a.at(r, j) = f.mul(ipv, a.at(r, j));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || f.is_zero(a.at(i, c))) continue;
      Scalar fac = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        a.at(i, j) = f.sub(a.at(i, j), f.mul(fac, a.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return Rref{std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  Rref rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(m.cols(), f.zero());
    v[c] = f.one();
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
      v[rr.pivot_cols[i]] = f.neg(rr.m.at(i, c));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> image_basis(const Matrix& m) {
  Rref rr = rref(m);
  std::vector<Vec> basis;
  for (auto c : rr.pivot_cols) basis.push_back(m.col(c));
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  const Field& f = m.field();
  if (b.size() != m.rows()) throw std::invalid_argument("solve: shape");
  Matrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  Rref rr = rref(aug);
  if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == m.cols())
    return std::nullopt;  // inconsistent
  Vec x(m.cols(), f.zero());
  for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
    x[rr.pivot_cols[i]] = rr.m.at(i, m.cols());
  return x;
}

Matrix columns_matrix(const Field& f, std::size_t n,
                      const std::vector<Vec>& cols) {
  Matrix m(f, n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != n) throw std::invalid_argument("columns_matrix: shape");
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

std::optional<Vec> coordinates(const Field& f, std::size_t n,
                               const std::vector<Vec>& basis, const Vec& v) {
  return solve(columns_matrix(f, n, basis), v);
}

std::vector<std::size_t> complement_indices(const Field& f, std::size_t n,
                                            const std::vector<Vec>& inside) {
  Matrix m(f, n, inside.size() + n);
  for (std::size_t j = 0; j < inside.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = inside[j][i];
  for (std::size_t j = 0; j < n; ++j) m.at(j, inside.size() + j) = f.one();
  Rref rr = rref(m);
  std::vector<std::size_t> out;
  for (auto c : rr.pivot_cols)
    if (c >= inside.size()) out.push_back(c - inside.size());
  return out;
}

void VectorComplex::set_dim(int degree, std::size_t dim) {
  dims_[degree] = dim;
}

void VectorComplex::set_differential(int degree, Matrix d) {
  d_.emplace(degree, std::move(d));
}

std::size_t VectorComplex::dim(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

bool VectorComplex::has_differential(int degree) const {
  return d_.count(degree) > 0;
}

const Matrix& VectorComplex::differential(int degree) const {
  auto it = d_.find(degree);
  if (it == d_.end())
    throw std::out_of_range("VectorComplex: no differential at degree " +
                            std::to_string(degree));
  return it->second;
}

void VectorComplex::validate() const {
  for (const auto& [i, d] : d_) {
    if (d.cols() != dim(i) || d.rows() != dim(i + 1))
      throw std::invalid_argument(
          "VectorComplex: differential shape mismatch at degree " +
          std::to_string(i));
    auto next = d_.find(i + 1);
    if (next != d_.end() && !(next->second * d).is_zero())
      throw std::invalid_argument("VectorComplex: d^2 != 0 at degree " +
                                  std::to_string(i));
  }
}

std::map<int, std::size_t> VectorComplex::cohomology() const {
  validate();
  std::map<int, std::size_t> h;
  for (const auto& [i, n] : dims_) {
    if (n == 0) continue;
    std::size_t ker = n;
    if (auto it = d_.find(i); it != d_.end()) ker = n - rank(it->second);
    std::size_t im = 0;
    if (auto it = d_.find(i - 1); it != d_.end()) im = rank(it->second);
    if (ker > im) h[i] = ker - im;
  }
  return h;
}

Vec CohomologySpace::reduce(const Field& f, const Vec& v) const {
  std::vector<Vec> cols = reps;
  cols.insert(cols.end(), boundaries.begin(), boundaries.end());
  auto x = coordinates(f, ambient_dim, cols, v);
  if (!x) throw std::logic_error("CohomologySpace::reduce: vector not a cocycle");
  return Vec(x->begin(), x->begin() + reps.size());
}

CohomologySpace cohomology_space(const VectorComplex& c, int degree) {
  const Field& f = c.field();
  std::size_t n = c.dim(degree);
  CohomologySpace out;
  out.ambient_dim = n;
  std::vector<Vec> ker;
  if (c.has_differential(degree)) {
    ker = kernel_basis(c.differential(degree));
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      Vec e(n, f.zero());
      e[i] = f.one();
      ker.push_back(std::move(e));
    }
  }
  if (c.has_differential(degree - 1))
    out.boundaries = image_basis(c.differential(degree - 1));
  // pick kernel vectors completing the boundary space
  Matrix m(f, n, out.boundaries.size() + ker.size());
  for (std::size_t j = 0; j < out.boundaries.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = out.boundaries[j][i];
  for (std::size_t j = 0; j < ker.size(); ++j)
    for (std::size_t i = 0; i < n; ++i)
      m.at(i, out.boundaries.size() + j) = ker[j][i];
  Rref rr = rref(m);
  for (auto pc : rr.pivot_cols)
    if (pc >= out.boundaries.size())
      out.reps.push_back(ker[pc - out.boundaries.size()]);
  return out;
}

}  // namespace cellalg
