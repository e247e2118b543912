#ifndef CELLALG_LINALG_HPP
#define CELLALG_LINALG_HPP

#include <map>
#include <optional>
#include <vector>

#include "cellalg/matrix.hpp"

namespace cellalg {

/// Reduced row echelon form. Pivoting is the deterministic first-nonzero
/// rule, so bases derived from it are reproducible.
struct Rref {
  Matrix m;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

Rref rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of { v : m v = 0 }, size = cols - rank.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Basis of the column space, taken from the pivot columns of m.
std::vector<Vec> image_basis(const Matrix& m);

/// One solution of m x = b, if any.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Matrix whose columns are the given vectors (all of length n).
Matrix columns_matrix(const Field& f, std::size_t n, const std::vector<Vec>& cols);

/// Coordinates of v in the span of `basis` (nullopt if v is outside).
std::optional<Vec> coordinates(const Field& f, std::size_t n,
                               const std::vector<Vec>& basis, const Vec& v);

/// Indices of standard basis vectors of k^n completing span(inside) to k^n.
std::vector<std::size_t> complement_indices(const Field& f, std::size_t n,
                                            const std::vector<Vec>& inside);

/// Bounded cochain complex of vector spaces: dims per degree and one
/// differential d^i : C^i -> C^{i+1} per consecutive pair.
class VectorComplex {
 public:
  explicit VectorComplex(Field f) : field_(f) {}

  void set_dim(int degree, std::size_t dim);
  void set_differential(int degree, Matrix d);  // d^degree

  const Field& field() const { return field_; }
  std::size_t dim(int degree) const;
  const std::map<int, std::size_t>& dims() const { return dims_; }
  const Matrix& differential(int degree) const;  // zero matrix if absent
  bool has_differential(int degree) const;

  /// Throws std::invalid_argument naming the offending degree if shapes
  /// mismatch or d^{i+1} d^i != 0.
  void validate() const;

  /// dim H^i = dim ker d^i - rank d^{i-1}; degrees with zero cohomology
  /// are omitted from the result.
  std::map<int, std::size_t> cohomology() const;

 private:
  Field field_;
  std::map<int, std::size_t> dims_;
  std::map<int, Matrix> d_;
};

/// Cohomology of one degree with representative data: a basis of ker d^i
/// whose classes span H^i, plus the image of d^{i-1} for reduction.
struct CohomologySpace {
  std::vector<Vec> reps;       // representatives of a basis of H^i
  std::vector<Vec> boundaries; // basis of im d^{i-1}
  std::size_t ambient_dim = 0;

  /// Class of v (which must lie in ker d^i) in the `reps` coordinates.
  Vec reduce(const Field& f, const Vec& v) const;
};

CohomologySpace cohomology_space(const VectorComplex& c, int degree);

}  // namespace cellalg

#endif
