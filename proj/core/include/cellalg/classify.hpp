#ifndef CELLALG_CLASSIFY_HPP
#define CELLALG_CLASSIFY_HPP

#include <map>
#include <optional>
#include <vector>

#include "cellalg/cellcomplex.hpp"
#include "cellalg/dualize.hpp"

namespace cellalg {

/// A nonzero cohomology entry that violates a vanishing condition.
struct VanishingWitness {
  int degree;
  int cell;
  std::size_t dim;
};

struct VerdictWithWitnesses {
  bool verdict = false;
  std::vector<VanishingWitness> witnesses;
};

/// Cohen-Macaulay over the field: the cohomology of the dual of the
/// projective at the minimum is concentrated in degree -dim(X).
VerdictWithWitnesses is_cohen_macaulay(const CellComplex& c,
                                       const FieldSpec& field);

/// Buchsbaum: the same vanishing, required only at cells other than the
/// minimum (the sheaf-level reading, which forgets the minimum component).
VerdictWithWitnesses is_buchsbaum(const CellComplex& c,
                                  const FieldSpec& field);

struct GorensteinStarReport {
  bool verdict = false;
  bool concentrated = false;       // cohomology only in degree -dim(X)
  bool all_ones = false;           // top cohomology has dimension 1 everywhere
  bool generated_at_minimum = false;
  // Definitional oracle for simplicial input: every link is a homology
  // sphere of the complementary dimension. Unset for non-simplicial input.
  std::optional<bool> link_oracle;
};

/// Gorenstein*: the dual of the projective at the minimum is, up to shift,
/// that projective again. Certified by concentration + all-ones dimensions
/// + generation at the minimum; cross-checked against the link oracle.
GorensteinStarReport is_gorenstein_star(const CellComplex& c,
                                        const FieldSpec& field);

struct OmegaConcentration {
  bool module_level = false;  // all (tau, rho) columns vanish outside -dim X
  bool sheaf_level = false;   // same, ignoring columns with rho = @empty
};

OmegaConcentration omega_concentration(const CellComplex& c,
                                       const FieldSpec& field);

/// Mobius values against the adjoined maximum, computed two independent
/// ways: from compactly supported cohomology of open stars (reduced Euler
/// characteristic for the empty cell) and by the recursion.
struct MobiusHatTable {
  std::map<int, long long> cohomological;  // cell -> value
  std::map<int, long long> recursive;
  bool agree = false;
};

MobiusHatTable mobius_hat(const CellComplex& c);

/// Checks mu(tau, sigma) = (-1)^(interval length) against the recursion
/// for every comparable pair of cells; returns a violating pair if any.
std::optional<std::pair<int, int>> mobius_cells_check(const CellComplex& c);

}  // namespace cellalg

#endif
