#ifndef CELLALG_DUALIZE_HPP
#define CELLALG_DUALIZE_HPP

#include <map>
#include <vector>

#include "cellalg/cellcomplex.hpp"
#include "cellalg/repalg.hpp"

namespace cellalg {

/// Basis element of the dualizing complex in degree -dim(sigma):
/// one generator per pair of faces tau, rho below sigma.
struct OmegaTriple {
  int sigma, tau, rho;
};

/// The dualizing complex, stored sparsely by basis triples. The
/// differential sends a degree -dim(sigma) triple to the signed sum of the
/// same (tau, rho) over the codimension-1 faces of sigma; for fixed
/// (tau, rho) the triples form an independent column subcomplex.
class OmegaComplex {
 public:
  explicit OmegaComplex(const CellComplex& c);

  const std::map<int, std::vector<OmegaTriple>>& basis() const {
    return basis_;
  }
  std::map<int, std::size_t> dims() const;

  /// Full differential from degree i to i+1, columns/rows in basis order.
  Matrix differential(const Field& f, int degree) const;
  bool d_squared_is_zero(const Field& f) const;

  /// Cohomology of the (tau, rho) column; zero degrees omitted.
  std::map<int, std::size_t> column_cohomology(const Field& f, int tau,
                                               int rho) const;

 private:
  const CellComplex* c_;
  std::map<int, std::vector<OmegaTriple>> basis_;
};

/// The duality functor: for a module, D^i = (sum over dim sigma = -i of)
/// E(sigma) tensor (M_sigma)-dual; for a complex, the total complex of the
/// termwise construction. Returns a complex over the same poset.
ModuleComplex dualize(const CellComplex& c, const ModuleComplex& mc);
ModuleComplex dualize(const CellComplex& c, const RModule& m);

/// Cohomology of D(M): per-degree per-cell dimensions plus the induced
/// module structure (needed for generation/classification checks).
struct ExtOmega {
  std::map<int, std::map<int, std::size_t>> table;  // degree -> cell -> dim
  std::map<int, RModule> modules;
};

ExtOmega ext_against_omega(const CellComplex& c, const ModuleComplex& mc);
ExtOmega ext_against_omega(const CellComplex& c, const RModule& m);

/// Derived functors of the sections-supported-at-the-minimum functor,
/// computed as Ext^i(simple at the minimum, M) over an injective
/// resolution of M.
std::map<int, std::size_t> local_cohomology(const CellComplex& c,
                                            const RModule& m);

/// Cohomology of the underlying space with coefficients in the sheaf
/// induced by M: degree i >= 1 from local cohomology in degree i+1,
/// degree 0 from the four-term exact sequence.
std::map<int, std::size_t> sheaf_cohomology(const CellComplex& c,
                                            const RModule& m);

/// Independent route: the cellular cochain model with one block M_sigma
/// per cell of dimension i and signed cover actions as differential.
std::map<int, std::size_t> sheaf_cohomology_cellular(const CellComplex& c,
                                                     const RModule& m);

/// Compactly supported cohomology of the open union of the filter cells,
/// from local cohomology of the filter submodule shifted by one.
/// The empty cell must not be in the filter.
std::map<int, std::size_t> compact_cohomology(const CellComplex& c,
                                              const RModule& m,
                                              const std::vector<int>& filter);

/// Ordinary cohomology of the open union of the filter cells: the
/// minimum-component of the cohomology of D(D(M) restricted to the filter).
std::map<int, std::size_t> open_cohomology(const CellComplex& c,
                                           const RModule& m,
                                           const std::vector<int>& filter);

struct AuslanderReport {
  int j_omega = 0;          // negated top dimension of the support
  int first_nonzero = 0;    // first degree where Ext against omega is nonzero
  bool holds = false;       // formula matches and the vanishing pattern holds
};

AuslanderReport auslander_report(const CellComplex& c, const RModule& m);

}  // namespace cellalg

#endif
