#ifndef CELLALG_KOSZUL_HPP
#define CELLALG_KOSZUL_HPP

#include <vector>

#include "cellalg/cellcomplex.hpp"
#include "cellalg/dualize.hpp"
#include "cellalg/repalg.hpp"

namespace cellalg {

struct SimpleResolutionReport {
  int cell = 0;
  std::size_t length = 0;
  // generation degrees of each resolution step (one entry per summand)
  std::vector<std::vector<int>> degrees;
  bool linear = false;  // step i generated purely in degree i
};

struct KoszulCertificate {
  bool koszul = false;
  std::vector<SimpleResolutionReport> per_simple;
};

/// Koszulness via the complete criterion: the minimal projective
/// resolution of every simple is finite and linear. Generation degrees
/// come from the summand cells (the arrow grading is the dimension gap).
KoszulCertificate koszul_certificate(const CellComplex& c,
                                     const FieldSpec& field);

struct QuadraticDualReport {
  bool ok = false;
  std::size_t num_diamonds = 0;
  bool orthogonal_match = false;   // perp of the relations = plus-relations
  bool sign_twist_match = false;   // the sign-twisted flip maps relations over
};

/// The quadratic dual of the incidence algebra: per diamond, the
/// difference of the two length-2 paths is a relation; its orthogonal
/// complement under the evaluation pairing must be spanned by the sums of
/// flipped dual paths, and the sign-twisted transposition e -> eps * e*
/// must carry the relation space onto the opposite algebra's relations.
QuadraticDualReport quadratic_dual_check(const CellComplex& c,
                                         const FieldSpec& field);

/// Koszul duality functors, realized as the composites guaranteed by the
/// self-duality: DF lands over the opposite poset, DG comes back.
ModuleComplex df(const CellComplex& c, const RModule& m,
                 std::shared_ptr<const Poset> opposite);
ModuleComplex dg(const CellComplex& c, const RModule& n_over_opposite);
ModuleComplex dg(const CellComplex& c, const ModuleComplex& n_over_opposite);

}  // namespace cellalg

#endif
