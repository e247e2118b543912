#ifndef CELLALG_REPALG_HPP
#define CELLALG_REPALG_HPP

#include <map>
#include <memory>
#include <vector>

#include "cellalg/linalg.hpp"
#include "cellalg/poset.hpp"

namespace cellalg {

/// A finitely generated module over the incidence algebra of a poset:
/// one vector space per element and one matrix per cover, acting upward.
/// Longer actions are compositions; path independence is an invariant
/// (checked by validate(), enforced for all constructors here).
struct RModule {
  std::shared_ptr<const Poset> poset;
  Field field;
  std::vector<std::size_t> dims;                 // per element
  std::map<std::pair<int, int>, Matrix> act;     // (lower, upper) covers

  RModule(std::shared_ptr<const Poset> p, Field f);

  std::size_t total_dim() const;
  std::size_t dim(int cell) const { return dims[cell]; }
  bool is_zero() const { return total_dim() == 0; }

  const Matrix& cover_action(int lower, int upper) const;
  /// Composite action along any cover path from..to (requires from <= to).
  Matrix action(int from, int to) const;

  /// Shape consistency plus path independence over every interval.
  void validate() const;
};

/// Per-element matrices of a morphism M -> N (components dims_N x dims_M).
struct ModuleMap {
  std::vector<Matrix> comp;

  /// Commutation with every cover action.
  bool is_morphism(const RModule& src, const RModule& dst) const;
  bool is_zero() const;
  Vec flatten(const Field& f) const;
};

ModuleMap zero_map(const RModule& src, const RModule& dst);
ModuleMap compose(const RModule& a, const ModuleMap& f, const ModuleMap& g);
// g after f: f: A->B, g: B->C

/// Bounded cochain complex of RModules.
struct ModuleComplex {
  std::shared_ptr<const Poset> poset;
  Field field;
  std::map<int, RModule> terms;
  std::map<int, ModuleMap> d;  // d[i] : terms[i] -> terms[i+1]

  ModuleComplex(std::shared_ptr<const Poset> p, Field f)
      : poset(std::move(p)), field(f) {}
  static ModuleComplex concentrated(RModule m, int degree = 0);

  std::size_t term_dim(int degree, int cell) const;
  void validate() const;  // morphism property and d^2 = 0

  /// The complex of vector spaces sitting at one element.
  VectorComplex at_cell(int cell) const;

  /// degree -> cell -> dim H (zero entries omitted).
  std::map<int, std::map<int, std::size_t>> cohomology_dims() const;

  /// Cohomology with its induced cover actions.
  std::map<int, RModule> cohomology_modules() const;
};

// --- standard modules -------------------------------------------------

RModule zero_module(std::shared_ptr<const Poset> p, const Field& f);
/// (Re_x)_y = k for y >= x, identity actions.
RModule projective(std::shared_ptr<const Poset> p, const Field& f, int cell);
/// E(x)_y = k for y <= x, identity actions.
RModule injective(std::shared_ptr<const Poset> p, const Field& f, int cell);
RModule simple(std::shared_ptr<const Poset> p, const Field& f, int cell);
/// Left ideal generated by the arrows out of the minimum: k at every
/// element except the minimum. Requires a unique minimal element.
RModule ideal_j(std::shared_ptr<const Poset> p, const Field& f);
/// Submodule supported on an order filter.
RModule sub_filter(const RModule& m, const std::vector<int>& filter);
RModule sub_filter_up(const RModule& m, int cell);  // filter { y : y >= cell }
/// Quotient M / M_Psi, supported on the complementary down-set.
RModule quotient_by_filter(const RModule& m, const std::vector<int>& filter);
RModule direct_sum(const std::vector<RModule>& ms);

/// Hom_k(-, k): a module over the opposite poset with transposed actions.
/// `target` must be structurally the opposite of m.poset (same element
/// order); pass it to keep one shared opposite instance.
RModule k_dual(const RModule& m, std::shared_ptr<const Poset> target);
RModule k_dual(const RModule& m);
/// Degreewise k-dual with degrees negated.
ModuleComplex k_dual(const ModuleComplex& mc, std::shared_ptr<const Poset> target);

/// Seeded random module: dims <= 3, cover matrices sampled uniformly from
/// the affine space of path-independent choices, built level by level.
RModule random_module(std::shared_ptr<const Poset> p, const Field& f,
                      std::uint64_t seed, std::size_t max_dim = 3);

// --- Hom machinery ----------------------------------------------------

struct HomBasis {
  std::vector<ModuleMap> basis;
  std::size_t dim() const { return basis.size(); }
};

/// Basis of Hom_R(M, N), by solving the commutation constraints.
HomBasis hom_space(const RModule& m, const RModule& n);

/// Matrix of f -> g o f : Hom(M,N) -> Hom(M,N') in the given bases.
Matrix hom_post_compose(const RModule& m, const RModule& n, const RModule& n2,
                        const HomBasis& src, const HomBasis& dst,
                        const ModuleMap& g);
/// Matrix of f -> f o h : Hom(P,N) -> Hom(P',N) for h : P' -> P.
Matrix hom_pre_compose(const RModule& p, const RModule& p2, const RModule& n,
                       const HomBasis& src, const HomBasis& dst,
                       const ModuleMap& h);

/// uHom_R(M,N): the module whose component at sigma is Hom(M_{>=sigma}, N),
/// with restriction cover actions. Hom bases per element are kept (as
/// full-size maps vanishing off the filter) for induced-map construction.
struct UHom {
  RModule mod;
  std::vector<HomBasis> cell_basis;
};

UHom u_hom(const RModule& m, const RModule& n);

/// Induced map uHom(M,N) -> uHom(M,N') from g : N -> N'.
ModuleMap u_hom_post_compose(const RModule& m, const RModule& n,
                             const RModule& n2, const UHom& src,
                             const UHom& dst, const ModuleMap& g);
/// Induced map uHom(P,N) -> uHom(P',N) from h : P' -> P.
ModuleMap u_hom_pre_compose(const RModule& p, const RModule& p2,
                            const RModule& n, const UHom& src, const UHom& dst,
                            const ModuleMap& h);

// --- resolutions ------------------------------------------------------

/// Minimal projective resolution ... -> P1 -> P0 -> M -> 0 via iterated
/// projective covers. summand_cells[i] lists the generators of P_i (one
/// entry per indecomposable summand Re_cell, repeats = multiplicity).
struct ProjectiveResolution {
  std::vector<RModule> p;
  std::vector<ModuleMap> d;  // d[0]: P0 -> M, d[i]: Pi -> P(i-1)
  std::vector<std::vector<int>> summand_cells;
  std::size_t length() const { return p.size() - 1; }
};

ProjectiveResolution min_projective_resolution(const RModule& m);

/// Minimal injective resolution as a complex 0 -> I^0 -> I^1 -> ...,
/// built as the k-dual of a minimal projective resolution of k_dual(M)
/// over the opposite poset. aug : M -> I^0.
struct InjectiveResolution {
  ModuleComplex cx;
  ModuleMap aug;
  std::vector<std::vector<int>> summand_cells;  // E(cell) multiplicities
  std::size_t length() const { return cx.terms.empty() ? 0 : cx.terms.rbegin()->first; }
};

InjectiveResolution min_injective_resolution(const RModule& m);

// --- Ext --------------------------------------------------------------

enum class ExtRoute { InjectiveRoute, ProjectiveRoute };

std::map<int, std::size_t> ext(const RModule& m, const RModule& n,
                               ExtRoute route);

/// degree -> cell -> dim. The projective route is only valid on
/// meet-semilattices; pass allow_non_semilattice to override (used to
/// reproduce the failure on the pinched disc).
std::map<int, std::map<int, std::size_t>> u_ext(
    const RModule& m, const RModule& n, ExtRoute route,
    bool allow_non_semilattice = false);

}  // namespace cellalg

#endif
