#ifndef CELLALG_CELLCOMPLEX_HPP
#define CELLALG_CELLCOMPLEX_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cellalg/field.hpp"
#include "cellalg/poset.hpp"

namespace cellalg {

/// Raised when an input fails the regular-complex checks; the message names
/// the offending cells.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The empty cell is first-class; it is synthesized on ingestion and named
/// "@empty" in all I/O.
inline const std::string kEmptyCell = "@empty";

struct PosetFileData {
  std::vector<std::pair<std::string, int>> cells;  // (id, dim), no @empty
  std::vector<std::pair<std::string, std::string>> covers;  // (lower, upper)
  // (upper, lower) -> sign; empty means "solve for one"
  std::map<std::pair<std::string, std::string>, int> epsilon;
};

/// Finite regular cell complex: graded face poset with @empty at the bottom
/// plus a signed incidence function on dimension-1 covers. Topological
/// regularity proper is not decidable from this data; construction validates
/// the combinatorial necessary conditions (grading, diamond property,
/// incidence axioms, sphere homology of cell boundaries).
class CellComplex {
 public:
  static CellComplex from_facets(
      const std::vector<std::vector<std::string>>& facets);
  static CellComplex from_poset_data(const PosetFileData& data);

  const Poset& poset() const { return poset_; }
  /// Shared handle to the face poset; one object per complex, so modules
  /// built over the same complex share it.
  std::shared_ptr<const Poset> shared_poset() const;
  std::size_t num_cells() const { return poset_.size(); }
  int empty_cell() const { return empty_; }
  int dim(int cell) const { return dim_[cell]; }
  int dim() const;  // dim X = max cell dimension
  int epsilon(int upper, int lower) const;  // 0 off covers

  bool is_simplicial() const { return simplicial_; }
  /// Vertex set of a cell (simplicial complexes only; empty set for @empty).
  const std::set<std::string>& vertices(int cell) const;
  std::optional<int> cell_with_vertices(const std::set<std::string>& vs) const;

  /// Complex on a downward-closed cell set, with inherited dims and signs.
  CellComplex restrict_to_downset(const std::vector<int>& cells) const;

  std::vector<int> closure(int cell) const;                 // down-set
  std::vector<int> boundary_cells(int cell) const;          // closure minus cell
  std::vector<int> open_star(int cell) const;               // order filter
  std::vector<int> deletion(int cell) const;                // { tau : tau !>= cell }
  CellComplex closed_star(int cell) const;  // simplicial only
  CellComplex link(int cell) const;         // simplicial only

  bool is_order_filter(const std::vector<int>& cells) const;
  bool is_downset(const std::vector<int>& cells) const;

 private:
  CellComplex(Poset p, std::vector<int> dims,
              std::map<std::pair<int, int>, int> eps);
  void validate() const;

  Poset poset_;
  std::vector<int> dim_;
  std::map<std::pair<int, int>, int> eps_;  // (upper, lower) -> +-1
  int empty_ = 0;
  bool simplicial_ = false;
  mutable bool validate_structure_only_ = false;
  mutable std::shared_ptr<const Poset> shared_poset_;
  std::vector<std::set<std::string>> verts_;

  friend std::map<std::pair<int, int>, int> solve_epsilon(const CellComplex&);
  friend CellComplex with_epsilon(const CellComplex&,
                                  std::map<std::pair<int, int>, int>);
};

/// Signs on covers satisfying the incidence axioms, found by solving the
/// GF(2) diamond system. Throws ValidationError when no assignment exists.
std::map<std::pair<int, int>, int> solve_epsilon(const CellComplex& c);

/// Copy of c with the signs replaced (they must satisfy the axioms).
CellComplex with_epsilon(const CellComplex& c,
                         std::map<std::pair<int, int>, int> eps);

struct BettiTable {
  std::map<int, std::size_t> reduced;
  std::map<int, std::size_t> unreduced;
};

/// Cellular homology of the downward-closed region (whole complex:
/// pass all cells). Betti numbers over the given field.
BettiTable cellular_homology(const CellComplex& c,
                             const std::vector<int>& downset_cells,
                             const FieldSpec& field);

inline BettiTable cellular_homology(const CellComplex& c,
                                    const FieldSpec& field) {
  std::vector<int> all;
  for (int i = 0; i < static_cast<int>(c.num_cells()); ++i) all.push_back(i);
  return cellular_homology(c, all, field);
}

/// Compactly supported cohomology of the open region U_Psi, computed from
/// the cochain complex restricted to the filter.
std::map<int, std::size_t> compact_support_cohomology(
    const CellComplex& c, const std::vector<int>& filter_cells,
    const FieldSpec& field);

/// Abstract simplicial complex of the chains of p.
CellComplex order_complex(const Poset& p);

}  // namespace cellalg

#endif
