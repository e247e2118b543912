#include "cellalg/cellcomplex.hpp"

#include <algorithm>
#include <cctype>
#include <iostream>
#include <sstream>

#include "cellalg/linalg.hpp"

namespace cellalg {

namespace {

// numeric-aware vertex ordering, so "2" < "10"
bool vertex_less(const std::string& a, const std::string& b) {
  auto numeric = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
      return std::isdigit(c);
    });
  };
  if (numeric(a) && numeric(b)) {
    if (a.size() != b.size()) return a.size() < b.size();
  }
  return a < b;
}

std::string simplex_id(const std::vector<std::string>& sorted_verts) {
  if (sorted_verts.empty()) return kEmptyCell;
  std::string id = sorted_verts[0];
  for (std::size_t i = 1; i < sorted_verts.size(); ++i)
    id += "," + sorted_verts[i];
  return id;
}

}  // namespace

CellComplex::CellComplex(Poset p, std::vector<int> dims,
                         std::map<std::pair<int, int>, int> eps)
    : poset_(std::move(p)), dim_(std::move(dims)), eps_(std::move(eps)) {
  empty_ = poset_.index(kEmptyCell);
}

std::shared_ptr<const Poset> CellComplex::shared_poset() const {
  if (!shared_poset_) shared_poset_ = std::make_shared<const Poset>(poset_);
  return shared_poset_;
}

int CellComplex::dim() const {
  int d = -1;
  for (int v : dim_) d = std::max(d, v);
  return d;
}

int CellComplex::epsilon(int upper, int lower) const {
  auto it = eps_.find({upper, lower});
  return it == eps_.end() ? 0 : it->second;
}

const std::set<std::string>& CellComplex::vertices(int cell) const {
  if (!simplicial_)
    throw std::logic_error("CellComplex: vertex sets require simplicial input");
  return verts_[cell];
}

std::optional<int> CellComplex::cell_with_vertices(
    const std::set<std::string>& vs) const {
  std::vector<std::string> sorted(vs.begin(), vs.end());
  std::sort(sorted.begin(), sorted.end(), vertex_less);
  return poset_.find(simplex_id(sorted));
}

CellComplex CellComplex::from_facets(
    const std::vector<std::vector<std::string>>& facets) {
  if (facets.empty())
    throw ValidationError("from_facets: empty facet list");
  std::vector<std::set<std::string>> fs;
  for (const auto& f : facets) fs.emplace_back(f.begin(), f.end());
  // drop facets contained in another one
  std::vector<std::set<std::string>> kept;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < fs.size() && !contained; ++j)
      if (i != j && fs[i] != fs[j] &&
          std::includes(fs[j].begin(), fs[j].end(), fs[i].begin(), fs[i].end()))
        contained = true;
    if (!contained && std::find(kept.begin(), kept.end(), fs[i]) == kept.end())
      kept.push_back(fs[i]);
    else if (contained)
      std::cerr << "warning: dropping redundant facet\n";
  }

  // all subsets of the kept facets, the empty set included
  std::set<std::set<std::string>> faces;
  for (const auto& f : kept) {
    std::vector<std::string> v(f.begin(), f.end());
    const std::size_t n = v.size();
    for (std::size_t mask = 0; mask < (1ull << n); ++mask) {
      std::set<std::string> s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1ull << i)) s.insert(v[i]);
      faces.insert(std::move(s));
    }
  }

  std::vector<std::string> elems;
  std::vector<int> dims;
  std::vector<std::set<std::string>> verts;
  std::map<std::set<std::string>, std::string> id_of;
  for (const auto& s : faces) {
    std::vector<std::string> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end(), vertex_less);
    std::string id = simplex_id(sorted);
    id_of[s] = id;
    elems.push_back(id);
    dims.push_back(static_cast<int>(s.size()) - 1);
    verts.push_back(s);
  }

  std::vector<std::pair<std::string, std::string>> covers;
  std::map<std::pair<std::string, std::string>, int> eps_by_id;
  for (const auto& s : faces) {
    if (s.empty()) continue;
    std::vector<std::string> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end(), vertex_less);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      std::set<std::string> sub = s;
      sub.erase(sorted[i]);
      covers.emplace_back(id_of[sub], id_of[s]);
      eps_by_id[{id_of[s], id_of[sub]}] = (i % 2 == 0) ? 1 : -1;
    }
  }

  Poset p(elems, covers);
  std::map<std::pair<int, int>, int> eps;
  for (const auto& [key, sign] : eps_by_id)
    eps[{p.index(key.first), p.index(key.second)}] = sign;
  std::vector<int> dim_by_idx(p.size());
  std::vector<std::set<std::string>> verts_by_idx(p.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    dim_by_idx[p.index(elems[i])] = dims[i];
    verts_by_idx[p.index(elems[i])] = verts[i];
  }
  CellComplex c(std::move(p), std::move(dim_by_idx), std::move(eps));
  c.simplicial_ = true;
  c.verts_ = std::move(verts_by_idx);
  c.validate();
  return c;
}

CellComplex CellComplex::from_poset_data(const PosetFileData& data) {
  std::vector<std::string> elems{kEmptyCell};
  std::vector<int> dims{-1};
  for (const auto& [id, d] : data.cells) {
    if (id == kEmptyCell)
      throw ValidationError("poset file must not list " + kEmptyCell);
    elems.push_back(id);
    dims.push_back(d);
  }
  std::vector<std::pair<std::string, std::string>> covers = data.covers;
  for (const auto& [id, d] : data.cells)
    if (d == 0) covers.emplace_back(kEmptyCell, id);

  Poset p(elems, covers);
  std::vector<int> dim_by_idx(p.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    dim_by_idx[p.index(elems[i])] = dims[i];

  std::map<std::pair<int, int>, int> eps;
  for (const auto& [key, sign] : data.epsilon) {
    if (sign != 1 && sign != -1)
      throw ValidationError("epsilon signs must be +1 or -1");
    eps[{p.index(key.first), p.index(key.second)}] = sign;
  }
  if (!data.epsilon.empty()) {
    // the signs on (0-cell, empty) covers are forced; fill them in
    int empty = p.index(kEmptyCell);
    for (const auto& [id, d] : data.cells)
      if (d == 0) eps.emplace(std::make_pair(p.index(id), empty), 1);
  }
  CellComplex c(std::move(p), std::move(dim_by_idx), std::move(eps));
  if (data.epsilon.empty()) {
    c.validate_structure_only_ = true;
    c.validate();
    c.validate_structure_only_ = false;
    c.eps_ = solve_epsilon(c);
  }
  c.validate();
  return c;
}

void CellComplex::validate() const {
  const int n = static_cast<int>(num_cells());
  // unique minimum @empty with dim -1
  if (dim_[empty_] != -1)
    throw ValidationError("grading violation: " + kEmptyCell +
                          " must have dimension -1");
  for (int v : poset_.minimal_elements())
    if (v != empty_)
      throw ValidationError("grading violation: cell " + poset_.id(v) +
                            " is not above " + kEmptyCell);
  // covers raise dimension by exactly one
  for (auto [lo, hi] : poset_.cover_pairs())
    if (dim_[hi] != dim_[lo] + 1)
      throw ValidationError("grading violation: cover " + poset_.id(lo) +
                            " < " + poset_.id(hi) + " has dimension gap " +
                            std::to_string(dim_[hi] - dim_[lo]));
  // diamond property
  for (int lo = 0; lo < n; ++lo)
    for (int hi = 0; hi < n; ++hi) {
      if (!poset_.less(lo, hi) || dim_[hi] != dim_[lo] + 2) continue;
      int middles = 0;
      for (int z = 0; z < n; ++z)
        if (poset_.less(lo, z) && poset_.less(z, hi)) ++middles;
      if (middles != 2)
        throw ValidationError(
            "diamond violation: interval [" + poset_.id(lo) + ", " +
            poset_.id(hi) + "] has " + std::to_string(middles) +
            " middle cells (expected 2)");
    }

  if (!validate_structure_only_) {
    // epsilon axioms: defined exactly on covers, (iii) and (iv)
    for (const auto& [key, sign] : eps_) {
      auto [hi, lo] = key;
      bool is_cover = false;
      for (int u : poset_.covers_up(lo)) is_cover |= (u == hi);
      if (!is_cover)
        throw ValidationError("epsilon-axiom violation: sign on non-cover (" +
                              poset_.id(hi) + ", " + poset_.id(lo) + ")");
    }
    for (auto [lo, hi] : poset_.cover_pairs()) {
      if (epsilon(hi, lo) == 0)
        throw ValidationError("epsilon-axiom violation: missing sign on cover (" +
                              poset_.id(hi) + ", " + poset_.id(lo) + ")");
      if (lo == empty_ && epsilon(hi, lo) != 1)
        throw ValidationError("epsilon-axiom violation: epsilon(" +
                              poset_.id(hi) + ", " + kEmptyCell +
                              ") must be +1");
    }
    for (int lo = 0; lo < n; ++lo)
      for (int hi = 0; hi < n; ++hi) {
        if (!poset_.less(lo, hi) || dim_[hi] != dim_[lo] + 2) continue;
        int sum = 0;
        for (int z = 0; z < n; ++z)
          if (poset_.less(lo, z) && poset_.less(z, hi))
            sum += epsilon(hi, z) * epsilon(z, lo);
        if (sum != 0)
          throw ValidationError("epsilon-axiom violation on diamond [" +
                                poset_.id(lo) + ", " + poset_.id(hi) + "]");
      }

    // sphere-homology necessary condition on cell boundaries
    for (int cell = 0; cell < n; ++cell) {
      if (dim_[cell] < 1) continue;
      CellComplex bd = restrict_to_downset(boundary_cells(cell));
      for (const FieldSpec& fs :
           {FieldSpec::rationals(), FieldSpec::prime(2)}) {
        BettiTable t = cellular_homology(bd, fs);
        std::map<int, std::size_t> expect{{dim_[cell] - 1, 1}};
        if (t.reduced != expect)
          throw ValidationError(
              "sphere-homology violation: boundary of cell " +
              poset_.id(cell) + " is not a " +
              std::to_string(dim_[cell] - 1) + "-sphere homologically");
      }
    }
  }
}

CellComplex CellComplex::restrict_to_downset(
    const std::vector<int>& cells) const {
  if (!is_downset(cells))
    throw std::invalid_argument("restrict_to_downset: set is not closed");
  std::set<int> keep(cells.begin(), cells.end());
  keep.insert(empty_);
  std::vector<std::string> elems;
  for (int c : keep) elems.push_back(poset_.id(c));
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [lo, hi] : poset_.cover_pairs())
    if (keep.count(lo) && keep.count(hi))
      covers.emplace_back(poset_.id(lo), poset_.id(hi));
  Poset p(elems, covers);
  std::vector<int> dims(p.size());
  std::map<std::pair<int, int>, int> eps;
  for (int c : keep) dims[p.index(poset_.id(c))] = dim_[c];
  for (auto [lo, hi] : poset_.cover_pairs())
    if (keep.count(lo) && keep.count(hi))
      eps[{p.index(poset_.id(hi)), p.index(poset_.id(lo))}] = epsilon(hi, lo);
  CellComplex out(std::move(p), std::move(dims), std::move(eps));
  out.simplicial_ = simplicial_;
  if (simplicial_) {
    out.verts_.resize(out.num_cells());
    for (int c : keep)
      out.verts_[out.poset_.index(poset_.id(c))] = verts_[c];
  }
  return out;
}

std::vector<int> CellComplex::closure(int cell) const {
  return poset_.down_set(cell);
}

std::vector<int> CellComplex::boundary_cells(int cell) const {
  std::vector<int> out;
  for (int c : poset_.down_set(cell))
    if (c != cell) out.push_back(c);
  return out;
}

std::vector<int> CellComplex::open_star(int cell) const {
  return poset_.up_set(cell);
}

std::vector<int> CellComplex::deletion(int cell) const {
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(num_cells()); ++c)
    if (!poset_.leq(cell, c)) out.push_back(c);
  return out;
}

CellComplex CellComplex::closed_star(int cell) const {
  if (!simplicial_)
    throw std::logic_error("closed_star: requires simplicial input");
  std::vector<int> cells;
  for (int c = 0; c < static_cast<int>(num_cells()); ++c) {
    std::set<std::string> u = verts_[c];
    u.insert(verts_[cell].begin(), verts_[cell].end());
    if (cell_with_vertices(u)) cells.push_back(c);
  }
  return restrict_to_downset(cells);
}

CellComplex CellComplex::link(int cell) const {
  if (!simplicial_)
    throw std::logic_error("link: requires simplicial input");
  std::vector<int> cells;
  for (int c = 0; c < static_cast<int>(num_cells()); ++c) {
    std::set<std::string> inter;
    std::set_intersection(verts_[c].begin(), verts_[c].end(),
                          verts_[cell].begin(), verts_[cell].end(),
                          std::inserter(inter, inter.begin()));
    if (!inter.empty()) continue;
    std::set<std::string> u = verts_[c];
    u.insert(verts_[cell].begin(), verts_[cell].end());
    if (cell_with_vertices(u)) cells.push_back(c);
  }
  return restrict_to_downset(cells);
}

bool CellComplex::is_order_filter(const std::vector<int>& cells) const {
  std::set<int> s(cells.begin(), cells.end());
  for (int c : cells)
    for (int u : poset_.up_set(c))
      if (!s.count(u)) return false;
  return true;
}

bool CellComplex::is_downset(const std::vector<int>& cells) const {
  std::set<int> s(cells.begin(), cells.end());
  for (int c : cells)
    for (int d : poset_.down_set(c))
      if (!s.count(d)) return false;
  return true;
}

std::map<std::pair<int, int>, int> solve_epsilon(const CellComplex& c) {
  // epsilon = (-1)^x; one GF(2) unknown per cover, one equation per diamond,
  // variables on (0-cell, @empty) covers pinned to 0.
  const Poset& p = c.poset();
  auto covers = p.cover_pairs();
  std::map<std::pair<int, int>, std::size_t> var;
  for (std::size_t i = 0; i < covers.size(); ++i) var[covers[i]] = i;

  Field f2(FieldSpec::prime(2));
  std::vector<Vec> rows;
  Vec rhs;
  const int n = static_cast<int>(c.num_cells());
  for (auto [lo, hi] : covers) {
    if (lo == c.empty_cell()) {
      Vec row(covers.size(), f2.zero());
      row[var[{lo, hi}]] = f2.one();
      rows.push_back(std::move(row));
      rhs.push_back(f2.zero());
    }
  }
  for (int lo = 0; lo < n; ++lo)
    for (int hi = 0; hi < n; ++hi) {
      if (!p.less(lo, hi) || c.dim(hi) != c.dim(lo) + 2) continue;
      Vec row(covers.size(), f2.zero());
      for (int z = 0; z < n; ++z) {
        if (!p.less(lo, z) || !p.less(z, hi)) continue;
        row[var[{lo, z}]] = f2.add(row[var[{lo, z}]], f2.one());
        row[var[{z, hi}]] = f2.add(row[var[{z, hi}]], f2.one());
      }
      rows.push_back(std::move(row));
      rhs.push_back(f2.one());
    }

  Matrix a(f2, rows.size(), covers.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < covers.size(); ++j) a.at(i, j) = rows[i][j];
  auto x = solve(a, rhs);
  if (!x)
    throw ValidationError(
        "no incidence function exists; input is not a regular complex");
  std::map<std::pair<int, int>, int> eps;
  for (auto [lo, hi] : covers)
    eps[{hi, lo}] = f2.is_zero((*x)[var[{lo, hi}]]) ? 1 : -1;
  return eps;
}

CellComplex with_epsilon(const CellComplex& c,
                         std::map<std::pair<int, int>, int> eps) {
  CellComplex out = c;
  out.eps_ = std::move(eps);
  out.validate();
  return out;
}

namespace {

// homology of the chain complex spanned by `cells`, optionally augmented
std::map<int, std::size_t> chain_homology(const CellComplex& c,
                                          const std::vector<int>& cells,
                                          const FieldSpec& fs, bool augmented) {
  Field f(fs);
  std::map<int, std::vector<int>> by_dim;
  for (int cell : cells) {
    if (!augmented && cell == c.empty_cell()) continue;
    by_dim[c.dim(cell)].push_back(cell);
  }
  std::map<int, std::map<int, std::size_t>> pos;
  for (auto& [d, v] : by_dim) {
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i) pos[d][v[i]] = i;
  }
  // chain degree i stored as cochain degree -i
  VectorComplex vc(f);
  for (const auto& [d, v] : by_dim) vc.set_dim(-d, v.size());
  for (const auto& [d, v] : by_dim) {
    if (!by_dim.count(d - 1)) continue;
    Matrix bd(f, by_dim[d - 1].size(), v.size());
    for (std::size_t j = 0; j < v.size(); ++j)
      for (int lo : c.poset().covers_down(v[j])) {
        auto it = pos[d - 1].find(lo);
        if (it == pos[d - 1].end()) continue;
        bd.at(it->second, j) = f.from_int(c.epsilon(v[j], lo));
      }
    vc.set_differential(-d, std::move(bd));
  }
  std::map<int, std::size_t> out;
  for (const auto& [deg, dim] : vc.cohomology()) out[-deg] = dim;
  return out;
}

}  // namespace

BettiTable cellular_homology(const CellComplex& c,
                             const std::vector<int>& downset_cells,
                             const FieldSpec& field) {
  if (!c.is_downset(downset_cells))
    throw std::invalid_argument("cellular_homology: region is not closed");
  std::vector<int> cells = downset_cells;
  if (std::find(cells.begin(), cells.end(), c.empty_cell()) == cells.end())
    cells.push_back(c.empty_cell());
  BettiTable t;
  t.reduced = chain_homology(c, cells, field, /*augmented=*/true);
  t.unreduced = chain_homology(c, cells, field, /*augmented=*/false);
  return t;
}

std::map<int, std::size_t> compact_support_cohomology(
    const CellComplex& c, const std::vector<int>& filter_cells,
    const FieldSpec& field) {
  if (!c.is_order_filter(filter_cells))
    throw std::invalid_argument("compact_support_cohomology: not an order filter");
  for (int cell : filter_cells)
    if (cell == c.empty_cell())
      throw std::invalid_argument(
          "compact_support_cohomology: @empty may not lie in the filter");
  Field f(field);
  std::map<int, std::vector<int>> by_dim;
  for (int cell : filter_cells) by_dim[c.dim(cell)].push_back(cell);
  std::map<int, std::map<int, std::size_t>> pos;
  for (auto& [d, v] : by_dim) {
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i) pos[d][v[i]] = i;
  }
  VectorComplex vc(f);
  for (const auto& [d, v] : by_dim) vc.set_dim(d, v.size());
  for (const auto& [d, v] : by_dim) {
    if (!by_dim.count(d + 1)) continue;
    Matrix dm(f, by_dim[d + 1].size(), v.size());
    for (std::size_t j = 0; j < v.size(); ++j)
      for (int hi : c.poset().covers_up(v[j])) {
        auto it = pos[d + 1].find(hi);
        if (it == pos[d + 1].end()) continue;
        dm.at(it->second, j) = f.from_int(c.epsilon(hi, v[j]));
      }
    vc.set_differential(d, std::move(dm));
  }
  return vc.cohomology();
}

CellComplex order_complex(const Poset& p) {
  std::vector<std::vector<std::string>> facets;
  auto all = p.chains();
  // keep maximal chains only; from_facets closes downward anyway
  for (const auto& ch : all) {
    if (ch.size() < p.size()) {
      // maximality test: a chain is maximal iff no element extends it
      bool maximal = true;
      std::set<int> in(ch.begin(), ch.end());
      for (int e = 0; e < static_cast<int>(p.size()) && maximal; ++e) {
        if (in.count(e)) continue;
        bool comparable_all = true;
        for (int x : ch)
          if (!p.leq(e, x) && !p.leq(x, e)) {
            comparable_all = false;
            break;
          }
        if (comparable_all) maximal = false;
      }
      if (!maximal) continue;
    }
    std::vector<std::string> facet;
    for (int x : ch) facet.push_back(p.id(x));
    facets.push_back(std::move(facet));
  }
  return CellComplex::from_facets(facets);
}

}  // namespace cellalg
