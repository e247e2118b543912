#include "cellalg/repalg.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "cellalg/linalg.hpp"

namespace cellalg {

namespace {

// act entries for every cover, zero-sized according to dims.
void init_zero_actions(RModule& m) {
  m.act.clear();
  for (auto [a, b] : m.poset->cover_pairs())
    m.act.emplace(std::make_pair(a, b),
                  Matrix::zero(m.field, m.dims[b], m.dims[a]));
}

std::size_t map_ambient_dim(const RModule& src, const RModule& dst) {
  std::size_t n = 0;
  for (std::size_t x = 0; x < src.dims.size(); ++x)
    n += src.dims[x] * dst.dims[x];
  return n;
}

// Entries of f's components, cell by cell, row-major. The component at x
// is read with shape dst.dims[x] x src.dims[x]; this lets a map defined on
// a larger filter submodule be flattened against a smaller one.
Vec flatten_against(const ModuleMap& f, const RModule& src,
                    const RModule& dst) {
  Vec out;
  out.reserve(map_ambient_dim(src, dst));
  for (std::size_t x = 0; x < src.dims.size(); ++x)
    for (std::size_t i = 0; i < dst.dims[x]; ++i)
      for (std::size_t j = 0; j < src.dims[x]; ++j)
        out.push_back(f.comp[x].at(i, j));
  return out;
}

ModuleMap unflatten(const Vec& v, const RModule& src, const RModule& dst) {
  ModuleMap f = zero_map(src, dst);
  std::size_t k = 0;
  for (std::size_t x = 0; x < src.dims.size(); ++x)
    for (std::size_t i = 0; i < dst.dims[x]; ++i)
      for (std::size_t j = 0; j < src.dims[x]; ++j)
        f.comp[x].at(i, j) = v[k++];
  return f;
}

}  // namespace

RModule::RModule(std::shared_ptr<const Poset> p, Field f)
    : poset(std::move(p)), field(f), dims(poset->size(), 0) {}

std::size_t RModule::total_dim() const {
  std::size_t n = 0;
  for (std::size_t d : dims) n += d;
  return n;
}

const Matrix& RModule::cover_action(int lower, int upper) const {
  auto it = act.find({lower, upper});
  if (it == act.end())
    throw std::invalid_argument("RModule: no action for cover (" +
                                poset->id(lower) + ", " + poset->id(upper) +
                                ")");
  return it->second;
}

Matrix RModule::action(int from, int to) const {
  if (!poset->leq(from, to))
    throw std::invalid_argument("RModule::action: " + poset->id(from) +
                                " is not below " + poset->id(to));
  if (from == to) return Matrix::identity(field, dims[from]);
  for (int z : poset->covers_up(from))
    if (poset->leq(z, to)) return action(z, to) * cover_action(from, z);
  throw std::logic_error("RModule::action: no cover path");  // unreachable
}

void RModule::validate() const {
  const int n = static_cast<int>(poset->size());
  auto pairs = poset->cover_pairs();
  if (act.size() != pairs.size())
    throw std::invalid_argument("RModule: action map does not match covers");
  for (auto [a, b] : pairs) {
    const Matrix& m = cover_action(a, b);
    if (m.rows() != dims[b] || m.cols() != dims[a])
      throw std::invalid_argument("RModule: action shape mismatch on cover (" +
                                  poset->id(a) + ", " + poset->id(b) + ")");
  }
  // Path independence over every interval: all first-step factorizations of
  // the composite action must agree.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!poset->less(x, y)) continue;
      std::vector<Matrix> routes;
      for (int z : poset->covers_up(x))
        if (poset->leq(z, y)) routes.push_back(action(z, y) * cover_action(x, z));
      for (std::size_t i = 1; i < routes.size(); ++i)
        if (!routes[i].equals(routes[0]))
          throw std::invalid_argument(
              "RModule: path-dependent action on interval [" + poset->id(x) +
              ", " + poset->id(y) + "]");
    }
}

bool ModuleMap::is_morphism(const RModule& src, const RModule& dst) const {
  if (comp.size() != src.dims.size()) return false;
  for (std::size_t x = 0; x < comp.size(); ++x)
    if (comp[x].rows() != dst.dims[x] || comp[x].cols() != src.dims[x])
      return false;
  for (auto [a, b] : src.poset->cover_pairs()) {
    Matrix lhs = dst.cover_action(a, b) * comp[a];
    Matrix rhs = comp[b] * src.cover_action(a, b);
    if (!lhs.equals(rhs)) return false;
  }
  return true;
}

bool ModuleMap::is_zero() const {
  for (const Matrix& m : comp)
    if (!m.is_zero()) return false;
  return true;
}

Vec ModuleMap::flatten(const Field& f) const {
  (void)f;
  Vec out;
  for (const Matrix& m : comp)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j));
  return out;
}

ModuleMap zero_map(const RModule& src, const RModule& dst) {
  ModuleMap f;
  for (std::size_t x = 0; x < src.dims.size(); ++x)
    f.comp.push_back(Matrix::zero(src.field, dst.dims[x], src.dims[x]));
  return f;
}

ModuleMap compose(const RModule& a, const ModuleMap& f, const ModuleMap& g) {
  ModuleMap h;
  for (std::size_t x = 0; x < a.dims.size(); ++x)
    h.comp.push_back(g.comp[x] * f.comp[x]);
  return h;
}

// --- ModuleComplex ----------------------------------------------------

ModuleComplex ModuleComplex::concentrated(RModule m, int degree) {
  ModuleComplex c(m.poset, m.field);
  c.terms.emplace(degree, std::move(m));
  return c;
}

std::size_t ModuleComplex::term_dim(int degree, int cell) const {
  auto it = terms.find(degree);
  return it == terms.end() ? 0 : it->second.dims[cell];
}

void ModuleComplex::validate() const {
  for (const auto& [i, t] : terms) t.validate();
  for (const auto& [i, f] : d) {
    auto s = terms.find(i);
    auto t = terms.find(i + 1);
    if (s == terms.end() || t == terms.end())
      throw std::invalid_argument(
          "ModuleComplex: differential without terms at degree " +
          std::to_string(i));
    if (!f.is_morphism(s->second, t->second))
      throw std::invalid_argument(
          "ModuleComplex: differential is not a morphism at degree " +
          std::to_string(i));
    auto g = d.find(i + 1);
    if (g != d.end() && !compose(s->second, f, g->second).is_zero())
      throw std::invalid_argument("ModuleComplex: d o d != 0 at degree " +
                                  std::to_string(i));
  }
}

VectorComplex ModuleComplex::at_cell(int cell) const {
  VectorComplex vc(field);
  if (terms.empty()) return vc;
  int lo = terms.begin()->first, hi = terms.rbegin()->first;
  for (int i = lo; i <= hi; ++i) vc.set_dim(i, term_dim(i, cell));
  for (const auto& [i, f] : d) vc.set_differential(i, f.comp[cell]);
  return vc;
}

std::map<int, std::map<int, std::size_t>> ModuleComplex::cohomology_dims()
    const {
  std::map<int, std::map<int, std::size_t>> out;
  for (int x = 0; x < static_cast<int>(poset->size()); ++x)
    for (const auto& [deg, h] : at_cell(x).cohomology()) out[deg][x] = h;
  return out;
}

std::map<int, RModule> ModuleComplex::cohomology_modules() const {
  std::map<int, RModule> out;
  const int n = static_cast<int>(poset->size());
  std::vector<VectorComplex> vcs;
  vcs.reserve(n);
  for (int x = 0; x < n; ++x) vcs.push_back(at_cell(x));
  for (const auto& [deg, term] : terms) {
    std::vector<CohomologySpace> cs;
    cs.reserve(n);
    for (int x = 0; x < n; ++x) cs.push_back(cohomology_space(vcs[x], deg));
    RModule h(poset, field);
    for (int x = 0; x < n; ++x) h.dims[x] = cs[x].reps.size();
    init_zero_actions(h);
    for (auto [a, b] : poset->cover_pairs()) {
      Matrix m(field, h.dims[b], h.dims[a]);
      for (std::size_t j = 0; j < h.dims[a]; ++j) {
        Vec img = term.cover_action(a, b).apply(cs[a].reps[j]);
        Vec cls = cs[b].reduce(field, img);
        for (std::size_t i = 0; i < h.dims[b]; ++i) m.at(i, j) = cls[i];
      }
      h.act.insert_or_assign(std::make_pair(a, b), std::move(m));
    }
    if (h.total_dim() > 0) out.emplace(deg, std::move(h));
  }
  return out;
}

// --- standard modules -------------------------------------------------

RModule zero_module(std::shared_ptr<const Poset> p, const Field& f) {
  RModule m(std::move(p), f);
  init_zero_actions(m);
  return m;
}

namespace {
RModule support_one_module(std::shared_ptr<const Poset> p, const Field& f,
                           const std::vector<bool>& support) {
  RModule m(std::move(p), f);
  for (std::size_t x = 0; x < support.size(); ++x) m.dims[x] = support[x] ? 1 : 0;
  init_zero_actions(m);
  for (auto& [key, mat] : m.act)
    if (mat.rows() == 1 && mat.cols() == 1) mat.set_int(0, 0, 1);
  return m;
}
}  // namespace

RModule projective(std::shared_ptr<const Poset> p, const Field& f, int cell) {
  std::vector<bool> sup(p->size(), false);
  for (int y : p->up_set(cell)) sup[y] = true;
  return support_one_module(std::move(p), f, sup);
}

RModule injective(std::shared_ptr<const Poset> p, const Field& f, int cell) {
  std::vector<bool> sup(p->size(), false);
  for (int y : p->down_set(cell)) sup[y] = true;
  return support_one_module(std::move(p), f, sup);
}

RModule simple(std::shared_ptr<const Poset> p, const Field& f, int cell) {
  std::vector<bool> sup(p->size(), false);
  sup[cell] = true;
  return support_one_module(std::move(p), f, sup);
}

RModule ideal_j(std::shared_ptr<const Poset> p, const Field& f) {
  auto mins = p->minimal_elements();
  if (mins.size() != 1)
    throw std::invalid_argument("ideal_j: poset has no unique minimum");
  int bottom = mins[0];
  std::vector<int> filter;
  for (int x = 0; x < static_cast<int>(p->size()); ++x)
    if (x != bottom) filter.push_back(x);
  return sub_filter(projective(p, f, bottom), filter);
}

RModule sub_filter(const RModule& m, const std::vector<int>& filter) {
  std::vector<bool> in(m.poset->size(), false);
  for (int x : filter) in[x] = true;
  for (int x : filter)
    for (int y : m.poset->up_set(x))
      if (!in[y])
        throw std::invalid_argument("sub_filter: not an order filter: " +
                                    m.poset->id(x) + " is in, " +
                                    m.poset->id(y) + " above it is not");
  RModule s(m.poset, m.field);
  for (std::size_t x = 0; x < s.dims.size(); ++x)
    s.dims[x] = in[x] ? m.dims[x] : 0;
  init_zero_actions(s);
  for (auto [a, b] : m.poset->cover_pairs())
    if (in[a] && in[b])
      s.act.insert_or_assign(std::make_pair(a, b), m.cover_action(a, b));
  return s;
}

RModule sub_filter_up(const RModule& m, int cell) {
  return sub_filter(m, m.poset->up_set(cell));
}

RModule quotient_by_filter(const RModule& m, const std::vector<int>& filter) {
  std::vector<bool> in(m.poset->size(), false);
  for (int x : filter) in[x] = true;
  for (int x : filter)
    for (int y : m.poset->up_set(x))
      if (!in[y])
        throw std::invalid_argument("quotient_by_filter: not an order filter");
  RModule q(m.poset, m.field);
  for (std::size_t x = 0; x < q.dims.size(); ++x)
    q.dims[x] = in[x] ? 0 : m.dims[x];
  init_zero_actions(q);
  for (auto [a, b] : m.poset->cover_pairs())
    if (!in[a] && !in[b])
      q.act.insert_or_assign(std::make_pair(a, b), m.cover_action(a, b));
  return q;
}

RModule direct_sum(const std::vector<RModule>& ms) {
  if (ms.empty()) throw std::invalid_argument("direct_sum: empty list");
  RModule s(ms[0].poset, ms[0].field);
  for (const RModule& m : ms) {
    if (m.poset->size() != s.poset->size() || !(m.field == s.field))
      throw std::invalid_argument("direct_sum: mismatched summands");
    for (std::size_t x = 0; x < s.dims.size(); ++x) s.dims[x] += m.dims[x];
  }
  init_zero_actions(s);
  for (auto [a, b] : s.poset->cover_pairs()) {
    Matrix blk(s.field, s.dims[b], s.dims[a]);
    std::size_t ro = 0, co = 0;
    for (const RModule& m : ms) {
      const Matrix& part = m.cover_action(a, b);
      for (std::size_t i = 0; i < part.rows(); ++i)
        for (std::size_t j = 0; j < part.cols(); ++j)
          blk.at(ro + i, co + j) = part.at(i, j);
      ro += m.dims[b];
      co += m.dims[a];
    }
    s.act.insert_or_assign(std::make_pair(a, b), std::move(blk));
  }
  return s;
}

RModule k_dual(const RModule& m, std::shared_ptr<const Poset> target) {
  if (target->size() != m.poset->size())
    throw std::invalid_argument("k_dual: target poset size mismatch");
  RModule d(std::move(target), m.field);
  d.dims = m.dims;
  init_zero_actions(d);
  for (auto [a, b] : m.poset->cover_pairs())
    d.act.insert_or_assign(std::make_pair(b, a),
                           m.cover_action(a, b).transpose());
  return d;
}

RModule k_dual(const RModule& m) {
  return k_dual(m, std::make_shared<const Poset>(m.poset->opposite()));
}

ModuleComplex k_dual(const ModuleComplex& mc,
                     std::shared_ptr<const Poset> target) {
  ModuleComplex out(target, mc.field);
  for (const auto& [i, t] : mc.terms) out.terms.emplace(-i, k_dual(t, target));
  for (const auto& [i, f] : mc.d) {
    ModuleMap g;
    for (const Matrix& c : f.comp) g.comp.push_back(c.transpose());
    out.d.emplace(-(i + 1), std::move(g));
  }
  return out;
}

RModule random_module(std::shared_ptr<const Poset> p, const Field& f,
                      std::uint64_t seed, std::size_t max_dim) {
  std::mt19937_64 rng(seed);
  auto rand_scalar = [&]() {
    if (f.spec().kind == FieldKind::Rationals)
      return f.from_int(static_cast<long>(rng() % 5) - 2);
    return f.from_int(static_cast<long>(rng() % f.spec().p));
  };
  RModule m(p, f);
  for (std::size_t x = 0; x < m.dims.size(); ++x)
    m.dims[x] = rng() % (max_dim + 1);
  init_zero_actions(m);
  // Fill cover matrices level by level. The matrices into one element are
  // jointly constrained by path independence, a homogeneous linear system
  // in their entries; sample a random point of its kernel.
  for (int u : p->linear_extension()) {
    const auto& below = p->covers_down(u);
    if (below.empty()) continue;
    std::vector<std::size_t> offset(below.size());
    std::size_t nvars = 0;
    for (std::size_t k = 0; k < below.size(); ++k) {
      offset[k] = nvars;
      nvars += m.dims[u] * m.dims[below[k]];
    }
    auto var = [&](std::size_t k, std::size_t r, std::size_t j) {
      return offset[k] + r * m.dims[below[k]] + j;
    };
    // Constraints: for covers l1, l2 below u and any common tau, the two
    // composites tau -> u agree.
    std::vector<Vec> rows;
    for (std::size_t k1 = 0; k1 < below.size(); ++k1)
      for (std::size_t k2 = k1 + 1; k2 < below.size(); ++k2)
        for (int tau = 0; tau < static_cast<int>(p->size()); ++tau) {
          if (!p->leq(tau, below[k1]) || !p->leq(tau, below[k2])) continue;
          Matrix b1 = m.action(tau, below[k1]);
          Matrix b2 = m.action(tau, below[k2]);
          for (std::size_t r = 0; r < m.dims[u]; ++r)
            for (std::size_t c = 0; c < m.dims[tau]; ++c) {
              Vec row(nvars, f.zero());
              for (std::size_t j = 0; j < m.dims[below[k1]]; ++j)
                row[var(k1, r, j)] = f.add(row[var(k1, r, j)], b1.at(j, c));
              for (std::size_t j = 0; j < m.dims[below[k2]]; ++j)
                row[var(k2, r, j)] =
                    f.sub(row[var(k2, r, j)], b2.at(j, c));
              rows.push_back(std::move(row));
            }
        }
    Vec x(nvars, f.zero());
    if (rows.empty()) {
      for (std::size_t i = 0; i < nvars; ++i) x[i] = rand_scalar();
    } else {
      Matrix con(f, rows.size(), nvars);
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < nvars; ++j) con.at(i, j) = rows[i][j];
      for (const Vec& kb : kernel_basis(con)) {
        Scalar c = rand_scalar();
        for (std::size_t i = 0; i < nvars; ++i)
          x[i] = f.add(x[i], f.mul(c, kb[i]));
      }
    }
    for (std::size_t k = 0; k < below.size(); ++k) {
      Matrix a(f, m.dims[u], m.dims[below[k]]);
      for (std::size_t r = 0; r < m.dims[u]; ++r)
        for (std::size_t j = 0; j < m.dims[below[k]]; ++j)
          a.at(r, j) = x[var(k, r, j)];
      m.act.insert_or_assign(std::make_pair(below[k], u), std::move(a));
    }
  }
  m.validate();
  return m;
}

// --- Hom machinery ----------------------------------------------------

HomBasis hom_space(const RModule& m, const RModule& n) {
  if (!(m.field == n.field) || m.poset->size() != n.poset->size())
    throw std::invalid_argument("hom_space: mismatched modules");
  const Field& f = m.field;
  std::size_t nvars = map_ambient_dim(m, n);
  std::vector<std::size_t> offset(m.dims.size());
  {
    std::size_t acc = 0;
    for (std::size_t x = 0; x < m.dims.size(); ++x) {
      offset[x] = acc;
      acc += m.dims[x] * n.dims[x];
    }
  }
  auto var = [&](std::size_t x, std::size_t i, std::size_t j) {
    return offset[x] + i * m.dims[x] + j;
  };
  // One block of equations per cover: N-action o f_a = f_b o M-action.
  std::vector<Vec> rows;
  for (auto [a, b] : m.poset->cover_pairs()) {
    const Matrix& am = m.cover_action(a, b);
    const Matrix& an = n.cover_action(a, b);
    for (std::size_t i = 0; i < n.dims[b]; ++i)
      for (std::size_t j = 0; j < m.dims[a]; ++j) {
        Vec row(nvars, f.zero());
        for (std::size_t t = 0; t < n.dims[a]; ++t)
          row[var(a, t, j)] = f.add(row[var(a, t, j)], an.at(i, t));
        for (std::size_t t = 0; t < m.dims[b]; ++t)
          row[var(b, i, t)] = f.sub(row[var(b, i, t)], am.at(t, j));
        rows.push_back(std::move(row));
      }
  }
  HomBasis hb;
  if (nvars == 0) return hb;
  Matrix con(f, rows.size(), nvars);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < nvars; ++j) con.at(i, j) = rows[i][j];
  for (const Vec& v : kernel_basis(con)) hb.basis.push_back(unflatten(v, m, n));
  return hb;
}

namespace {
// Coordinates of a map in a hom basis, both flattened against (src, dst).
Matrix maps_in_basis(const RModule& src, const RModule& dst,
                     const HomBasis& basis, const std::vector<ModuleMap>& maps) {
  const Field& f = src.field;
  std::size_t amb = map_ambient_dim(src, dst);
  std::vector<Vec> bvecs;
  for (const ModuleMap& b : basis.basis)
    bvecs.push_back(flatten_against(b, src, dst));
  Matrix out(f, basis.dim(), maps.size());
  for (std::size_t j = 0; j < maps.size(); ++j) {
    auto c = coordinates(f, amb, bvecs, flatten_against(maps[j], src, dst));
    if (!c)
      throw std::logic_error("maps_in_basis: map outside spanned hom space");
    for (std::size_t i = 0; i < basis.dim(); ++i) out.at(i, j) = (*c)[i];
  }
  return out;
}
}  // namespace

Matrix hom_post_compose(const RModule& m, const RModule& n, const RModule& n2,
                        const HomBasis& src, const HomBasis& dst,
                        const ModuleMap& g) {
  std::vector<ModuleMap> images;
  for (const ModuleMap& fb : src.basis) images.push_back(compose(m, fb, g));
  return maps_in_basis(m, n2, dst, images);
}

Matrix hom_pre_compose(const RModule& p, const RModule& p2, const RModule& n,
                       const HomBasis& src, const HomBasis& dst,
                       const ModuleMap& h) {
  std::vector<ModuleMap> images;
  for (const ModuleMap& fb : src.basis) images.push_back(compose(p2, h, fb));
  return maps_in_basis(p2, n, dst, images);
}

UHom u_hom(const RModule& m, const RModule& n) {
  const Field& f = m.field;
  auto p = m.poset;
  UHom out{RModule(p, f), {}};
  std::vector<RModule> subs;
  for (int x = 0; x < static_cast<int>(p->size()); ++x) {
    subs.push_back(sub_filter(m, p->up_set(x)));
    out.cell_basis.push_back(hom_space(subs[x], n));
    out.mod.dims[x] = out.cell_basis[x].dim();
  }
  init_zero_actions(out.mod);
  // Cover action = restriction of a map on M_{>=a} to M_{>=b}.
  for (auto [a, b] : p->cover_pairs()) {
    Matrix r(f, out.mod.dims[b], out.mod.dims[a]);
    std::size_t amb = map_ambient_dim(subs[b], n);
    std::vector<Vec> bvecs;
    for (const ModuleMap& bb : out.cell_basis[b].basis)
      bvecs.push_back(flatten_against(bb, subs[b], n));
    for (std::size_t j = 0; j < out.mod.dims[a]; ++j) {
      Vec v = flatten_against(out.cell_basis[a].basis[j], subs[b], n);
      auto c = coordinates(f, amb, bvecs, v);
      if (!c) throw std::logic_error("u_hom: restriction outside hom space");
      for (std::size_t i = 0; i < out.mod.dims[b]; ++i) r.at(i, j) = (*c)[i];
    }
    out.mod.act.insert_or_assign(std::make_pair(a, b), std::move(r));
  }
  return out;
}

namespace {
ModuleMap u_hom_induced(std::shared_ptr<const Poset> p, const Field& f,
                        const UHom& src, const UHom& dst,
                        const std::vector<std::size_t>& dst_src_dims,
                        const RModule& n2,
                        const std::function<ModuleMap(int, const ModuleMap&)>&
                            image_of) {
  ModuleMap out = zero_map(src.mod, dst.mod);
  for (int x = 0; x < static_cast<int>(p->size()); ++x) {
    // flatten shapes for Hom(dst-side submodule at x, n2)
    RModule shape(p, f);
    for (std::size_t y = 0; y < shape.dims.size(); ++y)
      shape.dims[y] = p->leq(x, static_cast<int>(y)) ? dst_src_dims[y] : 0;
    std::size_t amb = map_ambient_dim(shape, n2);
    std::vector<Vec> bvecs;
    for (const ModuleMap& bb : dst.cell_basis[x].basis)
      bvecs.push_back(flatten_against(bb, shape, n2));
    for (std::size_t j = 0; j < src.mod.dims[x]; ++j) {
      ModuleMap img = image_of(x, src.cell_basis[x].basis[j]);
      auto c = coordinates(f, amb, bvecs, flatten_against(img, shape, n2));
      if (!c) throw std::logic_error("u_hom induced map outside hom space");
      for (std::size_t i = 0; i < dst.mod.dims[x]; ++i)
        out.comp[x].at(i, j) = (*c)[i];
    }
  }
  return out;
}
}  // namespace

ModuleMap u_hom_post_compose(const RModule& m, const RModule& n,
                             const RModule& n2, const UHom& src,
                             const UHom& dst, const ModuleMap& g) {
  std::vector<std::size_t> msd = m.dims;
  return u_hom_induced(
      m.poset, m.field, src, dst, msd, n2,
      [&](int, const ModuleMap& fb) { return compose(m, fb, g); });
}

ModuleMap u_hom_pre_compose(const RModule& p, const RModule& p2,
                            const RModule& n, const UHom& src, const UHom& dst,
                            const ModuleMap& h) {
  std::vector<std::size_t> p2d = p2.dims;
  // fb is only defined on the filter at x; compose cellwise there and pad
  // with empty components elsewhere so shapes stay consistent.
  return u_hom_induced(
      p.poset, p.field, src, dst, p2d, n,
      [&](int x, const ModuleMap& fb) {
        ModuleMap img;
        for (int y = 0; y < static_cast<int>(p.poset->size()); ++y) {
          if (p.poset->leq(x, y))
            img.comp.push_back(fb.comp[y] * h.comp[y]);
          else
            img.comp.push_back(Matrix::zero(p.field, n.dims[y], 0));
        }
        return img;
      });
}

// --- resolutions ------------------------------------------------------

namespace {

struct CoverStep {
  RModule p;                     // projective cover
  ModuleMap to_target;           // P -> M
  std::vector<int> summands;     // cell per Re-summand, in column order
};

// Minimal projective cover of m: one Re_sigma per basis vector of
// (M / JM)_sigma, generators lifted to standard-basis complements of JM.
CoverStep projective_cover(const RModule& m) {
  auto p = m.poset;
  const Field& f = m.field;
  const int n = static_cast<int>(p->size());
  CoverStep step{RModule(p, f), {}, {}};
  std::vector<std::vector<Vec>> gens(n);  // chosen generators per cell
  for (int x = 0; x < n; ++x) {
    std::vector<Vec> jm;  // spanning set of (JM)_x
    for (int l : p->covers_down(x)) {
      const Matrix& a = m.cover_action(l, x);
      for (std::size_t j = 0; j < a.cols(); ++j) jm.push_back(a.col(j));
    }
    for (std::size_t idx : complement_indices(f, m.dims[x], jm)) {
      Vec g(m.dims[x], f.zero());
      g[idx] = f.one();
      gens[x].push_back(std::move(g));
      step.summands.push_back(x);
    }
  }
  std::vector<RModule> parts;
  std::vector<std::pair<int, Vec>> gen_list;  // (cell, generator) per summand
  for (int x = 0; x < n; ++x)
    for (const Vec& g : gens[x]) {
      parts.push_back(projective(p, f, x));
      gen_list.emplace_back(x, g);
    }
  step.p = parts.empty() ? zero_module(p, f) : direct_sum(parts);
  step.to_target = zero_map(step.p, m);
  std::vector<std::size_t> colcount(n, 0);
  for (const auto& [sigma, g] : gen_list) {
    for (int x : p->up_set(sigma)) {
      Vec img = m.action(sigma, x).apply(g);
      std::size_t col = colcount[x];
      for (std::size_t i = 0; i < m.dims[x]; ++i)
        step.to_target.comp[x].at(i, col) = img[i];
    }
    for (int x : p->up_set(sigma)) ++colcount[x];
  }
  return step;
}

// Kernel of a morphism as a module in its own basis, plus the inclusion.
struct KernelModule {
  RModule k;
  ModuleMap incl;  // K -> src
};

KernelModule kernel_module(const RModule& src, const RModule& dst,
                           const ModuleMap& f) {
  auto p = src.poset;
  const Field& fld = src.field;
  const int n = static_cast<int>(p->size());
  KernelModule out{RModule(p, fld), {}};
  std::vector<std::vector<Vec>> bases(n);
  for (int x = 0; x < n; ++x) {
    bases[x] = kernel_basis(f.comp[x]);
    out.k.dims[x] = bases[x].size();
  }
  init_zero_actions(out.k);
  out.incl = zero_map(out.k, src);
  for (int x = 0; x < n; ++x)
    for (std::size_t j = 0; j < bases[x].size(); ++j)
      for (std::size_t i = 0; i < src.dims[x]; ++i)
        out.incl.comp[x].at(i, j) = bases[x][j][i];
  for (auto [a, b] : p->cover_pairs()) {
    Matrix act(fld, out.k.dims[b], out.k.dims[a]);
    for (std::size_t j = 0; j < out.k.dims[a]; ++j) {
      Vec img = src.cover_action(a, b).apply(bases[a][j]);
      auto c = coordinates(fld, src.dims[b], bases[b], img);
      if (!c) throw std::logic_error("kernel_module: image leaves the kernel");
      for (std::size_t i = 0; i < out.k.dims[b]; ++i) act.at(i, j) = (*c)[i];
    }
    out.k.act.insert_or_assign(std::make_pair(a, b), std::move(act));
  }
  return out;
}

}  // namespace

ProjectiveResolution min_projective_resolution(const RModule& m) {
  ProjectiveResolution res;
  RModule cur = m;
  ModuleMap prev_incl;  // inclusion of the current syzygy into the last P
  bool have_incl = false;
  const std::size_t cap = m.poset->size() + 2;
  for (std::size_t step = 0; step <= cap; ++step) {
    CoverStep cs = projective_cover(cur);
    res.p.push_back(cs.p);
    res.summand_cells.push_back(cs.summands);
    if (!have_incl) {
      res.d.push_back(cs.to_target);  // P0 -> M
    } else {
      res.d.push_back(compose(cs.p, cs.to_target, prev_incl));
    }
    KernelModule km = kernel_module(cs.p, cur, cs.to_target);
    if (km.k.total_dim() == 0) return res;
    cur = km.k;
    prev_incl = km.incl;
    have_incl = true;
  }
  throw std::logic_error("min_projective_resolution: did not terminate");
}

InjectiveResolution min_injective_resolution(const RModule& m) {
  auto op = std::make_shared<const Poset>(m.poset->opposite());
  RModule md = k_dual(m, op);
  ProjectiveResolution pr = min_projective_resolution(md);
  InjectiveResolution out{ModuleComplex(m.poset, m.field), {}, {}};
  for (std::size_t i = 0; i < pr.p.size(); ++i) {
    out.cx.terms.emplace(static_cast<int>(i), k_dual(pr.p[i], m.poset));
    out.summand_cells.push_back(pr.summand_cells[i]);
  }
  for (std::size_t i = 1; i < pr.d.size(); ++i) {
    ModuleMap g;
    for (const Matrix& c : pr.d[i].comp) g.comp.push_back(c.transpose());
    out.cx.d.emplace(static_cast<int>(i - 1), std::move(g));
  }
  out.aug = ModuleMap{};
  for (const Matrix& c : pr.d[0].comp) out.aug.comp.push_back(c.transpose());
  return out;
}

// --- Ext --------------------------------------------------------------

std::map<int, std::size_t> ext(const RModule& m, const RModule& n,
                               ExtRoute route) {
  const Field& f = m.field;
  VectorComplex vc(f);
  if (route == ExtRoute::InjectiveRoute) {
    InjectiveResolution ir = min_injective_resolution(n);
    std::map<int, HomBasis> hb;
    for (const auto& [i, t] : ir.cx.terms) {
      hb.emplace(i, hom_space(m, t));
      vc.set_dim(i, hb.at(i).dim());
    }
    for (const auto& [i, g] : ir.cx.d)
      vc.set_differential(
          i, hom_post_compose(m, ir.cx.terms.at(i), ir.cx.terms.at(i + 1),
                              hb.at(i), hb.at(i + 1), g));
  } else {
    ProjectiveResolution pr = min_projective_resolution(m);
    std::vector<HomBasis> hb;
    for (std::size_t i = 0; i < pr.p.size(); ++i) {
      hb.push_back(hom_space(pr.p[i], n));
      vc.set_dim(static_cast<int>(i), hb[i].dim());
    }
    for (std::size_t i = 0; i + 1 < pr.p.size(); ++i)
      vc.set_differential(
          static_cast<int>(i),
          hom_pre_compose(pr.p[i], pr.p[i + 1], n, hb[i], hb[i + 1],
                          pr.d[i + 1]));
  }
  return vc.cohomology();
}

std::map<int, std::map<int, std::size_t>> u_ext(const RModule& m,
                                                const RModule& n,
                                                ExtRoute route,
                                                bool allow_non_semilattice) {
  if (route == ExtRoute::ProjectiveRoute && !allow_non_semilattice) {
    auto [ok, witness] = m.poset->is_meet_semilattice();
    if (!ok)
      throw std::invalid_argument(
          "u_ext: projective route requires a meet-semilattice; violated by (" +
          m.poset->id(witness->first) + ", " + m.poset->id(witness->second) +
          ")");
  }
  ModuleComplex cx(m.poset, m.field);
  if (route == ExtRoute::InjectiveRoute) {
    InjectiveResolution ir = min_injective_resolution(n);
    std::map<int, UHom> uh;
    for (const auto& [i, t] : ir.cx.terms) {
      uh.emplace(i, u_hom(m, t));
      cx.terms.emplace(i, uh.at(i).mod);
    }
    for (const auto& [i, g] : ir.cx.d)
      cx.d.emplace(i, u_hom_post_compose(m, ir.cx.terms.at(i),
                                         ir.cx.terms.at(i + 1), uh.at(i),
                                         uh.at(i + 1), g));
  } else {
    ProjectiveResolution pr = min_projective_resolution(m);
    std::vector<UHom> uh;
    for (std::size_t i = 0; i < pr.p.size(); ++i) {
      uh.push_back(u_hom(pr.p[i], n));
      cx.terms.emplace(static_cast<int>(i), uh[i].mod);
    }
    for (std::size_t i = 0; i + 1 < pr.p.size(); ++i)
      cx.d.emplace(static_cast<int>(i),
                   u_hom_pre_compose(pr.p[i], pr.p[i + 1], n, uh[i], uh[i + 1],
                                     pr.d[i + 1]));
  }
  return cx.cohomology_dims();
}

}  // namespace cellalg
