#include "cellalg/dualize.hpp"

#include <stdexcept>
#include <tuple>

#include "cellalg/linalg.hpp"

namespace cellalg {

// --- OmegaComplex -----------------------------------------------------

OmegaComplex::OmegaComplex(const CellComplex& c) : c_(&c) {
  const Poset& p = c.poset();
  for (int s = 0; s < static_cast<int>(p.size()); ++s) {
    int deg = -c.dim(s);
    for (int t : p.down_set(s))
      for (int r : p.down_set(s)) basis_[deg].push_back({s, t, r});
  }
}

std::map<int, std::size_t> OmegaComplex::dims() const {
  std::map<int, std::size_t> out;
  for (const auto& [deg, b] : basis_) out[deg] = b.size();
  return out;
}

Matrix OmegaComplex::differential(const Field& f, int degree) const {
  auto src = basis_.find(degree);
  auto dst = basis_.find(degree + 1);
  std::size_t nr = dst == basis_.end() ? 0 : dst->second.size();
  std::size_t nc = src == basis_.end() ? 0 : src->second.size();
  Matrix m(f, nr, nc);
  if (nr == 0 || nc == 0) return m;
  std::map<std::tuple<int, int, int>, std::size_t> pos;
  for (std::size_t i = 0; i < nr; ++i) {
    const OmegaTriple& t = dst->second[i];
    pos[{t.sigma, t.tau, t.rho}] = i;
  }
  const Poset& p = c_->poset();
  for (std::size_t j = 0; j < nc; ++j) {
    const OmegaTriple& t = src->second[j];
    for (int s2 : p.covers_down(t.sigma)) {
      if (!p.leq(t.tau, s2) || !p.leq(t.rho, s2)) continue;
      m.at(pos.at({s2, t.tau, t.rho}), j) =
          f.from_int(c_->epsilon(t.sigma, s2));
    }
  }
  return m;
}

bool OmegaComplex::d_squared_is_zero(const Field& f) const {
  for (const auto& [deg, b] : basis_) {
    Matrix d1 = differential(f, deg);
    Matrix d2 = differential(f, deg + 1);
    if (d1.rows() != d2.cols()) continue;
    if (!(d2 * d1).is_zero()) return false;
  }
  return true;
}

std::map<int, std::size_t> OmegaComplex::column_cohomology(const Field& f,
                                                           int tau,
                                                           int rho) const {
  const Poset& p = c_->poset();
  VectorComplex vc(f);
  std::map<int, std::vector<int>> sigmas;  // degree -> cells above tau, rho
  int lo = 0, hi = 0;
  if (!basis_.empty()) {
    lo = basis_.begin()->first;
    hi = basis_.rbegin()->first;
  }
  for (int deg = lo; deg <= hi; ++deg) {
    auto& v = sigmas[deg];
    for (int s = 0; s < static_cast<int>(p.size()); ++s)
      if (-c_->dim(s) == deg && p.leq(tau, s) && p.leq(rho, s)) v.push_back(s);
    vc.set_dim(deg, v.size());
  }
  for (int deg = lo; deg < hi; ++deg) {
    const auto& src = sigmas[deg];
    const auto& dst = sigmas[deg + 1];
    Matrix m(f, dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j)
      for (std::size_t i = 0; i < dst.size(); ++i)
        if (c_->epsilon(src[j], dst[i]) != 0)
          m.at(i, j) = f.from_int(c_->epsilon(src[j], dst[i]));
    vc.set_differential(deg, m);
  }
  return vc.cohomology();
}

// --- the duality functor ----------------------------------------------

namespace {

// One basis generator of the dual complex: complex degree t of the source,
// the cell sigma whose injective hull it lives in, and a dual index into
// the source component at sigma.
struct DualGen {
  int t, sigma;
  std::size_t l;
};

struct DualLayout {
  // total degree -> ordered generators
  std::map<int, std::vector<DualGen>> gens;
  // total degree -> cell -> positions of the generators with sigma >= cell
  std::map<int, std::vector<std::vector<std::size_t>>> at_cell;
};

DualLayout layout_dual(const CellComplex& c, const ModuleComplex& mc) {
  DualLayout out;
  const Poset& p = c.poset();
  for (const auto& [t, term] : mc.terms)
    for (int s = 0; s < static_cast<int>(p.size()); ++s)
      for (std::size_t l = 0; l < term.dims[s]; ++l)
        out.gens[-c.dim(s) - t].push_back({t, s, l});
  if (out.gens.empty()) return out;
  // materialize every degree in the range: a module can have no generators
  // in an intermediate degree (e.g. nothing supported in one dimension)
  const int nlo = out.gens.begin()->first;
  const int nhi = out.gens.rbegin()->first;
  for (int n = nlo; n <= nhi; ++n) {
    auto& gens = out.gens[n];
    auto& ac = out.at_cell[n];
    ac.assign(p.size(), {});
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (int x : p.down_set(gens[g].sigma)) ac[x].push_back(g);
  }
  return out;
}

std::size_t pos_in(const std::vector<std::size_t>& cell_gens, std::size_t g) {
  for (std::size_t i = 0; i < cell_gens.size(); ++i)
    if (cell_gens[i] == g) return i;
  throw std::logic_error("dualize: generator not present at cell");
}

}  // namespace

ModuleComplex dualize(const CellComplex& c, const ModuleComplex& mc) {
  const Poset& p = c.poset();
  const Field& f = mc.field;
  ModuleComplex out(mc.poset, f);
  if (mc.terms.empty()) return out;
  DualLayout lay = layout_dual(c, mc);
  int nlo = lay.gens.empty() ? 0 : lay.gens.begin()->first;
  int nhi = lay.gens.empty() ? 0 : lay.gens.rbegin()->first;
  for (int n = nlo; n <= nhi; ++n) {
    RModule term(mc.poset, f);
    const auto& gens = lay.gens[n];
    const auto& ac = lay.at_cell[n];
    for (int x = 0; x < static_cast<int>(p.size()); ++x)
      term.dims[x] = ac[x].size();
    // cover actions: identity on the generators surviving upward
    for (auto [a, b] : p.cover_pairs()) {
      Matrix m(f, ac[b].size(), ac[a].size());
      for (std::size_t i = 0; i < ac[b].size(); ++i)
        m.at(i, pos_in(ac[a], ac[b][i])) = f.one();
      term.act.emplace(std::make_pair(a, b), std::move(m));
    }
    (void)gens;
    out.terms.emplace(n, std::move(term));
  }
  // differential: a signed face map within each source term plus the
  // transposed source differential, with an internal-degree sign so the
  // two branches anticommute.
  for (int n = nlo; n < nhi; ++n) {
    const auto& sg = lay.gens[n];
    const auto& dg = lay.gens[n + 1];
    std::map<std::tuple<int, int, std::size_t>, std::size_t> dpos;
    for (std::size_t g = 0; g < dg.size(); ++g)
      dpos[{dg[g].t, dg[g].sigma, dg[g].l}] = g;
    // global (generator x generator) coefficients, then restrict per cell
    Matrix glob(f, dg.size(), sg.size());
    for (std::size_t j = 0; j < sg.size(); ++j) {
      const DualGen& s = sg[j];
      const RModule& term = mc.terms.at(s.t);
      // face branch: sigma' a codim-1 face of sigma, same t
      for (int s2 : p.covers_down(s.sigma)) {
        const Matrix& a = term.action(s2, s.sigma);
        Scalar eps = f.from_int(c.epsilon(s.sigma, s2));
        for (std::size_t l2 = 0; l2 < term.dims[s2]; ++l2) {
          auto it = dpos.find({s.t, s2, l2});
          if (it == dpos.end()) continue;
          glob.at(it->second, j) =
              f.add(glob.at(it->second, j), f.mul(eps, a.at(s.l, l2)));
        }
      }
      // transposed-differential branch: same sigma, t -> t-1
      auto dit = mc.d.find(s.t - 1);
      if (dit != mc.d.end()) {
        const Matrix& del = dit->second.comp[s.sigma];
        int ideg = n + s.t;  // internal degree of the source block
        Scalar sign = f.from_int(ideg % 2 == 0 ? 1 : -1);
        for (std::size_t l2 = 0; l2 < del.cols(); ++l2) {
          auto it = dpos.find({s.t - 1, s.sigma, l2});
          if (it == dpos.end()) continue;
          glob.at(it->second, j) =
              f.add(glob.at(it->second, j), f.mul(sign, del.at(s.l, l2)));
        }
      }
    }
    ModuleMap dm;
    const auto& sac = lay.at_cell[n];
    const auto& dac = lay.at_cell[n + 1];
    for (int x = 0; x < static_cast<int>(p.size()); ++x) {
      Matrix m(f, dac[x].size(), sac[x].size());
      for (std::size_t i = 0; i < dac[x].size(); ++i)
        for (std::size_t j = 0; j < sac[x].size(); ++j)
          m.at(i, j) = glob.at(dac[x][i], sac[x][j]);
      dm.comp.push_back(std::move(m));
    }
    out.d.emplace(n, std::move(dm));
  }
  return out;
}

ModuleComplex dualize(const CellComplex& c, const RModule& m) {
  return dualize(c, ModuleComplex::concentrated(m));
}

ExtOmega ext_against_omega(const CellComplex& c, const ModuleComplex& mc) {
  ModuleComplex d = dualize(c, mc);
  ExtOmega out;
  out.table = d.cohomology_dims();
  out.modules = d.cohomology_modules();
  return out;
}

ExtOmega ext_against_omega(const CellComplex& c, const RModule& m) {
  return ext_against_omega(c, ModuleComplex::concentrated(m));
}

// --- cohomology flavors -----------------------------------------------

std::map<int, std::size_t> local_cohomology(const CellComplex& c,
                                            const RModule& m) {
  return ext(simple(m.poset, m.field, c.empty_cell()), m,
             ExtRoute::InjectiveRoute);
}

std::map<int, std::size_t> sheaf_cohomology(const CellComplex& c,
                                            const RModule& m) {
  std::map<int, std::size_t> h = local_cohomology(c, m);
  auto at = [&](int i) {
    auto it = h.find(i);
    return it == h.end() ? std::size_t{0} : it->second;
  };
  std::map<int, std::size_t> out;
  std::size_t h0 = m.dims[c.empty_cell()] - at(0) + at(1);
  if (h0 > 0) out[0] = h0;
  for (const auto& [i, v] : h)
    if (i >= 2 && v > 0) out[i - 1] = v;
  return out;
}

std::map<int, std::size_t> sheaf_cohomology_cellular(const CellComplex& c,
                                                     const RModule& m) {
  const Poset& p = c.poset();
  const Field& f = m.field;
  const int d = c.dim();
  VectorComplex vc(f);
  std::map<int, std::vector<int>> cells;  // dimension -> cells, index order
  for (int i = 0; i <= d; ++i) {
    auto& v = cells[i];
    for (int x = 0; x < static_cast<int>(p.size()); ++x)
      if (c.dim(x) == i) v.push_back(x);
    std::size_t dim = 0;
    for (int x : v) dim += m.dims[x];
    vc.set_dim(i, dim);
  }
  for (int i = 0; i < d; ++i) {
    const auto& src = cells[i];
    const auto& dst = cells[i + 1];
    std::vector<std::size_t> soff(src.size()), doff(dst.size());
    std::size_t acc = 0;
    for (std::size_t k = 0; k < src.size(); ++k) {
      soff[k] = acc;
      acc += m.dims[src[k]];
    }
    std::size_t scols = acc;
    acc = 0;
    for (std::size_t k = 0; k < dst.size(); ++k) {
      doff[k] = acc;
      acc += m.dims[dst[k]];
    }
    Matrix mat(f, acc, scols);
    for (std::size_t ks = 0; ks < src.size(); ++ks)
      for (std::size_t kd = 0; kd < dst.size(); ++kd) {
        int e = c.epsilon(dst[kd], src[ks]);
        if (e == 0) continue;
        const Matrix& a = m.cover_action(src[ks], dst[kd]);
        Scalar eps = f.from_int(e);
        for (std::size_t r = 0; r < a.rows(); ++r)
          for (std::size_t cc = 0; cc < a.cols(); ++cc)
            mat.at(doff[kd] + r, soff[ks] + cc) = f.mul(eps, a.at(r, cc));
      }
    vc.set_differential(i, mat);
  }
  return vc.cohomology();
}

std::map<int, std::size_t> compact_cohomology(const CellComplex& c,
                                              const RModule& m,
                                              const std::vector<int>& filter) {
  for (int x : filter)
    if (x == c.empty_cell())
      throw ValidationError(
          "compact_cohomology: the empty cell cannot be in an open filter");
  std::map<int, std::size_t> h = local_cohomology(c, sub_filter(m, filter));
  std::map<int, std::size_t> out;
  for (const auto& [i, v] : h)
    if (i >= 1 && v > 0) out[i - 1] = v;
  return out;
}

std::map<int, std::size_t> open_cohomology(const CellComplex& c,
                                           const RModule& m,
                                           const std::vector<int>& filter) {
  for (int x : filter)
    if (x == c.empty_cell())
      throw ValidationError(
          "open_cohomology: the empty cell cannot be in an open filter");
  ModuleComplex dm = dualize(c, m);
  ModuleComplex restricted(dm.poset, dm.field);
  for (const auto& [i, t] : dm.terms)
    restricted.terms.emplace(i, sub_filter(t, filter));
  std::vector<bool> in(c.num_cells(), false);
  for (int x : filter) in[x] = true;
  for (const auto& [i, f] : dm.d) {
    ModuleMap g;
    for (int x = 0; x < static_cast<int>(c.num_cells()); ++x) {
      if (in[x])
        g.comp.push_back(f.comp[x]);
      else
        g.comp.push_back(Matrix::zero(dm.field, 0, 0));
    }
    restricted.d.emplace(i, std::move(g));
  }
  ModuleComplex dd = dualize(c, restricted);
  std::map<int, std::size_t> out;
  for (const auto& [deg, h] : dd.at_cell(c.empty_cell()).cohomology())
    out[deg] = h;
  return out;
}

AuslanderReport auslander_report(const CellComplex& c, const RModule& m) {
  if (m.is_zero())
    throw std::invalid_argument("auslander_report: zero module");
  AuslanderReport rep;
  int top = -1000;
  for (int x = 0; x < static_cast<int>(c.num_cells()); ++x)
    if (m.dims[x] > 0) top = std::max(top, c.dim(x));
  rep.j_omega = -top;
  ExtOmega eo = ext_against_omega(c, m);
  rep.first_nonzero = eo.table.empty() ? 0 : eo.table.begin()->first;
  bool pattern = true;
  for (const auto& [deg, row] : eo.table)
    for (const auto& [cell, dim] : row)
      if (dim > 0 && c.dim(cell) > -deg) pattern = false;
  rep.holds = pattern && !eo.table.empty() && rep.first_nonzero == rep.j_omega;
  return rep;
}

}  // namespace cellalg
