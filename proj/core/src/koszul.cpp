#include "cellalg/koszul.hpp"

#include "cellalg/linalg.hpp"

namespace cellalg {

KoszulCertificate koszul_certificate(const CellComplex& c,
                                     const FieldSpec& field) {
  Field f(field);
  auto p = c.shared_poset();
  KoszulCertificate cert;
  cert.koszul = true;
  for (int s = 0; s < static_cast<int>(p->size()); ++s) {
    ProjectiveResolution pr = min_projective_resolution(simple(p, f, s));
    SimpleResolutionReport rep;
    rep.cell = s;
    rep.length = pr.length();
    rep.linear = true;
    for (std::size_t i = 0; i < pr.summand_cells.size(); ++i) {
      std::vector<int> degs;
      for (int cell : pr.summand_cells[i]) {
        int deg = c.dim(cell) - c.dim(s);
        degs.push_back(deg);
        if (deg != static_cast<int>(i)) rep.linear = false;
      }
      rep.degrees.push_back(std::move(degs));
    }
    if (!rep.linear) cert.koszul = false;
    cert.per_simple.push_back(std::move(rep));
  }
  return cert;
}

QuadraticDualReport quadratic_dual_check(const CellComplex& c,
                                         const FieldSpec& field) {
  Field f(field);
  const Poset& p = c.poset();
  QuadraticDualReport rep;
  rep.orthogonal_match = true;
  rep.sign_twist_match = true;
  for (int top = 0; top < static_cast<int>(p.size()); ++top)
    for (int bot = 0; bot < static_cast<int>(p.size()); ++bot) {
      if (!p.less(bot, top) || c.dim(top) - c.dim(bot) != 2) continue;
      std::vector<int> mids;
      for (int m : p.covers_up(bot))
        if (p.leq(m, top)) mids.push_back(m);
      if (mids.size() != 2) continue;  // complex validation already failed
      ++rep.num_diamonds;
      // Path basis p_i = e(top,mid_i) (x) e(mid_i,bot); dual basis
      // q_i = e*(mid_i,bot) (x) e*(top,mid_i). Pairing of f (x) g with
      // v (x) w evaluates to f(w) * g(v).
      Matrix pairing(f, 2, 2);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          bool fw = mids[i] == mids[j];  // f = e*(mid_i,bot) vs w = e(mid_j,bot)
          bool gv = mids[i] == mids[j];  // g = e*(top,mid_i) vs v = e(top,mid_j)
          if (fw && gv) pairing.set_int(i, j, 1);
        }
      // relation r = p_1 - p_2; annihilator in the dual-path space
      Matrix constraint(f, 1, 2);
      for (int i = 0; i < 2; ++i)
        constraint.at(0, i) = f.sub(pairing.at(i, 0), pairing.at(i, 1));
      std::vector<Vec> ann = kernel_basis(constraint);
      // expected: the span of q_1 + q_2
      Vec plus{f.one(), f.one()};
      if (ann.size() != 1 || !coordinates(f, 2, ann, plus))
        rep.orthogonal_match = false;
      // sign-twisted image of r: eps(top,mid_i)eps(mid_i,bot)-weighted
      Vec mapped{
          f.mul(f.from_int(c.epsilon(top, mids[0])),
                f.from_int(c.epsilon(mids[0], bot))),
          f.neg(f.mul(f.from_int(c.epsilon(top, mids[1])),
                      f.from_int(c.epsilon(mids[1], bot))))};
      if (!coordinates(f, 2, ann, mapped)) rep.sign_twist_match = false;
    }
  rep.ok = rep.orthogonal_match && rep.sign_twist_match;
  return rep;
}

ModuleComplex df(const CellComplex& c, const RModule& m,
                 std::shared_ptr<const Poset> opposite) {
  return k_dual(dualize(c, m), std::move(opposite));
}

ModuleComplex dg(const CellComplex& c, const ModuleComplex& n_over_opposite) {
  return dualize(c, k_dual(n_over_opposite, c.shared_poset()));
}

ModuleComplex dg(const CellComplex& c, const RModule& n_over_opposite) {
  return dg(c, ModuleComplex::concentrated(n_over_opposite));
}

}  // namespace cellalg
