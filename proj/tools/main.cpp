// Command-line surface for the cell-complex module-algebra library.
//
// Exit codes: 0 success, 1 usage error, 2 invalid input,
// 3 internal invariant failure (a cross-check that must hold failed).

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <cellalg/cellcomplex.hpp>
#include <cellalg/classify.hpp>
#include <cellalg/dualize.hpp>
#include <cellalg/io.hpp>
#include <cellalg/koszul.hpp>
#include <cellalg/repalg.hpp>

using nlohmann::json;
using namespace cellalg;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitInvariantFailure = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvariantFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FieldSpec parse_field(const std::string& s) {
  auto f = FieldSpec::parse(s);
  if (!f) throw UsageError("bad field spec '" + s + "' (use q or f<p>)");
  return *f;
}

std::vector<int> parse_cells(const CellComplex& c, const std::string& list) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    auto comma = list.find(',', pos);
    std::string id = list.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!id.empty()) {
      auto idx = c.poset().find(id);
      if (!idx) throw ValidationError("unknown cell id: " + id);
      out.push_back(*idx);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<int> parse_filter(const CellComplex& c, const std::string& list,
                              bool closure) {
  std::vector<int> cells = parse_cells(c, list);
  for (int x : cells)
    if (x == c.empty_cell())
      throw ValidationError("the cell " + kEmptyCell +
                            " cannot be part of an open filter");
  if (closure) {
    std::vector<bool> in(c.num_cells(), false);
    for (int x : cells)
      for (int y : c.open_star(x)) in[y] = true;
    cells.clear();
    for (int y = 0; y < static_cast<int>(c.num_cells()); ++y)
      if (in[y]) cells.push_back(y);
    return cells;
  }
  if (!c.is_order_filter(cells)) {
    std::vector<bool> in(c.num_cells(), false);
    for (int x : cells) in[x] = true;
    for (int x : cells)
      for (int y : c.open_star(x))
        if (!in[y])
          throw ValidationError("filter is not upward closed: contains " +
                                c.poset().id(x) + " but not " +
                                c.poset().id(y) +
                                " (pass --closure to close it)");
  }
  return cells;
}

json table_to_json(const std::map<int, std::size_t>& t) {
  json j = json::object();
  for (const auto& [d, n] : t) j[std::to_string(d)] = n;
  return j;
}

json cell_table_to_json(const CellComplex& c,
                        const std::map<int, std::map<int, std::size_t>>& t) {
  json j = json::object();
  for (const auto& [d, row] : t) {
    json r = json::object();
    for (const auto& [cell, n] : row) r[c.poset().id(cell)] = n;
    j[std::to_string(d)] = std::move(r);
  }
  return j;
}

void emit(const json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  // tsv: flatten one level of nesting
  for (const auto& [k, v] : j.items()) {
    if (v.is_object())
      for (const auto& [k2, v2] : v.items())
        std::cout << k << '\t' << k2 << '\t' << v2.dump() << "\n";
    else
      std::cout << k << '\t' << v.dump() << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"exact-arithmetic module algebra over face posets of regular cell complexes"};
  app.require_subcommand(1);
  std::string file, field_str = "q", format = "json", module_spec, filter_str,
                    region_str;
  bool closure = false;

  auto add_common = [&](CLI::App* sub, bool with_field = true) {
    sub->add_option("file", file, "complex file (facet text or poset JSON)")
        ->required();
    if (with_field) sub->add_option("--field", field_str, "q or f<p>");
    sub->add_option("--format", format, "json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
  };

  auto* validate = app.add_subcommand("validate", "check regularity of a complex");
  add_common(validate, false);

  auto* homology = app.add_subcommand("homology", "cellular homology");
  add_common(homology);
  homology->add_option("--region", region_str,
                       "comma-separated cells (closed subcomplex, or open filter with --compact)");
  bool compact = false;
  homology->add_flag("--compact", compact, "compactly supported cohomology of an open filter");
  homology->add_flag("--closure", closure, "upward-close the filter");

  auto* mobius = app.add_subcommand("mobius", "Mobius function against the adjoined maximum, two routes");
  add_common(mobius, false);

  auto* cohomology = app.add_subcommand("cohomology", "cohomology of a module's sheaf");
  add_common(cohomology);
  cohomology->add_option("--module", module_spec, "module spec")->required();
  bool mode_local = false, mode_sheaf = false, mode_compact = false,
       mode_open = false;
  cohomology->add_flag("--local", mode_local, "supported at the minimum");
  cohomology->add_flag("--sheaf", mode_sheaf, "of the whole space");
  cohomology->add_flag("--compact", mode_compact, "compact support on --filter");
  cohomology->add_flag("--open", mode_open, "ordinary on --filter");
  cohomology->add_option("--filter", filter_str, "comma-separated open filter cells");
  cohomology->add_flag("--closure", closure, "upward-close the filter");

  auto* dualize_cmd = app.add_subcommand("dualize", "cohomology against the dualizing complex");
  add_common(dualize_cmd);
  dualize_cmd->add_option("--module", module_spec, "module spec")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Cohen-Macaulay / Buchsbaum / Gorenstein* report");
  add_common(classify_cmd);

  auto* koszul_cmd = app.add_subcommand("koszul", "Koszulness certificate and quadratic dual check");
  add_common(koszul_cmd);

  auto* selftest = app.add_subcommand("selftest", "run the duality invariant suite on random modules");
  add_common(selftest);
  std::uint64_t seed = 1;
  std::size_t trials = 3;
  selftest->add_option("--seed", seed, "base RNG seed");
  selftest->add_option("--trials", trials, "number of random modules");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (validate->parsed()) {
    try {
      CellComplex c = load_complex(file);
      json j{{"valid", true},
             {"cells", c.num_cells()},
             {"dim", c.dim()},
             {"simplicial", c.is_simplicial()}};
      emit(j, format);
    } catch (const ValidationError& e) {
      json j{{"valid", false}, {"error", e.what()}};
      emit(j, format);
      std::cerr << "invalid: " << e.what() << "\n";
      return kExitInvalidInput;
    }
    return 0;
  }

  CellComplex c = load_complex(file);
  FieldSpec fs = parse_field(field_str);
  Field f(fs);

  if (homology->parsed()) {
    json j;
    if (compact) {
      if (region_str.empty())
        throw UsageError("--compact needs --region with an open filter");
      auto filter = parse_filter(c, region_str, closure);
      j = {{"field", fs.name()},
           {"compact_cohomology",
            table_to_json(compact_support_cohomology(c, filter, fs))}};
    } else {
      std::vector<int> region;
      if (region_str.empty()) {
        for (int x = 0; x < static_cast<int>(c.num_cells()); ++x)
          region.push_back(x);
      } else {
        region = parse_cells(c, region_str);
        if (!c.is_downset(region))
          throw ValidationError("--region must be a closed (downward) cell set");
      }
      BettiTable b = cellular_homology(c, region, fs);
      j = {{"field", fs.name()},
           {"reduced", table_to_json(b.reduced)},
           {"unreduced", table_to_json(b.unreduced)}};
    }
    emit(j, format);
    return 0;
  }

  if (mobius->parsed()) {
    MobiusHatTable t = mobius_hat(c);
    json co = json::object(), re = json::object();
    for (const auto& [cell, v] : t.cohomological) co[c.poset().id(cell)] = v;
    for (const auto& [cell, v] : t.recursive) re[c.poset().id(cell)] = v;
    auto bad = mobius_cells_check(c);
    json j{{"agreement", t.agree},
           {"cohomological", co},
           {"recursive", re},
           {"interval_closed_form", !bad}};
    emit(j, format);
    if (!t.agree || bad)
      throw InvariantFailure("Mobius routes disagree");
    return 0;
  }

  if (cohomology->parsed()) {
    int modes = mode_local + mode_sheaf + mode_compact + mode_open;
    if (modes != 1)
      throw UsageError("choose exactly one of --local/--sheaf/--compact/--open");
    RModule m = resolve_module_spec(c, fs, module_spec);
    std::map<int, std::size_t> t;
    std::string kind;
    if (mode_local) {
      t = local_cohomology(c, m);
      kind = "local";
    } else if (mode_sheaf) {
      t = sheaf_cohomology(c, m);
      kind = "sheaf";
      if (t != sheaf_cohomology_cellular(c, m))
        throw InvariantFailure("sheaf cohomology routes disagree");
    } else {
      if (filter_str.empty())
        throw UsageError("--compact/--open need --filter");
      auto filter = parse_filter(c, filter_str, closure);
      if (mode_compact) {
        t = compact_cohomology(c, m, filter);
        kind = "compact";
      } else {
        t = open_cohomology(c, m, filter);
        kind = "open";
      }
    }
    json j{{"field", fs.name()}, {"kind", kind}, {"table", table_to_json(t)}};
    emit(j, format);
    return 0;
  }

  if (dualize_cmd->parsed()) {
    RModule m = resolve_module_spec(c, fs, module_spec);
    ExtOmega eo = ext_against_omega(c, m);
    json j{{"field", fs.name()},
           {"table", cell_table_to_json(c, eo.table)}};
    if (!m.is_zero()) {
      AuslanderReport rep = auslander_report(c, m);
      j["auslander"] = {{"j_omega", rep.j_omega},
                        {"first_nonzero", rep.first_nonzero},
                        {"holds", rep.holds}};
    }
    emit(j, format);
    return 0;
  }

  if (classify_cmd->parsed()) {
    auto cm = is_cohen_macaulay(c, fs);
    auto bb = is_buchsbaum(c, fs);
    auto gs = is_gorenstein_star(c, fs);
    if (gs.link_oracle && *gs.link_oracle != gs.verdict)
      throw InvariantFailure("Gorenstein* verdicts disagree with the link oracle");
    MobiusHatTable mh = mobius_hat(c);
    if (!mh.agree) throw InvariantFailure("Mobius routes disagree");
    json mo = json::object();
    for (const auto& [cell, v] : mh.recursive) mo[c.poset().id(cell)] = v;
    json wits = json::array();
    for (const auto& w : cm.witnesses)
      wits.push_back({{"degree", w.degree},
                      {"cell", c.poset().id(w.cell)},
                      {"dim", w.dim}});
    json j{{"field", fs.name()},
           {"cm", cm.verdict},
           {"buchsbaum", bb.verdict},
           {"gorenstein_star", gs.verdict},
           {"mobius", mo},
           {"witnesses", wits}};
    emit(j, format);
    return 0;
  }

  if (koszul_cmd->parsed()) {
    KoszulCertificate kc = koszul_certificate(c, fs);
    QuadraticDualReport qd = quadratic_dual_check(c, fs);
    json per = json::array();
    for (const auto& r : kc.per_simple) {
      json degs = json::array();
      for (const auto& step : r.degrees) degs.push_back(step);
      per.push_back({{"cell", c.poset().id(r.cell)},
                     {"length", r.length},
                     {"degrees", degs}});
    }
    json j{{"field", fs.name()},
           {"koszul", kc.koszul},
           {"quadratic_self_dual", qd.ok},
           {"per_simple", per}};
    emit(j, format);
    if (!kc.koszul || !qd.ok)
      throw InvariantFailure("Koszul self-duality check failed");
    return 0;
  }

  // selftest
  auto p = c.shared_poset();
  std::size_t pass_dd = 0, pass_serre = 0, pass_open = 0, pass_uhom = 0,
              pass_j = 0, pass_cell = 0;
  RModule rj = ideal_j(p, f);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    RModule m = random_module(p, f, seed + trial);
    ModuleComplex dm = dualize(c, m);
    ModuleComplex dd = dualize(c, dm);
    auto ddt = dd.cohomology_dims();
    bool ok = true;
    for (const auto& [d, row] : ddt)
      if (d != 0) ok = false;
    std::size_t tot = 0;
    if (ddt.count(0))
      for (const auto& [cell, n] : ddt[0]) {
        ok = ok && n == m.dims[cell];
        tot += n;
      }
    if (ok && tot == m.total_dim()) ++pass_dd;

    auto eo = dm.cohomology_dims();
    auto lc = local_cohomology(c, m);
    auto lookup = [](const std::map<int, std::size_t>& t, int i) {
      auto it = t.find(i);
      return it == t.end() ? std::size_t{0} : it->second;
    };
    auto lookup2 = [&](int i, int cell) -> std::size_t {
      auto it = eo.find(i);
      if (it == eo.end()) return 0;
      auto it2 = it->second.find(cell);
      return it2 == it->second.end() ? 0 : it2->second;
    };
    bool serre = true;
    for (int i = -c.dim() - 2; i <= c.dim() + 2; ++i)
      if (lookup2(i, c.empty_cell()) != lookup(lc, -i + 1)) serre = false;
    if (serre) ++pass_serre;

    bool open_ok = true;
    for (int s = 0; s < static_cast<int>(p->size()); ++s) {
      if (s == c.empty_cell()) continue;
      auto hc = compact_cohomology(c, m, c.open_star(s));
      for (int i = -c.dim() - 2; i <= c.dim() + 2; ++i)
        if (lookup2(i, s) != lookup(hc, -i)) open_ok = false;
    }
    if (open_ok) ++pass_open;

    // uHom against an injective hull has the hull's support pattern
    bool uh_ok = true;
    for (int s = 0; s < static_cast<int>(p->size()) && uh_ok; ++s) {
      UHom uh = u_hom(m, injective(p, f, s));
      for (int x = 0; x < static_cast<int>(p->size()); ++x) {
        std::size_t want = p->leq(x, s) ? m.dims[s] : 0;
        if (uh.mod.dims[x] != want) uh_ok = false;
      }
    }
    if (uh_ok) ++pass_uhom;

    auto sh = sheaf_cohomology(c, m);
    auto jroute = u_ext(rj, m, ExtRoute::InjectiveRoute);
    bool j_ok = true;
    for (int i = 1; i <= c.dim() + 2; ++i) {
      std::size_t lhs = 0;
      if (auto it = jroute.find(i); it != jroute.end())
        if (auto it2 = it->second.find(c.empty_cell()); it2 != it->second.end())
          lhs = it2->second;
      if (lhs != lookup(sh, i)) j_ok = false;
    }
    if (j_ok) ++pass_j;

    if (sh == sheaf_cohomology_cellular(c, m)) ++pass_cell;
  }
  json j{{"trials", trials},
         {"seed", seed},
         {"field", fs.name()},
         {"checks",
          {{"double_duality", pass_dd},
           {"serre_duality", pass_serre},
           {"open_set_duality", pass_open},
           {"uhom_injective_pattern", pass_uhom},
           {"section_ideal_route", pass_j},
           {"cellular_cross_check", pass_cell}}}};
  emit(j, format);
  bool all = pass_dd == trials && pass_serre == trials && pass_open == trials &&
             pass_uhom == trials && pass_j == trials && pass_cell == trials;
  if (!all) throw InvariantFailure("selftest invariant failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantFailure& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return kExitInvariantFailure;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariantFailure;
  }
}
