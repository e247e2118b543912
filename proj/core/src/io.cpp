#include "cellalg/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cellalg {

namespace {
using nlohmann::json;

json parse_json_or_throw(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw ValidationError(what + ": malformed JSON");
  return j;
}
}  // namespace

std::vector<std::vector<std::string>> parse_facets(std::istream& in) {
  std::vector<std::vector<std::string>> facets;
  std::string line;
  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos)
      line.erase(pos);
    std::istringstream ls(line);
    std::vector<std::string> facet;
    std::string v;
    while (ls >> v) facet.push_back(v);
    if (!facet.empty()) facets.push_back(std::move(facet));
  }
  if (facets.empty())
    throw ValidationError("facet file: no facets found");
  return facets;
}

PosetFileData parse_poset_json(const std::string& text) {
  json j = parse_json_or_throw(text, "poset file");
  PosetFileData data;
  if (!j.is_object() || !j.contains("cells") || !j.contains("covers"))
    throw ValidationError("poset file: need \"cells\" and \"covers\"");
  for (const auto& c : j.at("cells")) {
    if (!c.contains("id") || !c.contains("dim"))
      throw ValidationError("poset file: each cell needs \"id\" and \"dim\"");
    std::string id = c.at("id").get<std::string>();
    if (id == kEmptyCell)
      throw ValidationError("poset file: \"" + kEmptyCell +
                            "\" is synthesized and must not be listed");
    data.cells.emplace_back(id, c.at("dim").get<int>());
  }
  for (const auto& cv : j.at("covers")) {
    if (!cv.is_array() || cv.size() != 2)
      throw ValidationError("poset file: covers must be [lower, upper] pairs");
    data.covers.emplace_back(cv.at(0).get<std::string>(),
                             cv.at(1).get<std::string>());
  }
  if (j.contains("epsilon"))
    for (const auto& e : j.at("epsilon")) {
      int sign = e.at("sign").get<int>();
      if (sign != 1 && sign != -1)
        throw ValidationError("poset file: epsilon signs must be +-1");
      data.epsilon[{e.at("upper").get<std::string>(),
                    e.at("lower").get<std::string>()}] = sign;
    }
  return data;
}

CellComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return CellComplex::from_poset_data(parse_poset_json(text));
  std::istringstream fs(text);
  return CellComplex::from_facets(parse_facets(fs));
}

namespace {

Scalar parse_entry(const Field& f, const json& e) {
  if (e.is_number_integer()) return f.from_int(e.get<long>());
  if (e.is_string()) {
    std::string s = e.get<std::string>();
    auto slash = s.find('/');
    if (f.spec().kind == FieldKind::Rationals) {
      Scalar out;
      out.q = mpq_class(s);
      out.q.canonicalize();
      return out;
    }
    long num = std::stol(s.substr(0, slash));
    long den = slash == std::string::npos ? 1 : std::stol(s.substr(slash + 1));
    return f.div(f.from_int(num), f.from_int(den));
  }
  throw ValidationError("module file: entries must be integers or strings");
}

RModule module_from_json(const CellComplex& c, const Field& f,
                         const std::string& text) {
  json j = parse_json_or_throw(text, "module file");
  const Poset& p = c.poset();
  RModule m(c.shared_poset(), f);
  if (!j.contains("dims"))
    throw ValidationError("module file: missing \"dims\"");
  for (const auto& [id, v] : j.at("dims").items()) {
    auto idx = p.find(id);
    if (!idx) throw ValidationError("module file: unknown cell id " + id);
    m.dims[*idx] = v.get<std::size_t>();
  }
  for (auto [a, b] : p.cover_pairs())
    m.act.emplace(std::make_pair(a, b),
                  Matrix::zero(f, m.dims[b], m.dims[a]));
  if (j.contains("maps"))
    for (const auto& [key, rows] : j.at("maps").items()) {
      auto arrow = key.find("->");
      if (arrow == std::string::npos)
        throw ValidationError("module file: map keys look like lower->upper");
      auto lo = p.find(key.substr(0, arrow));
      auto hi = p.find(key.substr(arrow + 2));
      if (!lo || !hi)
        throw ValidationError("module file: unknown cell in map key " + key);
      auto it = m.act.find({*lo, *hi});
      if (it == m.act.end())
        throw ValidationError("module file: " + key + " is not a cover");
      Matrix mat(f, m.dims[*hi], m.dims[*lo]);
      if (rows.size() != mat.rows())
        throw ValidationError("module file: row count mismatch in " + key);
      for (std::size_t i = 0; i < mat.rows(); ++i) {
        if (rows.at(i).size() != mat.cols())
          throw ValidationError("module file: column count mismatch in " + key);
        for (std::size_t jj = 0; jj < mat.cols(); ++jj)
          mat.at(i, jj) = parse_entry(f, rows.at(i).at(jj));
      }
      it->second = std::move(mat);
    }
  try {
    m.validate();
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("module file: ") + e.what());
  }
  return m;
}

}  // namespace

RModule resolve_module_spec(const CellComplex& c, const FieldSpec& field,
                            const std::string& spec) {
  Field f(field);
  auto p = c.shared_poset();
  auto cell_of = [&](const std::string& id) {
    auto idx = c.poset().find(id);
    if (!idx) throw ValidationError("module spec: unknown cell id " + id);
    return *idx;
  };
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "projective") return projective(p, f, cell_of(rest));
  if (head == "injective") return injective(p, f, cell_of(rest));
  if (head == "simple") return simple(p, f, cell_of(rest));
  if (spec == "ideal-J") return ideal_j(p, f);
  if (spec == "module:Re-empty")
    return projective(p, f, c.empty_cell());
  if (head == "random") {
    try {
      return random_module(p, f, std::stoull(rest));
    } catch (const std::logic_error&) {
      throw ValidationError("module spec: bad seed in " + spec);
    }
  }
  std::ifstream in(spec);
  if (!in) throw ValidationError("module spec: not a builtin and cannot open file: " + spec);
  std::stringstream buf;
  buf << in.rdbuf();
  return module_from_json(c, f, buf.str());
}

std::string table_json(const std::map<int, std::size_t>& t) {
  json j = json::object();
  for (const auto& [deg, n] : t) j[std::to_string(deg)] = n;
  return j.dump();
}

std::string cell_table_json(
    const CellComplex& c, const std::map<int, std::map<int, std::size_t>>& t) {
  json j = json::object();
  for (const auto& [deg, row] : t) {
    json r = json::object();
    for (const auto& [cell, n] : row) r[c.poset().id(cell)] = n;
    j[std::to_string(deg)] = std::move(r);
  }
  return j.dump();
}

std::string table_tsv(const std::map<int, std::size_t>& t) {
  std::ostringstream out;
  out << "degree\tdim\n";
  for (const auto& [deg, n] : t) out << deg << '\t' << n << '\n';
  return out.str();
}

std::string cell_table_tsv(
    const CellComplex& c, const std::map<int, std::map<int, std::size_t>>& t) {
  std::ostringstream out;
  out << "degree\tcell\tdim\n";
  for (const auto& [deg, row] : t)
    for (const auto& [cell, n] : row)
      out << deg << '\t' << c.poset().id(cell) << '\t' << n << '\n';
  return out.str();
}

}  // namespace cellalg
