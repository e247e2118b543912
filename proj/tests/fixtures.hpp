#ifndef CELLALG_TESTS_FIXTURES_HPP
#define CELLALG_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include <cellalg/cellcomplex.hpp>
#include <cellalg/io.hpp>

#ifndef CELLALG_TEST_DATA_DIR
#error "CELLALG_TEST_DATA_DIR must point at the test data directory"
#endif

namespace fixtures {

inline std::string data_path(const std::string& name) {
  return std::string(CELLALG_TEST_DATA_DIR) + "/" + name;
}

inline cellalg::CellComplex triangle() {
  return cellalg::load_complex(data_path("triangle.facets"));
}
inline cellalg::CellComplex simplex2() {
  return cellalg::load_complex(data_path("simplex2.facets"));
}
inline cellalg::CellComplex square() {
  return cellalg::load_complex(data_path("square.facets"));
}
inline cellalg::CellComplex rp2() {
  return cellalg::load_complex(data_path("rp2.facets"));
}
/// One 2-cell glued to a circle made of two edges and two vertices; the
/// smallest regular complex whose face poset is not a meet-semilattice.
inline cellalg::CellComplex disc2() {
  return cellalg::load_complex(data_path("disc2.poset.json"));
}

/// All five standard test complexes, in a fixed order.
inline std::vector<cellalg::CellComplex> all_five() {
  std::vector<cellalg::CellComplex> v;
  v.push_back(triangle());
  v.push_back(simplex2());
  v.push_back(disc2());
  v.push_back(square());
  v.push_back(rp2());
  return v;
}

inline std::vector<std::string> all_five_names() {
  return {"triangle-boundary", "full-2-simplex", "bigon-disc",
          "square-boundary", "projective-plane-6"};
}

}  // namespace fixtures

#endif
