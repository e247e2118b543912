#include <doctest.h>

#include <algorithm>
#include <cellalg/cellcomplex.hpp>
#include <cellalg/poset.hpp>

#include "fixtures.hpp"

using namespace cellalg;

namespace {

// 0 < a, b < 1: the four-element "diamond" lattice.
Poset diamond() {
  return Poset({"0", "a", "b", "1"},
               {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

}  // namespace

TEST_CASE("construction rejects duplicates and cycles") {
  CHECK_THROWS(Poset({"a", "a"}, {}));
  CHECK_THROWS(Poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}));
  CHECK_THROWS(Poset({"a"}, {{"a", "x"}}));
}

TEST_CASE("redundant covers are dropped with a flag") {
  Poset p({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(p.redundant_covers_dropped());
  CHECK(p.covers_up(p.index("a")) == std::vector<int>{p.index("b")});
  Poset clean({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(!clean.redundant_covers_dropped());
}

TEST_CASE("order queries on the diamond") {
  Poset p = diamond();
  int bot = p.index("0"), a = p.index("a"), b = p.index("b"), top = p.index("1");
  CHECK(p.leq(bot, top));
  CHECK(!p.leq(a, b));
  CHECK(p.less(bot, a));
  CHECK(!p.less(a, a));
  auto up = p.up_set(a);
  std::sort(up.begin(), up.end());
  CHECK(up == std::vector<int>{a, top});
  CHECK(p.down_set(bot) == std::vector<int>{bot});
  CHECK(p.maximal_elements() == std::vector<int>{top});
  CHECK(p.minimal_elements() == std::vector<int>{bot});
}

TEST_CASE("linear extension respects the order") {
  Poset p = fixtures::triangle().poset();
  auto ext = p.linear_extension();
  CHECK(ext.size() == p.size());
  std::vector<int> pos(p.size());
  for (std::size_t i = 0; i < ext.size(); ++i) pos[ext[i]] = static_cast<int>(i);
  for (auto [lo, hi] : p.cover_pairs()) CHECK(pos[lo] < pos[hi]);
}

TEST_CASE("mobius values on chains and the boolean lattice") {
  Poset chain({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(chain.mobius(0, 0) == 1);
  CHECK(chain.mobius(chain.index("a"), chain.index("b")) == -1);
  CHECK(chain.mobius(chain.index("a"), chain.index("c")) == 0);

  // Face poset of the full 2-simplex with @empty is the boolean lattice B3:
  // mu(@empty, sigma) = (-1)^{|sigma|}.
  const CellComplex s = fixtures::simplex2();
  const Poset& p = s.poset();
  for (int x = 0; x < static_cast<int>(p.size()); ++x) {
    long long expect = (s.dim(x) + 1) % 2 == 0 ? 1 : -1;
    CHECK(p.mobius(s.empty_cell(), x) == expect);
  }
  CHECK_THROWS(diamond().mobius(diamond().index("a"), diamond().index("b")));
}

TEST_CASE("mobius sums to zero over nontrivial intervals") {
  const CellComplex rp2 = fixtures::rp2();
  const Poset& p = rp2.poset();
  for (int x = 0; x < static_cast<int>(p.size()); ++x)
    for (int y = 0; y < static_cast<int>(p.size()); ++y) {
      if (!p.less(x, y)) continue;
      long long s = 0;
      for (int z = 0; z < static_cast<int>(p.size()); ++z)
        if (p.leq(x, z) && p.leq(z, y)) s += p.mobius(x, z);
      CHECK(s == 0);
    }
}

TEST_CASE("adjoin_top adds a maximum over all maximal elements") {
  Poset p = fixtures::triangle().poset();
  Poset hat = p.adjoin_top();
  CHECK(hat.size() == p.size() + 1);
  int top = hat.index("@top");
  CHECK(hat.maximal_elements() == std::vector<int>{top});
  CHECK(hat.covers_down(top).size() == p.maximal_elements().size());
  // Adjoining again still adds a fresh maximum.
  CHECK(hat.adjoin_top().size() == hat.size() + 1);
}

TEST_CASE("meet-semilattice detection and join") {
  const CellComplex s = fixtures::simplex2();
  const Poset& simplicial = s.poset();
  auto [ok, wit] = simplicial.is_meet_semilattice();
  CHECK(ok);
  CHECK(!wit.has_value());

  const CellComplex disc = fixtures::disc2();
  const Poset& bad = disc.poset();
  auto [ok2, wit2] = bad.is_meet_semilattice();
  CHECK(!ok2);
  REQUIRE(wit2.has_value());
  auto name = [&](int i) { return bad.id(i); };
  std::vector<std::string> pair = {name(wit2->first), name(wit2->second)};
  std::sort(pair.begin(), pair.end());
  CHECK(pair == std::vector<std::string>{"rho1", "rho2"});

  // join on the simplex: v1 join v2 = edge {1,2}
  int v1 = *s.cell_with_vertices({"1"});
  int v2 = *s.cell_with_vertices({"2"});
  auto j = simplicial.join(v1, v2);
  REQUIRE(j.has_value());
  CHECK(*j == *s.cell_with_vertices({"1", "2"}));
  // the disc's two vertices have two minimal upper bounds, so no join
  CHECK_THROWS_AS((void)bad.join(bad.index("rho1"), bad.index("rho2")),
                  std::logic_error);
}

TEST_CASE("opposite poset reverses covers") {
  Poset p = diamond();
  Poset op = p.opposite();
  CHECK(op.size() == p.size());
  CHECK(op.leq(op.index("1"), op.index("0")));
  CHECK(!op.leq(op.index("0"), op.index("1")));
  CHECK(op.opposite().leq(p.index("0"), p.index("1")));
}

TEST_CASE("chain enumeration") {
  Poset chain({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(chain.chains().size() == 7);  // 3 + 3 + 1
  CHECK(diamond().chains().size() == 4 + 5 + 2);  // sizes 1,2,3
}

TEST_CASE("order complex of a chain is a simplex; of the circle poset a circle") {
  Poset chain({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CellComplex oc = order_complex(chain);
  CHECK(oc.num_cells() == 8);  // B3 including @empty
  auto h = cellular_homology(oc, FieldSpec::rationals());
  CHECK(h.reduced.empty());

  // Proper part of the triangle-boundary face poset (drop @empty): its order
  // complex is the barycentric subdivision of the circle.
  const CellComplex t = fixtures::triangle();
  const Poset& p = t.poset();
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (i != t.empty_cell()) ids.push_back(p.id(i));
  for (auto [lo, hi] : p.cover_pairs())
    if (lo != t.empty_cell()) covers.emplace_back(p.id(lo), p.id(hi));
  CellComplex oc2 = order_complex(Poset(ids, covers));
  auto h2 = cellular_homology(oc2, FieldSpec::rationals());
  CHECK(h2.reduced == std::map<int, std::size_t>{{1, 1}});
}
