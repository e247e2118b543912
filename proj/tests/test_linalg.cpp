#include <doctest.h>

#include <cellalg/linalg.hpp>

using namespace cellalg;

namespace {

Matrix from_ints(const Field& f, std::size_t r, std::size_t c,
                 std::initializer_list<long> entries) {
  Matrix m(f, r, c);
  auto it = entries.begin();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set_int(i, j, *it++);
  return m;
}

// Deterministic pseudo-random matrix with small integer entries.
Matrix pseudo_random(const Field& f, std::size_t r, std::size_t c,
                     std::uint64_t seed) {
  Matrix m(f, r, c);
  std::uint64_t s = seed * 2654435761u + 12345;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      s = s * 6364136223846793005ull + 1442695040888963407ull;
      m.set_int(i, j, static_cast<long>((s >> 33) % 7) - 3);
    }
  return m;
}

}  // namespace

TEST_CASE("matrix arithmetic basics") {
  Field q(FieldSpec::rationals());
  Matrix a = from_ints(q, 2, 3, {1, 2, 3, 4, 5, 6});
  Matrix b = from_ints(q, 3, 2, {1, 0, 0, 1, 1, 1});
  Matrix ab = a * b;
  CHECK(ab.rows() == 2);
  CHECK(ab.cols() == 2);
  CHECK(q.equal(ab.at(0, 0), q.from_int(4)));
  CHECK(q.equal(ab.at(0, 1), q.from_int(5)));
  CHECK(q.equal(ab.at(1, 0), q.from_int(10)));
  CHECK(q.equal(ab.at(1, 1), q.from_int(11)));
  CHECK(a.transpose().transpose().equals(a));
  CHECK(Matrix::identity(q, 3).equals(Matrix::identity(q, 3)));
  CHECK(Matrix::zero(q, 2, 2).is_zero());
}

TEST_CASE("rref rank of a known matrix") {
  for (auto spec : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
    Field f(spec);
    Matrix m = from_ints(f, 3, 4, {1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 0, 1});
    CHECK(rank(m) == 2);
    auto k = kernel_basis(m);
    CHECK(k.size() == 2);
    for (const auto& v : k) {
      Vec mv = m.apply(v);
      for (const auto& x : mv) CHECK(f.is_zero(x));
    }
  }
}

TEST_CASE("rank equals rank of transpose; rank-nullity") {
  for (auto spec :
       {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(101)}) {
    Field f(spec);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      Matrix m = pseudo_random(f, 4, 6, seed);
      CHECK(rank(m) == rank(m.transpose()));
      CHECK(kernel_basis(m).size() + rank(m) == m.cols());
    }
  }
}

TEST_CASE("solve finds solutions iff consistent") {
  Field f(FieldSpec::prime(7));
  Matrix m = from_ints(f, 2, 2, {1, 2, 2, 4});  // rank 1
  Vec good = {f.from_int(3), f.from_int(6)};
  auto x = solve(m, good);
  REQUIRE(x.has_value());
  Vec mx = m.apply(*x);
  CHECK(f.equal(mx[0], good[0]));
  CHECK(f.equal(mx[1], good[1]));
  Vec bad = {f.from_int(1), f.from_int(0)};
  CHECK(!solve(m, bad).has_value());
}

TEST_CASE("coordinates and complement_indices") {
  Field q(FieldSpec::rationals());
  std::vector<Vec> basis = {{q.from_int(1), q.from_int(0), q.from_int(1)},
                            {q.from_int(0), q.from_int(1), q.from_int(1)}};
  Vec v = {q.from_int(2), q.from_int(3), q.from_int(5)};
  auto co = coordinates(q, 3, basis, v);
  REQUIRE(co.has_value());
  CHECK(q.equal((*co)[0], q.from_int(2)));
  CHECK(q.equal((*co)[1], q.from_int(3)));
  Vec outside = {q.from_int(1), q.from_int(0), q.from_int(0)};
  CHECK(!coordinates(q, 3, basis, outside).has_value());
  auto comp = complement_indices(q, 3, basis);
  CHECK(comp.size() == 1);
}

TEST_CASE("vector complex cohomology of the circle cochain complex") {
  // 0 -> k^3 -> k^3 -> 0, differential = coboundary of a 3-cycle graph.
  for (auto spec : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
    Field f(spec);
    VectorComplex c(f);
    c.set_dim(0, 3);
    c.set_dim(1, 3);
    Matrix d = from_ints(f, 3, 3, {-1, 1, 0, 0, -1, 1, 1, 0, -1});
    c.set_differential(0, d);
    c.validate();
    auto h = c.cohomology();
    CHECK(h == std::map<int, std::size_t>{{0, 1}, {1, 1}});
  }
}

TEST_CASE("cohomology is invariant under basis change") {
  Field q(FieldSpec::rationals());
  VectorComplex c(q);
  c.set_dim(0, 2);
  c.set_dim(1, 3);
  c.set_dim(2, 2);
  Matrix d0 = from_ints(q, 3, 2, {1, 0, 0, 0, 0, 0});
  Matrix d1 = from_ints(q, 2, 3, {0, 0, 1, 0, 0, 0});
  c.set_differential(0, d0);
  c.set_differential(1, d1);
  c.validate();
  auto h = c.cohomology();

  // Conjugate by invertible matrices in each degree.
  Matrix g0 = from_ints(q, 2, 2, {1, 1, 0, 1});
  Matrix g1 = from_ints(q, 3, 3, {1, 2, 0, 0, 1, 0, 3, 0, 1});
  Matrix g2 = from_ints(q, 2, 2, {2, 1, 1, 1});
  Matrix g0inv = from_ints(q, 2, 2, {1, -1, 0, 1});
  Matrix g1inv = from_ints(q, 3, 3, {1, -2, 0, 0, 1, 0, -3, 6, 1});
  Matrix g2inv = from_ints(q, 2, 2, {1, -1, -1, 2});
  CHECK((g0 * g0inv).equals(Matrix::identity(q, 2)));
  CHECK((g1 * g1inv).equals(Matrix::identity(q, 3)));
  CHECK((g2 * g2inv).equals(Matrix::identity(q, 2)));

  VectorComplex c2(q);
  c2.set_dim(0, 2);
  c2.set_dim(1, 3);
  c2.set_dim(2, 2);
  c2.set_differential(0, g1 * d0 * g0inv);
  c2.set_differential(1, g2 * d1 * g1inv);
  c2.validate();
  CHECK(c2.cohomology() == h);
}

TEST_CASE("cohomology space reduce gives coordinates modulo boundaries") {
  Field q(FieldSpec::rationals());
  VectorComplex c(q);
  c.set_dim(0, 1);
  c.set_dim(1, 2);
  Matrix d0 = from_ints(q, 2, 1, {1, 0});
  c.set_differential(0, d0);
  auto hs = cohomology_space(c, 1);
  CHECK(hs.reps.size() == 1);
  // (5, 3) should reduce to 3 * the class of (0, 1) modulo im d0 = span(1,0).
  Vec v = {q.from_int(5), q.from_int(3)};
  Vec r = hs.reduce(q, v);
  REQUIRE(r.size() == 1);
  Vec rep = hs.reps[0];
  CHECK(q.equal(q.mul(r[0], rep[1]), q.from_int(3)));
}
