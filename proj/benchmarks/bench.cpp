// Microbenchmarks for the exact linear algebra kernels and the duality
// pipeline on the bundled test complexes.

#include <benchmark/benchmark.h>

#include <cellalg/dualize.hpp>
#include <cellalg/io.hpp>
#include <cellalg/linalg.hpp>
#include <cellalg/repalg.hpp>

using namespace cellalg;

namespace {

std::string data(const char* name) {
  return std::string(CELLALG_BENCH_DATA_DIR) + "/" + name;
}

Matrix dense_matrix(const Field& f, std::size_t n, std::uint64_t seed) {
  Matrix m(f, n, n);
  std::uint64_t s = seed;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      s = s * 6364136223846793005ull + 1442695040888963407ull;
      m.set_int(i, j, static_cast<long>((s >> 33) % 11) - 5);
    }
  return m;
}

void bm_rref(benchmark::State& state, FieldSpec fs) {
  Field f(fs);
  Matrix m = dense_matrix(f, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank());
}

void bm_kernel(benchmark::State& state, FieldSpec fs) {
  Field f(fs);
  Matrix m = dense_matrix(f, static_cast<std::size_t>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m).size());
}

void bm_dualize(benchmark::State& state, const char* file) {
  CellComplex c = load_complex(data(file));
  RModule m = projective(c.shared_poset(), Field{FieldSpec::rationals()},
                         c.empty_cell());
  for (auto _ : state) {
    ModuleComplex d = dualize(c, m);
    benchmark::DoNotOptimize(d.cohomology_dims());
  }
}

void bm_injective_resolution(benchmark::State& state, const char* file) {
  CellComplex c = load_complex(data(file));
  RModule m = random_module(c.shared_poset(), Field{FieldSpec::rationals()}, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(min_injective_resolution(m).length());
}

void bm_sheaf_cohomology(benchmark::State& state, const char* file) {
  CellComplex c = load_complex(data(file));
  RModule m = random_module(c.shared_poset(), Field{FieldSpec::prime(5)}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(sheaf_cohomology(c, m));
}

BENCHMARK_CAPTURE(bm_rref, rationals, FieldSpec::rationals())->Arg(32)->Arg(64);
BENCHMARK_CAPTURE(bm_rref, gf5, FieldSpec::prime(5))->Arg(64)->Arg(128);
BENCHMARK_CAPTURE(bm_kernel, rationals, FieldSpec::rationals())->Arg(32)->Arg(64);
BENCHMARK_CAPTURE(bm_kernel, gf5, FieldSpec::prime(5))->Arg(64)->Arg(128);
BENCHMARK_CAPTURE(bm_dualize, triangle, "triangle.facets");
BENCHMARK_CAPTURE(bm_dualize, projective_plane, "rp2.facets");
BENCHMARK_CAPTURE(bm_injective_resolution, triangle, "triangle.facets");
BENCHMARK_CAPTURE(bm_injective_resolution, projective_plane, "rp2.facets");
BENCHMARK_CAPTURE(bm_sheaf_cohomology, projective_plane, "rp2.facets");

}  // namespace

BENCHMARK_MAIN();
