// Microbenchmarks for the hot paths: polynomial arithmetic, face-map
// expansion, boundary assembly, and both Smith reductions.  Fixtures are
// sized so a full run stays under a minute on one core.

#include <benchmark/benchmark.h>

#include "ybh/boundary.hpp"
#include "ybh/smith.hpp"

using namespace ybh;

namespace {

IntPoly dense_poly(int degree, int seed) {
  IntPoly p;
  long v = seed;
  for (int i = 0; i <= degree; ++i) {
    v = (v * 1103515245 + 12345) & 0x7fffffff;
    p += IntPoly(Int(v % 19 - 9)).shifted(i);
  }
  return p;
}

void bm_poly_mul(benchmark::State& state) {
  const IntPoly a = dense_poly(static_cast<int>(state.range(0)), 7);
  const IntPoly b = dense_poly(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_poly_mul)->Arg(8)->Arg(32)->Arg(128);

void bm_face_left(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Tuple word(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    word[static_cast<size_t>(i)] = static_cast<Letter>(i + 1);
  for (auto _ : state) {
    FaceEngine eng;  // cold cache each round, the expansion is the point
    benchmark::DoNotOptimize(eng.face_left(n, word));
  }
}
BENCHMARK(bm_face_left)->Arg(4)->Arg(6)->Arg(8);

void bm_boundary_build(benchmark::State& state) {
  const ComplexSpec spec = ComplexSpec::final_complex(3);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FaceEngine eng;
    benchmark::DoNotOptimize(boundary_matrix(spec, n, eng));
  }
}
BENCHMARK(bm_boundary_build)->Arg(4)->Arg(5)->Arg(6);

void bm_snf_integer(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PolyMat a = boundary_matrix(ComplexSpec::final_complex(3), n).dense();
  const IntMat at4 = eval_mat(a, Int(4));
  for (auto _ : state) benchmark::DoNotOptimize(snf_integer(at4));
}
BENCHMARK(bm_snf_integer)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void bm_snf_poly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PolyMat a = boundary_matrix(ComplexSpec::final_complex(3), n).dense();
  for (auto _ : state) benchmark::DoNotOptimize(snf_poly(a));
}
BENCHMARK(bm_snf_poly)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
