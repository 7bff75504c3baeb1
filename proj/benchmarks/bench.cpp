#include <benchmark/benchmark.h>

#include <octa/cayley.hpp>
#include <octa/reduction.hpp>
#include <octa/rng.hpp>

using namespace octa;

namespace {

Octonion random_octonion(std::uint64_t trial) {
  Rng rng = Rng::derive(1, "bench", "oct", trial);
  return rng.normal_octonion();
}

SpherePoint orbit_point() {
  Rng rng = Rng::derive(1, "bench", "orbit", 0);
  const CayleyPlane p = random_cayley_plane(rng);
  SpherePoint h = frame_to_sphere(canonical_cayley_frame(p));
  return sp1_act(u1_act(h, 1.234), rng.unit_quaternion());
}

}  // namespace

static void BM_MulTablePath(benchmark::State& state) {
  const Octonion x = random_octonion(0), y = random_octonion(1);
  for (auto _ : state) benchmark::DoNotOptimize(mul(x, y));
}
BENCHMARK(BM_MulTablePath);

static void BM_MulDoubling(benchmark::State& state) {
  const Octonion x = random_octonion(0), y = random_octonion(1);
  for (auto _ : state) benchmark::DoNotOptimize(mul_cd(x, y));
}
BENCHMARK(BM_MulDoubling);

static void BM_Cross3(benchmark::State& state) {
  const Octonion x = random_octonion(0), y = random_octonion(1), z = random_octonion(2);
  for (auto _ : state) benchmark::DoNotOptimize(cross3(x, y, z));
}
BENCHMARK(BM_Cross3);

static void BM_RandomCayleyPlane(benchmark::State& state) {
  std::uint64_t trial = 0;
  for (auto _ : state) {
    Rng rng = Rng::derive(1, "bench", "plane", trial++);
    benchmark::DoNotOptimize(random_cayley_plane(rng));
  }
}
BENCHMARK(BM_RandomCayleyPlane);

static void BM_PlaneResidual(benchmark::State& state) {
  Rng rng = Rng::derive(1, "bench", "residual", 0);
  const CayleyPlane p = random_cayley_plane(rng);
  for (auto _ : state) benchmark::DoNotOptimize(cayley_plane_residual(p.plane));
}
BENCHMARK(BM_PlaneResidual);

static void BM_TricomplexOfPlane(benchmark::State& state) {
  Rng rng = Rng::derive(1, "bench", "triple", 0);
  const CayleyPlane p = random_cayley_plane(rng);
  for (auto _ : state) benchmark::DoNotOptimize(tricomplex_of_plane(p.plane));
}
BENCHMARK(BM_TricomplexOfPlane);

static void BM_MomentMaps(benchmark::State& state) {
  const SpherePoint h = orbit_point();
  for (auto _ : state) {
    benchmark::DoNotOptimize(moment_mu(h));
    benchmark::DoNotOptimize(moment_nu(h));
  }
}
BENCHMARK(BM_MomentMaps);

static void BM_AngleSearch(benchmark::State& state) {
  const SpherePoint h = orbit_point();
  for (auto _ : state) benchmark::DoNotOptimize(angle_search(h, 1e-8));
}
BENCHMARK(BM_AngleSearch);

static void BM_TangentRankZeroSet(benchmark::State& state) {
  const SpherePoint h = orbit_point();
  for (auto _ : state) benchmark::DoNotOptimize(tangent_rank_zero_set(h));
}
BENCHMARK(BM_TangentRankZeroSet);

BENCHMARK_MAIN();
