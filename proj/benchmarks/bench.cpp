// Copyright 2026 The ratbase Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "ratbase/amalgam.hpp"
#include "ratbase/fraisse.hpp"
#include "ratbase/lp.hpp"
#include "ratbase/polytope.hpp"
#include "ratbase/space.hpp"

namespace ratbase {
namespace {

std::vector<Vector> CubePoints(std::size_t dim) {
  std::vector<Vector> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
    Vector v(dim);
    for (std::size_t k = 0; k < dim; ++k) v[k] = (mask >> k & 1) ? 1 : -1;
    pts.push_back(v);
  }
  return pts;
}

std::vector<Vector> CrossPoints(std::size_t dim) {
  std::vector<Vector> pts;
  for (std::size_t k = 0; k < dim; ++k) pts.push_back(UnitVector(dim, k));
  return pts;
}

BasedSpace Example() { return BuildCounterexample({Rat(1, 20), Rat(1, 2), Rat(3, 5)}).a; }

void BM_HullReduceCube(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  std::vector<Vector> pts = CubePoints(d);
  for (std::size_t k = 0; k < d; ++k) pts.push_back(UnitVector(d, k));
  for (auto _ : state) benchmark::DoNotOptimize(Ball::FromPoints(pts, d));
}
BENCHMARK(BM_HullReduceCube)->DenseRange(2, 6);

void BM_FacetsOfCrossPolytope(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  std::vector<Vector> pts = CrossPoints(d);
  for (auto _ : state) benchmark::DoNotOptimize(EnumerateFacets(pts, d));
}
BENCHMARK(BM_FacetsOfCrossPolytope)->DenseRange(2, 7);

void BM_GaugeLp(benchmark::State& state) {
  BasedSpace a = Example();
  Vector x = {Rat(3, 7), Rat(-2, 5), Rat(1, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(GaugeLp(a.ball(), x));
}
BENCHMARK(BM_GaugeLp);

void BM_GaugeHrep(benchmark::State& state) {
  BasedSpace a = Example();
  a.ball().Facets();
  Vector x = {Rat(3, 7), Rat(-2, 5), Rat(1, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(GaugeHrep(a.ball(), x));
}
BENCHMARK(BM_GaugeHrep);

void BM_UnconditionalConstant(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  std::vector<Vector> pts = CrossPoints(d);
  Vector diag(d, Rat(1, 2));
  diag[0] = 1;
  pts.push_back(diag);
  BasedSpace s(DefaultLabels(d), Ball::FromPoints(pts, d));
  for (auto _ : state) benchmark::DoNotOptimize(UnconditionalConstant(s));
}
BENCHMARK(BM_UnconditionalConstant)->DenseRange(2, 5);

void BM_AmalgamateCubes(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  BasedSpace z({"e1"}, Ball::FromPoints(CubePoints(1), 1));
  BasedSpace x(DefaultLabels(d), Ball::FromPoints(CubePoints(d), d));
  std::vector<std::string> yl;
  for (std::size_t k = 1; k <= d; ++k) yl.push_back("f" + std::to_string(k));
  BasedSpace y(yl, Ball::FromPoints(CubePoints(d), d));
  BasedMorphism i = Inclusion(z, x);
  BasedMorphism j(z, y, std::vector<std::size_t>{0});
  for (auto _ : state) benchmark::DoNotOptimize(Amalgamate(z, x, y, i, j));
}
BENCHMARK(BM_AmalgamateCubes)->DenseRange(2, 4);

void BM_Catalog(benchmark::State& state) {
  CatalogBounds bounds;
  bounds.max_denominator = state.range(0);
  bounds.k_bound = 2;
  for (auto _ : state) benchmark::DoNotOptimize(EnumerateSpaces(bounds));
}
BENCHMARK(BM_Catalog)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_GenericChain(benchmark::State& state) {
  CatalogBounds bounds;
  bounds.max_denominator = 2;
  bounds.k_bound = 2;
  Catalog catalog = EnumerateSpaces(bounds);
  BasedSpace seed({"e1"}, Ball::FromPoints(CubePoints(1), 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildGenericChain(catalog, static_cast<std::size_t>(state.range(0)), seed));
  }
}
BENCHMARK(BM_GenericChain)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Simplex(benchmark::State& state) {
  // max sum x subject to x_k + x_{k+1} <= 1, x >= 0.
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix a(n, Vector(n, Rat(0)));
  for (std::size_t k = 0; k < n; ++k) {
    a[k][k] = 1;
    a[k][(k + 1) % n] = 1;
  }
  Vector b(n, Rat(1));
  Vector c(n, Rat(1));
  for (auto _ : state) benchmark::DoNotOptimize(lp::MaximizeStandard(a, b, c));
}
BENCHMARK(BM_Simplex)->Arg(8)->Arg(32);

}  // namespace
}  // namespace ratbase

BENCHMARK_MAIN();
