// Copyright 2026 The coopgame Authors
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

#include <random>
#include <vector>

#include "coopgame/coop.hpp"
#include "coopgame/models.hpp"

namespace {

using namespace coopgame;

Matrix random_matrix(std::mt19937& rng, int rows, int cols) {
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  std::vector<double> entries(static_cast<size_t>(rows) * cols);
  for (double& x : entries) x = dist(rng);
  return Matrix(rows, cols, std::move(entries));
}

void BM_SolveZeroSum6x6(benchmark::State& state) {
  std::mt19937 rng(7);
  std::vector<Matrix> matrices;
  for (int i = 0; i < 64; ++i) matrices.push_back(random_matrix(rng, 6, 6));
  size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_zero_sum(matrices[k++ % matrices.size()]));
  }
}
BENCHMARK(BM_SolveZeroSum6x6);

void BM_TuSolution(benchmark::State& state) {
  const Bimatrix game = models::basic_game();
  for (auto _ : state) {
    benchmark::DoNotOptimize(tu_solution(game));
  }
}
BENCHMARK(BM_TuSolution);

void BM_FeasibleSet(benchmark::State& state) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  std::vector<PayoffPoint> pts(static_cast<size_t>(state.range(0)));
  for (auto& p : pts) p = {dist(rng), dist(rng)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(FeasibleSet(pts));
  }
}
BENCHMARK(BM_FeasibleSet)->Arg(9)->Arg(64)->Arg(512);

void BM_NtuNash(benchmark::State& state) {
  const Bimatrix game = models::basic_game();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ntu_nash(game));
  }
}
BENCHMARK(BM_NtuNash);

void BM_LambdaTransfer(benchmark::State& state) {
  const Bimatrix game = models::basic_game();
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambda_transfer(game));
  }
}
BENCHMARK(BM_LambdaTransfer);

void BM_NormalizedPipeline(benchmark::State& state) {
  const Bimatrix game = models::normalized_game({1.37, 1.61});
  for (auto _ : state) {
    benchmark::DoNotOptimize(tu_solution(game));
    benchmark::DoNotOptimize(ntu_nash(game));
    benchmark::DoNotOptimize(lambda_transfer(game));
  }
}
BENCHMARK(BM_NormalizedPipeline);

}  // namespace

BENCHMARK_MAIN();
