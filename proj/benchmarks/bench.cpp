/*
   Copyright 2026 The pointless Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include <random>

#include "pointless/irreducible.hpp"
#include "pointless/params.hpp"
#include "pointless/search.hpp"
#include "pointless/table.hpp"

using namespace pointless;

namespace {

Poly random_poly(const FieldPtr& f, int deg, std::mt19937_64& rng) {
  std::vector<Elem> c(static_cast<std::size_t>(deg) + 1);
  for (auto& v : c) v = static_cast<Elem>(rng() % f->q());
  c.back() = 1;
  return Poly(f, c);
}

void BM_MulMod(benchmark::State& state) {
  const FieldPtr f = Field::make(static_cast<unsigned>(state.range(0)));
  std::mt19937_64 rng(1);
  const int deg = static_cast<int>(state.range(1));
  const Poly m = random_poly(f, deg, rng), a = random_poly(f, deg - 1, rng), b = random_poly(f, deg - 1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(mulmod(a, b, m));
}
BENCHMARK(BM_MulMod)->Args({2, 20})->Args({2, 60})->Args({2, 200})->Args({3, 20})->Args({16, 20});

void BM_Irreducibles(benchmark::State& state) {
  const FieldPtr f = Field::make(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    std::size_t n = 0;
    for_each_monic_irreducible(f, static_cast<unsigned>(state.range(1)), [&](const Poly&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_Irreducibles)->Args({2, 12})->Args({2, 16})->Args({3, 7})->Unit(benchmark::kMillisecond);

void BM_DiscreteLog(benchmark::State& state) {
  UnitGroupOptions opts;
  if (state.range(0) == 0) opts.dlog_table_limit = 1;
  const FieldPtr f = Field::make(2);
  const auto u = UnitGroup::build(parse_modulus(f, "x^11+x^9+1, x^7+x+1"), opts);
  std::mt19937_64 rng(2);
  std::vector<UnitElement> xs;
  for (int i = 0; i < 64; ++i) {
    Poly r = random_poly(f, 17, rng) % u->modulus_poly();
    if (!r.is_zero() && gcd(r, u->modulus_poly()).is_one()) xs.push_back(u->reduce(r));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(u->dlog(xs[i++ % xs.size()]));
  state.SetLabel(state.range(0) == 0 ? "bsgs" : "table");
}
BENCHMARK(BM_DiscreteLog)->Arg(0)->Arg(1);

void BM_VerifyRow(benchmark::State& state) {
  const auto rows = parse_table(embedded_table());
  const TableEntry* row = nullptr;
  for (const auto& e : rows)
    if (e.n == state.range(0)) row = &e;
  ScanOptions opts;
  opts.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(verify_table_row(*row, opts).pass);
}
BENCHMARK(BM_VerifyRow)->Args({12, 1})->Args({18, 1})->Args({19, 1})->Args({19, 4})->Unit(benchmark::kMillisecond);

void BM_SelectParameters(benchmark::State& state) {
  SearchConfig cfg;
  cfg.q = 2;
  cfg.n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(select_parameters(cfg).found);
}
BENCHMARK(BM_SelectParameters)->Arg(60)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
