#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include <srtrunc/srtrunc.hpp>

namespace {

using namespace srtrunc;

MonomialIdeal random_ideal(unsigned n, unsigned gens, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<VarSet> supports;
  for (unsigned g = 0; g < gens; ++g) {
    VarSet s;
    const unsigned degree = 2 + static_cast<unsigned>(rng() % (n / 2));
    while (static_cast<unsigned>(s.size()) < degree) s = s.with(static_cast<unsigned>(rng() % n));
    supports.push_back(s);
  }
  return MonomialIdeal::from_supports(n, supports);
}

MonomialIdeal squares(unsigned n) {
  std::vector<Monomial> gens;
  for (unsigned v = 0; v < n; ++v) gens.push_back(Monomial::variable(n, v, 2));
  return MonomialIdeal::normalize(n, gens);
}

void BM_HochsterSweep(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto threads = static_cast<unsigned>(state.range(1));
  const auto ideal = random_ideal(n, 6, 42);
  for (auto _ : state) benchmark::DoNotOptimize(hochster_betti(ideal, Characteristic(), threads));
  state.counters["subsets"] = static_cast<double>(std::uint64_t{1} << n);
}
BENCHMARK(BM_HochsterSweep)->Args({12, 1})->Args({12, 4})->Args({16, 1})->Args({16, 4})->Unit(benchmark::kMillisecond);

void BM_ReducedHomology(benchmark::State& state) {
  const auto ideal = random_ideal(static_cast<unsigned>(state.range(0)), 5, 7);
  const auto delta = stanley_reisner(ideal);
  const Characteristic field(static_cast<std::uint32_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology_dims(delta, field));
}
BENCHMARK(BM_ReducedHomology)->Args({12, 0})->Args({12, 2})->Args({12, 32003})->Unit(benchmark::kMillisecond);

void BM_ClosedFormTruncation(benchmark::State& state) {
  const unsigned n = 12;
  const auto ideal = random_ideal(n, 6, 99);
  const auto base = hochster_betti(ideal, Characteristic());
  const unsigned k = *ideal.min_degree() + 1;
  const auto fk = f_vector(stanley_reisner(squarefree_truncate(ideal, k)));
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_truncation_betti(base, fk, n, k));
}
BENCHMARK(BM_ClosedFormTruncation);

void BM_HilbertNumerator(benchmark::State& state) {
  const auto ideal = truncate_geq(squares(static_cast<unsigned>(state.range(0))), 5);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_numerator_monomial(ideal));
  state.counters["generators"] = static_cast<double>(ideal.size());
}
BENCHMARK(BM_HilbertNumerator)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
