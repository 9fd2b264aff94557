// Serial reference vs OpenMP kernels.

#include <random>

#include <benchmark/benchmark.h>

#include "invsemi/algebra.hpp"
#include "invsemi/hull.hpp"
#include "invsemi/kernels.hpp"
#include "invsemi/selfsimilar_spec.hpp"

using namespace invsemi;
namespace ss = invsemi::selfsimilar;

namespace {

// Symmetric inverse monoid on n points.
InverseSemigroupTable rook_monoid(int n) {
  std::vector<int> swap(n), cycle(n), drop(n);
  for (int i = 0; i < n; ++i) {
    swap[i] = i;
    cycle[i] = (i + 1) % n;
    drop[i] = i + 1 < n ? i : -1;
  }
  std::swap(swap[0], swap[1]);
  return generate_from_partial_bijections(
      {PartialBijection(n, swap), PartialBijection(n, cycle), PartialBijection(n, drop)});
}

std::vector<kernels::Row> random_matrix(FieldSpec f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<kernels::Row> m(n);
  for (auto& r : m) {
    for (std::size_t j = 0; j < n; ++j) r.emplace_back(f, long(rng() % 11) - 5);
  }
  return m;
}

template <bool Parallel>
void BM_associativity(benchmark::State& st) {
  const auto S = rook_monoid(int(st.range(0)));
  const std::vector<std::uint32_t> mul(S.table().begin(), S.table().end());
  for (auto _ : st) {
    auto r = Parallel ? kernels::find_nonassociative_parallel(mul, S.size())
                      : kernels::find_nonassociative_serial(mul, S.size());
    benchmark::DoNotOptimize(r);
  }
  st.counters["elements"] = double(S.size());
}

template <bool Parallel>
void BM_rref(benchmark::State& st) {
  const FieldSpec f = FieldSpec::from_characteristic(std::uint32_t(st.range(1)));
  const auto m = random_matrix(f, std::size_t(st.range(0)), 7);
  for (auto _ : st) {
    auto rows = m;
    auto piv = Parallel ? kernels::rref_parallel(rows, m.size()) : kernels::rref_serial(rows, m.size());
    benchmark::DoNotOptimize(piv);
  }
}

template <bool Parallel>
void BM_singular_ideal(benchmark::State& st) {
  const auto S = rook_monoid(int(st.range(0)));
  const FieldSpec f = FieldSpec::prime(2);
  for (auto _ : st) benchmark::DoNotOptimize(singular_ideal(S, f, Parallel).dim());
}

template <bool Parallel>
void BM_criterion(benchmark::State& st) {
  const auto spec = ss::parse_action_spec(std::string(R"({"kind":"prime-set","primes":[2,3]})"));
  const auto c = ss::prime_witness(*spec.action, 3, FieldSpec::prime(3));
  for (auto _ : st) benchmark::DoNotOptimize(ss::singular_criterion_group(*spec.action, c, Parallel).nonzero);
}

template <bool Parallel>
void BM_reduction(benchmark::State& st) {
  const auto spec = ss::parse_action_spec(std::string(R"({"kind":"prime-set","primes":[2,3]})"));
  for (auto _ : st) {
    benchmark::DoNotOptimize(ss::group_ring_singular_subspace(*spec.action, FieldSpec::prime(2), Parallel).dimension);
  }
}

template <bool Parallel>
void BM_search(benchmark::State& st) {
  const auto A = ss::xz_example();
  const auto w = ss::xz_witness(*A, FieldSpec::rationals());
  for (auto _ : st) {
    benchmark::DoNotOptimize(ss::hull_element_is_singular(*A, w, 256, 2, 6, Parallel).probes);
  }
}

}  // namespace

BENCHMARK(BM_associativity<false>)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_associativity<true>)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref<false>)->Args({120, 0})->Args({200, 7})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref<true>)->Args({120, 0})->Args({200, 7})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_singular_ideal<false>)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_singular_ideal<true>)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_criterion<false>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_criterion<true>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reduction<false>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reduction<true>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_search<false>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_search<true>)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
