#include <random>

#include <doctest.h>

#include "invsemi/algebra.hpp"
#include "invsemi/builtins.hpp"
#include "invsemi/hull.hpp"
#include "invsemi/kernels.hpp"
#include "invsemi/selfsimilar_spec.hpp"

using namespace invsemi;

TEST_CASE("associativity kernels agree") {
  std::mt19937_64 rng(1);
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto S = random_partial_bijection_semigroup(seed, 3, 2);
    std::vector<std::uint32_t> mul(S.table().begin(), S.table().end());
    CHECK_FALSE(kernels::find_nonassociative_serial(mul, S.size()));
    CHECK_FALSE(kernels::find_nonassociative_parallel(mul, S.size()));
    for (int trial = 0; trial < 20; ++trial) {
      auto bad = mul;
      bad[rng() % bad.size()] = std::uint32_t(rng() % S.size());
      CHECK(kernels::find_nonassociative_serial(bad, S.size()) ==
            kernels::find_nonassociative_parallel(bad, S.size()));
    }
  }
}

TEST_CASE("row reduction kernels agree") {
  std::mt19937_64 rng(2);
  for (std::uint32_t p : {0u, 2u, 5u}) {
    const FieldSpec f = FieldSpec::from_characteristic(p);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
      std::vector<kernels::Row> m(rows);
      for (auto& r : m) {
        for (std::size_t j = 0; j < cols; ++j) r.emplace_back(f, long(rng() % 7) - 3);
      }
      auto a = m, b = m;
      const auto pa = kernels::rref_serial(a, cols);
      const auto pb = kernels::rref_parallel(b, cols);
      CHECK(pa == pb);
      CHECK(a == b);
    }
  }
}

TEST_CASE("singular ideal and nullspace agree serial and parallel") {
  for (const auto& n : builtin_names()) {
    const auto S = builtin_semigroup(n);
    for (std::uint32_t p : {0u, 2u, 3u}) {
      const FieldSpec f = FieldSpec::from_characteristic(p);
      CHECK(singular_ideal(S, f, false) == singular_ideal(S, f, true));
    }
    CHECK(check_table(S.to_raw(), false).empty());
  }
}

TEST_CASE("criterion and search agree serial and parallel") {
  using namespace invsemi::selfsimilar;
  const auto A = build_prime_construction({2, 3});
  for (std::uint32_t q : {0u, 2u, 3u}) {
    const FieldSpec f = FieldSpec::from_characteristic(q);
    for (std::uint32_t p : {2u, 3u}) {
      const auto c = prime_witness(*A, p, f);
      const auto s = singular_criterion_group(*A, c, false), t = singular_criterion_group(*A, c, true);
      CHECK(s.nonzero == t.nonzero);
      REQUIRE(s.sums.size() == t.sums.size());
      for (std::size_t i = 0; i < s.sums.size(); ++i) {
        CHECK(s.sums[i].sum == t.sums[i].sum);
        CHECK(s.sums[i].a == t.sums[i].a);
        CHECK(s.sums[i].b == t.sums[i].b);
      }
      const auto u = hull_element_is_singular(*A, c, 512, 2, 6, false);
      const auto v = hull_element_is_singular(*A, c, 512, 2, 6, true);
      CHECK(u.outcome == v.outcome);
      CHECK(u.annihilators == v.annihilators);
      CHECK(u.probes == v.probes);
    }
    const auto r = group_ring_singular_subspace(*A, f, false), s = group_ring_singular_subspace(*A, f, true);
    CHECK(r.dimension == s.dimension);
    CHECK(r.basis == s.basis);
  }
}
