#include <random>

#include <doctest.h>

#include "invsemi/caps.hpp"
#include "invsemi/errors.hpp"
#include "invsemi/linalg.hpp"
#include "oracles.hpp"

using namespace invsemi;

TEST_CASE("prime fields reduce and invert") {
  const FieldSpec f = FieldSpec::prime(5);
  CHECK(Scalar(f, 7) == Scalar(f, 2));
  CHECK(Scalar(f, -1) == Scalar(f, 4));
  CHECK((Scalar(f, 3) * Scalar(f, 2)).is_one());
  CHECK((Scalar(f, 3).inverse() * Scalar(f, 3)).is_one());
  CHECK_THROWS_AS(Scalar::zero(f).inverse(), InvalidArgument);
  CHECK(f.name() == "GF(5)");
  CHECK(FieldSpec::rationals().name() == "Q");
}

TEST_CASE("field construction rejects composites") {
  CHECK_THROWS_AS(FieldSpec::prime(4), InvalidArgument);
  CHECK_THROWS_AS(FieldSpec::prime(1), InvalidArgument);
  CHECK(FieldSpec::from_characteristic(0).is_rational());
  CHECK(FieldSpec::from_characteristic(3).characteristic() == 3);
}

TEST_CASE("rationals stay exact") {
  const FieldSpec q = FieldSpec::rationals();
  const Scalar third(q, mpq_class(1, 3));
  CHECK((third + third + third).is_one());
  CHECK(Scalar::parse(q, "-3/4").to_string() == "-3/4");
  CHECK(Scalar::parse(FieldSpec::prime(7), "9") == Scalar(FieldSpec::prime(7), 2));
}

TEST_CASE("mixing fields throws") {
  CHECK_THROWS_AS(Scalar(FieldSpec::prime(2), 1) + Scalar(FieldSpec::prime(3), 1), FieldMismatch);
  CHECK_THROWS_AS(Scalar(FieldSpec::rationals(), 1) * Scalar(FieldSpec::prime(3), 1), FieldMismatch);
}

TEST_CASE("caps parse key=value lists") {
  const Caps c = Caps::parse("depth=3,probe_budget=10");
  CHECK(c.depth == 3);
  CHECK(c.probe_budget == 10);
  CHECK(c.closure == Caps{}.closure);
  CHECK_THROWS_AS(Caps::parse("bogus=1"), InvalidArgument);
  CHECK_THROWS_AS(Caps::parse("depth=0"), InvalidArgument);
}

namespace {

DenseVector to_dense(FieldSpec f, const std::vector<std::int64_t>& v) {
  DenseVector out;
  for (auto x : v) out.emplace_back(f, long(x));
  return out;
}

}  // namespace

TEST_CASE("nullspace dimension matches an independent rank") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {0u, 2u, 3u, 7u}) {
    const FieldSpec f = FieldSpec::from_characteristic(p);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 7;
      std::vector<std::vector<std::int64_t>> M(rows, std::vector<std::int64_t>(cols));
      for (auto& r : M) {
        for (auto& x : r) x = std::int64_t(rng() % 5) - 2;
      }
      std::vector<DenseVector> dense;
      std::vector<oracle::QVec> q;
      for (const auto& r : M) {
        dense.push_back(to_dense(f, r));
        q.emplace_back(r.begin(), r.end());
      }
      const std::size_t rank = p ? oracle::rank_mod(M, cols, p) : oracle::rank_q(q, cols);
      const EchelonBasis N = nullspace(f, dense, cols);
      CHECK(N.dim() == cols - rank);
      CHECK(span(f, dense, cols).dim() == rank);
      for (const auto& v : N.rows()) {
        for (const auto& r : dense) {
          Scalar dot = Scalar::zero(f);
          for (std::size_t j = 0; j < cols; ++j) dot += r[j] * v[j];
          CHECK(dot.is_zero());
        }
      }
    }
  }
}

TEST_CASE("echelon bases are canonical") {
  const FieldSpec f = FieldSpec::rationals();
  EchelonBasis a(f, 3), b(f, 3);
  a.insert(to_dense(f, {1, 1, 0}));
  a.insert(to_dense(f, {0, 1, 1}));
  b.insert(to_dense(f, {1, 2, 1}));
  b.insert(to_dense(f, {1, 0, -1}));
  CHECK(a == b);
  CHECK(a.contains(to_dense(f, {2, 3, 1})));
  CHECK_FALSE(a.contains(to_dense(f, {0, 0, 1})));
  CHECK(a.is_subspace_of(b));
  CHECK_FALSE(a.insert(to_dense(f, {3, 3, 0})));
}
