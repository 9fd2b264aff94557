#include <random>

#include <doctest.h>

#include "invsemi/algebra.hpp"
#include "invsemi/builtins.hpp"
#include "invsemi/errors.hpp"
#include "invsemi/groupoid.hpp"
#include "oracles.hpp"

using namespace invsemi;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kGF2 = FieldSpec::prime(2);
const FieldSpec kGF3 = FieldSpec::prime(3);

std::vector<InverseSemigroupTable> builtins() {
  std::vector<InverseSemigroupTable> out;
  for (const auto& n : builtin_names()) out.push_back(builtin_semigroup(n));
  return out;
}

std::vector<InverseSemigroupTable> corpus() {
  auto out = builtins();
  for (std::uint64_t seed = 1; seed <= 5; ++seed) out.push_back(random_partial_bijection_semigroup(seed));
  return out;
}

AlgebraElement elem(const InverseSemigroupTable& S, FieldSpec f,
                    std::initializer_list<std::pair<const char*, long>> terms) {
  AlgebraElement a(f);
  for (auto [label, c] : terms) a.add_term(S.at(label), c);
  return a;
}

AlgebraElement random_element(const InverseSemigroupTable& S, FieldSpec f, std::mt19937_64& rng) {
  AlgebraElement a(f);
  const std::size_t terms = 1 + rng() % 4;
  for (std::size_t i = 0; i < terms; ++i) a.add_term(ElemId(1 + rng() % (S.size() - 1)), long(rng() % 5) - 2);
  return a;
}

AlgebraElement random_in(const SubspaceBasis& B, std::mt19937_64& rng) {
  AlgebraElement a(B.field());
  for (const auto& v : elements_of(B)) a += Scalar(B.field(), long(rng() % 7) - 3) * v;
  return a;
}

oracle::QVec as_q(const InverseSemigroupTable& S, const AlgebraElement& a) {
  oracle::QVec v(S.size(), 0);
  for (const auto& [s, c] : a.terms()) v[s] = mpq_class(c.to_string());
  return v;
}

DenseVector dense_of(FieldSpec f, const oracle::QVec& v) {
  DenseVector out;
  for (const auto& x : v) out.emplace_back(f, x);
  return out;
}

bool is_magic(const InverseSemigroupTable& S, const AlgebraElement& a, ElemId t) {
  for (ElemId u = 1; u < S.size(); ++u) {
    if (S.mul(t, S.mul(S.star(u), u)) != u) continue;  // u <= t
    Scalar sum = Scalar::zero(a.field());
    for (const auto& [s, c] : a.terms()) {
      if (S.mul(s, S.mul(S.star(u), u)) == u) sum += c;  // s >= u
    }
    if (sum.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("multiplication examples") {
  const auto B2 = builtin_semigroup("b2");
  CHECK(multiply(B2, elem(B2, kQ, {{"e12", 1}}), elem(B2, kQ, {{"e21", 1}})) == elem(B2, kQ, {{"e11", 1}}));
  const auto Bo = builtin_semigroup("boolean");
  CHECK(multiply(Bo, elem(Bo, kQ, {{"x", 1}}), elem(Bo, kQ, {{"y", 1}})).is_zero());
  const auto lhs = multiply(Bo, elem(Bo, kQ, {{"1", 1}, {"x", -1}}), elem(Bo, kQ, {{"1", 1}, {"y", -1}}));
  CHECK(lhs == elem(Bo, kQ, {{"1", 1}, {"x", -1}, {"y", -1}}));
  CHECK_THROWS_AS(multiply(Bo, elem(Bo, kQ, {{"x", 1}}), elem(Bo, kGF2, {{"x", 1}})), FieldMismatch);
}

TEST_CASE("singularity examples") {
  const auto Q = builtin_semigroup("q");
  for (FieldSpec f : {kQ, kGF2, kGF3}) {
    CHECK(is_singular(Q, elem(Q, f, {{"a", 1}, {"1", -1}})).singular);
    CHECK_FALSE(find_magic(Q, elem(Q, f, {{"a", 1}, {"1", -1}})));
    CHECK(singular_ideal(Q, f).contains(elem(Q, f, {{"a", 1}, {"1", -1}}).to_dense(Q.size())));
  }
  for (const auto& S : builtins()) {
    for (ElemId s = 1; s < S.size(); ++s) {
      AlgebraElement a(kQ);
      a.add_term(s, 3);
      CHECK_FALSE(is_singular(S, a).singular);
    }
  }
  const auto Bo = builtin_semigroup("boolean");
  const auto c = is_singular(Bo, elem(Bo, kQ, {{"1", 1}, {"x", -1}, {"y", -1}}));
  CHECK(c.singular);
  CHECK(c.annihilators.size() == 3);

  const auto B2 = builtin_semigroup("b2");
  CHECK(find_magic(B2, elem(B2, kQ, {{"e11", 1}})) == B2.at("e11"));
  CHECK(find_magic(Bo, elem(Bo, kQ, {{"1", 1}, {"x", -1}})) == Bo.at("y"));
}

TEST_CASE("singular and tight ideal examples") {
  const auto B2 = builtin_semigroup("b2");
  CHECK(singular_ideal(B2, kQ).dim() == 0);
  CHECK(tight_ideal(B2, kQ).dim() == 0);
  CHECK(tight_ideal(builtin_semigroup("two"), kQ).dim() == 0);

  const auto Bo = builtin_semigroup("boolean");
  const auto s = singular_ideal(Bo, kQ);
  CHECK(s.dim() == 1);
  const DenseVector w = elem(Bo, kQ, {{"1", 1}, {"x", -1}, {"y", -1}}).to_dense(Bo.size());
  CHECK(s.contains(w));
  const auto gens = tight_generators(Bo, kQ);
  REQUIRE(gens.size() == 1);
  CHECK(gens[0] == elem(Bo, kQ, {{"1", 1}, {"x", -1}, {"y", -1}}));
  CHECK(tight_ideal(Bo, kQ) == s);
}

TEST_CASE("essential algebra examples") {
  const auto B2 = builtin_semigroup("b2");
  CHECK(essential_algebra(B2, kQ).dim() == 4);
  CHECK(essential_algebra(builtin_semigroup("boolean"), kQ).dim() == 2);
  const auto Q = builtin_semigroup("q");
  const auto E = essential_algebra(Q, kGF2);
  CHECK(E.dim() == 1);
  const auto I = singular_ideal(Q, kGF2);
  CHECK(coset_image(Q, I, E, Q.at("a")) == coset_image(Q, I, E, Q.at("1")));
}

TEST_CASE("ideal generation examples") {
  const auto B2 = builtin_semigroup("b2");
  CHECK(ideal_generated_by(B2, kQ, {elem(B2, kQ, {{"e11", 1}})}).dim() == 4);
  CHECK(ideal_generated_by(B2, kQ, {AlgebraElement(kQ)}).dim() == 0);
  const auto Bo = builtin_semigroup("boolean");
  CHECK(ideal_generated_by(Bo, kQ, {elem(Bo, kQ, {{"1", 1}, {"x", -1}, {"y", -1}})}).dim() == 1);
  Caps tiny;
  tiny.ideal_dim = 2;
  CHECK_THROWS_AS(ideal_generated_by(B2, kQ, {elem(B2, kQ, {{"e11", 1}})}, tiny), CapExceeded);
}

TEST_CASE("verdict examples") {
  const auto B2 = builtin_semigroup("b2");
  for (std::uint32_t p : {0u, 2u, 3u, 5u}) {
    CHECK(simplicity_verdict(B2, FieldSpec::from_characteristic(p)).verdict == Verdict::Simple);
  }
  for (const auto& r : characteristic_sweep(builtin_semigroup("boolean"), {2, 3, 5})) {
    CHECK(r.verdict == Verdict::NotSimple);
    CHECK(r.congruence_free.reason == CongruenceFreeReason::NotZeroSimple);
  }
  for (const auto& r : characteristic_sweep(builtin_semigroup("q"), {2, 3, 5})) {
    CHECK(r.verdict == Verdict::NotSimple);
    CHECK(r.congruence_free.reason == CongruenceFreeReason::NotFundamental);
  }
  CHECK(characteristic_sweep(B2, {2, 3, 5}).size() == 4);
}

TEST_CASE("singular ideal equals the definition over small prime fields") {
  for (const auto& S : builtins()) {
    for (std::uint32_t p : {2u, 3u}) {
      const FieldSpec f = FieldSpec::prime(p);
      const auto basis = singular_ideal(S, f);
      std::size_t count = 0;
      oracle::for_each_vector(S.size(), p, [&](const oracle::QVec& v) {
        const bool def = oracle::singular_by_definition(S, v, p);
        count += def;
        CHECK(basis.contains(dense_of(f, v)) == def);
      });
      std::size_t expect = 1;
      for (std::size_t i = 0; i < basis.dim(); ++i) expect *= p;
      CHECK(count == expect);
    }
  }
}

TEST_CASE("singular ideal over Q is the largest annihilator piece") {
  for (const auto& S : corpus()) {
    const auto basis = singular_ideal(S, kQ);
    const auto pieces = oracle::singular_pieces_q(S);
    std::size_t best = 0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (pieces[i].size() > pieces[best].size()) best = i;
    }
    CHECK(pieces[best].size() == basis.dim());
    for (const auto& piece : pieces) {
      for (const auto& v : piece) {
        oracle::QVec full(S.size(), 0);
        std::copy(v.begin(), v.end(), full.begin() + 1);
        CHECK(basis.contains(dense_of(kQ, full)));
      }
    }
    for (const auto& a : elements_of(basis)) CHECK(oracle::singular_by_definition(S, as_q(S, a), 0));
  }
}

TEST_CASE("the three singularity forms agree and magic elements exist off the ideal") {
  std::mt19937_64 rng(5);
  for (const auto& S : corpus()) {
    for (FieldSpec f : {kQ, kGF2, kGF3}) {
      const auto I = singular_ideal(S, f);
      for (int trial = 0; trial < 40; ++trial) {
        const AlgebraElement a = trial % 2 ? random_in(I, rng) : random_element(S, f, rng);
        const bool r = is_singular(S, a).singular;
        CHECK(is_singular_left(S, a).singular == r);
        CHECK(is_singular_symmetric(S, a) == r);
        CHECK(I.contains(a.to_dense(S.size())) == r);
        const auto t = find_magic(S, a);
        CHECK(t.has_value() == !r);
        if (t) {
          CHECK(is_magic(S, a, *t));
          for (ElemId e : S.idempotents()) {
            for (ElemId g : S.idempotents()) {
              const ElemId etg = S.mul(S.mul(e, *t), g);
              if (etg == 0) continue;
              AlgebraElement ea(f), eag(f);
              ea.add_term(e, 1);
              eag.add_term(g, 1);
              CHECK(is_magic(S, multiply(S, multiply(S, ea, a), eag), etg));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("the singular set is a two-sided ideal") {
  std::mt19937_64 rng(9);
  for (const auto& S : corpus()) {
    for (FieldSpec f : {kQ, kGF2}) {
      const auto I = singular_ideal(S, f);
      for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_in(I, rng), b = random_in(I, rng);
        const auto c = random_element(S, f, rng);
        CHECK(is_singular(S, a + b).singular);
        CHECK(is_singular(S, multiply(S, a, c)).singular);
        CHECK(is_singular(S, multiply(S, c, a)).singular);
      }
    }
  }
}

TEST_CASE("tight ideal equals singular ideal and the restriction kernel") {
  for (const auto& S : corpus()) {
    for (FieldSpec f : {kQ, kGF2, kGF3}) {
      const auto T = tight_ideal(S, f), I = singular_ideal(S, f);
      CHECK(T.is_subspace_of(I));
      CHECK(T == I);
      CHECK(restriction_kernel(S, f) == I);
      CHECK(simplicity_verdict(S, f).hausdorff_agree);
    }
  }
}

TEST_CASE("essential image has no zero and only forced collisions") {
  for (const auto& S : corpus()) {
    for (FieldSpec f : {kQ, kGF2}) {
      const auto I = singular_ideal(S, f);
      const auto E = quotient_algebra(S, I);
      CHECK(E.dim() == S.size() - 1 - I.dim());
      for (ElemId s = 1; s < S.size(); ++s) {
        const auto img = coset_image(S, I, E, s);
        CHECK_FALSE(is_zero(img));
        for (ElemId t = s + 1; t < S.size(); ++t) {
          AlgebraElement d(f);
          d.add_term(s, 1);
          d.add_term(t, -1);
          CHECK((img == coset_image(S, I, E, t)) == I.contains(d.to_dense(S.size())));
        }
      }
    }
  }
}

TEST_CASE("uniqueness: non-singular elements generate an idempotent") {
  std::mt19937_64 rng(21);
  for (const auto& S : corpus()) {
    if (!is_fundamental(S) || !is_zero_disjunctive(S).holds) continue;
    for (FieldSpec f : {kQ, kGF3}) {
      const auto I = singular_ideal(S, f);
      for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_element(S, f, rng);
        const auto J = ideal_generated_by(S, f, {a});
        bool has_idem = false;
        for (ElemId e : S.idempotents()) has_idem = has_idem || J.contains(AlgebraElement::basis(f, e).to_dense(S.size()));
        CHECK(has_idem == !I.contains(a.to_dense(S.size())));
      }
    }
  }
}
