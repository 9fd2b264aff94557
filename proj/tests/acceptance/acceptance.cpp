// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails or runs over its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "invsemi/algebra.hpp"
#include "invsemi/builtins.hpp"
#include "invsemi/congruence.hpp"
#include "invsemi/groupoid.hpp"
#include "invsemi/hull.hpp"
#include "invsemi/order.hpp"
#include "invsemi/selfsimilar_spec.hpp"
#include "oracles.hpp"

using namespace invsemi;
namespace ss = invsemi::selfsimilar;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

/// Collects failed checks with a short note each.
struct Check {
  std::vector<std::string> failures;
  std::size_t checks = 0;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  std::string summary() const {
    if (failures.empty()) return "";
    std::string s = failures.front();
    if (failures.size() > 1) s += " (+" + std::to_string(failures.size() - 1) + " more)";
    return s;
  }
};

std::vector<std::pair<std::string, InverseSemigroupTable>> builtin_tables() {
  std::vector<std::pair<std::string, InverseSemigroupTable>> out;
  for (const auto& n : builtin_names()) out.emplace_back(n, builtin_semigroup(n));
  return out;
}

DenseVector dense_of(FieldSpec f, const oracle::QVec& v) {
  DenseVector out;
  for (const auto& x : v) out.emplace_back(f, x);
  return out;
}

oracle::QVec as_q(const InverseSemigroupTable& S, const AlgebraElement& a) {
  oracle::QVec v(S.size(), 0);
  for (const auto& [s, c] : a.terms()) v[s] = mpq_class(c.to_string());
  return v;
}

oracle::QVec to_q(const DenseVector& v) {
  oracle::QVec out;
  for (const auto& x : v) out.emplace_back(x.to_string());
  return out;
}

// 1. minimal-idempotent singular ideal against the definition
void singular_oracle(Check& c) {
  for (const auto& [name, S] : builtin_tables()) {
    if (S.size() > 10) continue;
    for (std::uint32_t p : {2u, 3u}) {
      const FieldSpec f = FieldSpec::prime(p);
      const auto basis = singular_ideal(S, f);
      oracle::for_each_vector(S.size(), p, [&](const oracle::QVec& v) {
        c.expect(basis.contains(dense_of(f, v)) == oracle::singular_by_definition(S, v, p),
                 name + " over " + f.name());
      });
    }
    const auto basis = singular_ideal(S, kQ);
    std::size_t best = 0;
    for (const auto& piece : oracle::singular_pieces_q(S)) {
      best = std::max(best, piece.size());
      for (const auto& v : piece) {
        oracle::QVec full(S.size(), 0);
        std::copy(v.begin(), v.end(), full.begin() + 1);
        c.expect(basis.contains(dense_of(kQ, full)), name + " over Q: singular vector missing");
      }
    }
    c.expect(best == basis.dim(), name + " over Q: dimension");
    for (const auto& a : elements_of(basis)) {
      c.expect(oracle::singular_by_definition(S, as_q(S, a), 0), name + " over Q: non-singular basis vector");
    }
  }
}

// 2. tight ideal equals singular ideal
void hausdorff(Check& c) {
  for (const auto& [name, S] : builtin_tables()) {
    for (std::uint32_t p : {0u, 2u, 3u}) {
      const FieldSpec f = FieldSpec::from_characteristic(p);
      c.expect(tight_ideal(S, f) == singular_ideal(S, f), name + " over " + f.name());
    }
  }
}

// 3. phi onto the Steinberg algebra of the universal groupoid
void steinberg(Check& c) {
  std::vector<std::pair<std::string, InverseSemigroupTable>> inputs;
  for (const char* n : {"b2", "boolean", "q", "rook2"}) inputs.emplace_back(n, builtin_semigroup(n));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    inputs.emplace_back("random seed " + std::to_string(seed), random_partial_bijection_semigroup(seed));
  }
  for (const auto& [name, S] : inputs) {
    for (FieldSpec f : {kQ, FieldSpec::prime(2)}) {
      const auto r = iso_check(S, f);
      c.expect(r.bijective && r.multiplicative, name + ": iso_check over " + f.name());
      c.expect(r.pairs_checked == (S.size() - 1) * (S.size() - 1), name + ": pairs checked");
    }
    // independent recomputation over Q
    const auto U = universal_groupoid(S);
    std::vector<oracle::QVec> images;
    for (ElemId s = 1; s < S.size(); ++s) images.push_back(to_q(phi(S, U, AlgebraElement::basis(kQ, s))));
    c.expect(oracle::rank_q(images, U.num_arrows()) == S.size() - 1 && U.num_arrows() == S.size() - 1,
             name + ": phi not bijective");
    for (ElemId s = 1; s < S.size(); ++s) {
      for (ElemId t = 1; t < S.size(); ++t) {
        const auto prod = oracle::convolve(U, images[s - 1], images[t - 1]);
        const ElemId st = S.mul(s, t);
        const oracle::QVec want = st ? images[st - 1] : oracle::QVec(U.num_arrows(), 0);
        c.expect(prod == want, name + ": phi(s)phi(t) != phi(st)");
      }
    }
  }
}

// 4. simplicity verdicts for B2, the Boolean semilattice and Q
void finite_verdicts(Check& c) {
  const auto B2 = builtin_semigroup("b2");
  for (std::uint32_t p : {0u, 2u, 3u, 5u}) {
    const FieldSpec f = FieldSpec::from_characteristic(p);
    c.expect(simplicity_verdict(B2, f).verdict == Verdict::Simple, "B2 over " + f.name());
    const auto E = essential_algebra(B2, f);
    c.expect(E.dim() == 4, "B2 essential dimension");
    // matrix units: e_ij e_kl = delta_jk e_il
    for (std::size_t i = 0; i < E.dim(); ++i) {
      for (std::size_t j = 0; j < E.dim(); ++j) {
        const std::string a = B2.label(E.basis[i]), b = B2.label(E.basis[j]);
        DenseVector want = zero_vector(f, E.dim());
        if (a[2] == b[1]) {
          const std::string lab = std::string("e") + a[1] + b[2];
          for (std::size_t k = 0; k < E.dim(); ++k) {
            if (B2.label(E.basis[k]) == lab) want[k] = Scalar::one(f);
          }
        }
        c.expect(E.structure[i][j] == want, "B2 structure constant " + a + "*" + b);
      }
    }
  }
  for (std::uint32_t p : {0u, 2u, 3u, 5u}) {
    const FieldSpec f = FieldSpec::from_characteristic(p);
    const auto bo = simplicity_verdict(builtin_semigroup("boolean"), f);
    c.expect(bo.verdict == Verdict::NotSimple && bo.congruence_free.reason == CongruenceFreeReason::NotZeroSimple,
             "boolean over " + f.name());
    const auto q = simplicity_verdict(builtin_semigroup("q"), f);
    c.expect(q.verdict == Verdict::NotSimple && q.congruence_free.reason == CongruenceFreeReason::NotFundamental,
             "q over " + f.name());
  }
}

// 5. characteristic dependence of the prime-set construction
void prime_sets(Check& c) {
  const auto p2 = ss::parse_action_spec(std::string(R"({"kind":"prime-set","primes":[2]})"));
  const auto& A = *p2.action;
  {
    const FieldSpec f = FieldSpec::prime(2);
    const auto r = ss::verdict_selfsimilar(p2, f);
    c.expect(r.verdict == Verdict::NotSimple, "P={2} over GF(2) verdict");
    c.expect(r.witness && *r.witness == ss::prime_witness(A, 2, f), "P={2} witness is not the C2xC2 sum");
    c.expect(r.witness && r.witness->terms().size() == 4, "P={2} witness size");
    const auto crit = ss::singular_criterion_group(A, ss::prime_witness(A, 2, f));
    c.expect(crit.sums.size() == 36 && crit.nonzero == 0, "P={2} GF(2) sums");
    c.expect(r.search && r.search->outcome == ss::SingularSearch::Outcome::Certificate, "P={2} GF(2) search");
  }
  for (std::uint32_t q : {0u, 3u, 5u}) {
    const FieldSpec f = FieldSpec::from_characteristic(q);
    const auto r = ss::verdict_selfsimilar(p2, f);
    c.expect(r.verdict == Verdict::Simple, "P={2} over " + f.name());
    const auto crit = ss::singular_criterion_group(A, ss::prime_witness(A, 2, f));
    std::size_t twos = 0;
    for (const auto& s : crit.sums) twos += s.sum == Scalar(f, 2);
    c.expect(crit.sums.size() == 36 && crit.nonzero == 12 && twos == 12, "P={2} sums over " + f.name());
    c.expect(r.reduction && r.reduction->dimension == oracle::criterion_nullity({2}, q), "P={2} reduction");
  }
  const auto p23 = ss::parse_action_spec(std::string(R"({"kind":"prime-set","primes":[2,3]})"));
  for (std::uint32_t q : {2u, 3u, 5u, 0u}) {
    const FieldSpec f = FieldSpec::from_characteristic(q);
    const auto r = ss::verdict_selfsimilar(p23, f);
    const Verdict want = (q == 2 || q == 3) ? Verdict::NotSimple : Verdict::Simple;
    c.expect(r.verdict == want, "P={2,3} over " + f.name());
    c.expect(r.reduction && r.reduction->dimension == oracle::criterion_nullity({2, 3}, q),
             "P={2,3} reduction over " + f.name());
    if (q == 2 || q == 3) {
      const auto crit = ss::singular_criterion_group(*p23.action, ss::prime_witness(*p23.action, q, f));
      c.expect(crit.singular, "P={2,3} witness c_p not singular over " + f.name());
    }
  }
}

// 6. the X u Z example
void xz(Check& c) {
  const auto A = ss::xz_example();
  const auto e = ss::effectiveness_criterion(*A);
  c.expect(!e.effective && e.witness && A->format(*e.witness) == "a", "effectiveness");
  for (FieldSpec f : {kQ, FieldSpec::prime(2), FieldSpec::prime(3)}) {
    const auto w = ss::xz_witness(*A, f);
    if (f.characteristic() == 0) {
      c.expect(ss::format(*A, w) == "1 - a - x.x* + x.y* + y.x* - y.y*", "witness form");
    }
    c.expect(w.terms().size() == 6, "witness size over " + f.name());
    for (const auto& [name, x] : {std::pair{"z", ss::Letter{2, 0}}, {"x", ss::Letter{0, 0}}, {"y", ss::Letter{1, 0}}}) {
      c.expect(ss::normalize(*A, ss::right_multiply(*A, w, {x}), 8).is_zero(), std::string("f.") + name + " != 0");
    }
    const auto s = ss::hull_element_is_singular(*A, w, 256);
    c.expect(s.outcome == ss::SingularSearch::Outcome::Certificate && s.zero_level == std::optional<std::size_t>(1),
             "search over " + f.name());
  }
}

// 7. weakly branch singular element
void branch(Check& c) {
  const auto G = ss::grigorchuk();
  const std::vector<ss::AutomatonWord> psi1{G->parse_word(""), G->parse_word("a b a b")};
  const std::vector<ss::AutomatonWord> psi2{G->parse_word("b a b a"), G->parse_word("")};
  for (FieldSpec f : {kQ, FieldSpec::prime(2)}) {
    const auto r = ss::branch_singular_element(*G, psi1, psi2, f);
    c.expect(r.nonzero, "nonzero over " + f.name());
    c.expect(r.annihilated, "annihilated over " + f.name());
    for (std::uint32_t b = 0; b < 2; ++b) {
      for (std::uint32_t copy : {0u, 1u, 7u}) {
        c.expect(ss::normalize(*r.action, ss::right_multiply(*r.action, r.c, {{b, copy}}), 10).is_zero(),
                 "letter class not annihilating");
      }
    }
  }
}

// 8. uniqueness
void uniqueness(Check& c) {
  std::mt19937_64 rng(2024);
  std::size_t tested = 0;
  for (const auto& [name, S] : builtin_tables()) {
    if (!is_fundamental(S) || !is_zero_disjunctive(S).holds) continue;
    ++tested;
    const auto I = singular_ideal(S, kQ);
    auto contains_elem = [&](const SubspaceBasis& J, bool idempotents_only) {
      for (ElemId s = 1; s < S.size(); ++s) {
        if (idempotents_only && !S.is_idempotent(s)) continue;
        if (J.contains(AlgebraElement::basis(kQ, s).to_dense(S.size()))) return true;
      }
      return false;
    };
    for (int found = 0, tries = 0; found < 50 && tries < 5000; ++tries) {
      AlgebraElement a(kQ);
      for (int k = 0, n = 1 + int(rng() % 4); k < n; ++k) a.add_term(ElemId(1 + rng() % (S.size() - 1)), long(rng() % 7) - 3);
      if (a.is_zero() || oracle::singular_by_definition(S, as_q(S, a), 0)) continue;
      ++found;
      c.expect(contains_elem(ideal_generated_by(S, kQ, {a}), true), name + ": non-singular a without idempotent");
    }
    const auto basis = elements_of(I);
    for (int k = 0; k < 50; ++k) {
      AlgebraElement a(kQ);
      for (const auto& v : basis) a += Scalar(kQ, long(rng() % 9) - 4) * v;
      c.expect(oracle::singular_by_definition(S, as_q(S, a), 0), name + ": sampled element not singular");
      c.expect(!contains_elem(ideal_generated_by(S, kQ, {a}), false), name + ": singular a generates an element");
    }
  }
  c.expect(tested >= 3, "too few fundamental 0-disjunctive built-ins");
}

// 9. groupoid / Boolean inverse monoid dictionary and skew identities
void dictionary(Check& c) {
  const std::vector<std::vector<int>> C2{{0, 1}, {1, 0}};
  const std::vector<std::pair<std::string, FiniteGroupoid>> gs{
      {"pair(2)", pair_groupoid(2)},
      {"pair(3)", pair_groupoid(3)},
      {"units(2)", disjoint_units(2)},
      {"units(3)", disjoint_units(3)},
      {"C2 trivial on 1 point", action_groupoid(C2, {{0}, {0}})},
      {"C2 swapping 2 points", action_groupoid(C2, {{0, 1}, {1, 0}})}};
  std::vector<BisectionMonoid> small;
  for (const auto& [name, G] : gs) {
    const auto M = bisection_monoid(G);
    const auto& B = M.boolean;
    const auto& S = B.table();
    const auto k = classify(G);
    c.expect(k.effective == is_fundamental(S), name + ": effective");
    c.expect(k.minimal == is_additively_zero_simple(B), name + ": minimal");
    c.expect(k.topologically_free == is_quasi_fundamental(S), name + ": topologically free");
    for (ElemId s = 0; s < S.size(); ++s) {
      for (ElemId t = 0; t < S.size(); ++t) {
        c.expect(S.star(B.skew_difference(s, t)) == B.skew_difference(S.star(s), S.star(t)), name + ": (s-t)*");
      }
    }
    if (S.size() <= 8) small.push_back(M);
  }
  std::size_t maps = 0;
  for (const auto& A : small) {
    for (const auto& B : small) {
      for (const auto& h : enumerate_homomorphisms(A.boolean.table(), B.boolean.table())) {
        const auto p = hom_properties(A.boolean, B.boolean, h);
        c.expect(p.orthogonal_joins == p.skew_ops && p.skew_ops == p.boolean_on_idempotents, "hom equivalence");
        ++maps;
      }
    }
  }
  c.expect(maps > 0, "no homomorphisms enumerated");
}

// 10. simple over some GF(p) implies simple over Q
void monotone(Check& c) {
  const std::vector<std::uint32_t> primes{2, 3, 5};
  for (const auto& [name, S] : builtin_tables()) {
    const auto rows = characteristic_sweep(S, primes);
    bool some_p = false;
    for (std::size_t i = 1; i < rows.size(); ++i) some_p = some_p || rows[i].verdict == Verdict::Simple;
    if (some_p) c.expect(rows[0].verdict == Verdict::Simple, name);
  }
  for (const char* spec : {R"({"kind":"prime-set","primes":[2]})", R"({"kind":"prime-set","primes":[2,3]})",
                           R"({"kind":"prime-set","primes":[3]})", R"({"kind":"xz-example"})"}) {
    const auto s = ss::parse_action_spec(std::string(spec));
    bool some_p = false;
    for (auto p : primes) some_p = some_p || ss::verdict_selfsimilar(s, FieldSpec::prime(p)).verdict == Verdict::Simple;
    if (some_p) c.expect(ss::verdict_selfsimilar(s, kQ).verdict == Verdict::Simple, spec);
  }
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "singular ideal matches the brute-force oracle", 10, singular_oracle},
      {2, "tight ideal equals singular ideal", 30, hausdorff},
      {3, "K_0 S is isomorphic to the Steinberg algebra", 60, steinberg},
      {4, "finite simplicity verdicts", 5, finite_verdicts},
      {5, "prime-set construction depends on the characteristic", 30, prime_sets},
      {6, "X u Z example is non-effective and non-simple", 1, xz},
      {7, "weakly branch element is singular", 1, branch},
      {8, "uniqueness property suite", 60, uniqueness},
      {9, "groupoid dictionary and skew identities", 60, dictionary},
      {10, "simple over GF(p) implies simple over Q", 60, monotone},
  };
  int failed = 0;
  for (const auto& k : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      k.run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > k.limit_s) {
      std::ostringstream m;
      m << "over time limit of " << k.limit_s << " s";
      c.failures.push_back(m.str());
    }
    const bool ok = c.failures.empty();
    failed += !ok;
    std::printf("%s [%d] %s (%zu checks, %.3f s)%s%s\n", ok ? "PASS" : "FAIL", k.id, k.name, c.checks, secs,
                ok ? "" : ": ", c.summary().c_str());
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
