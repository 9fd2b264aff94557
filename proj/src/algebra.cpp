#include "invsemi/algebra.hpp"

#include <deque>

#include "invsemi/errors.hpp"
#include "invsemi/order.hpp"

namespace invsemi {

AlgebraElement AlgebraElement::basis(FieldSpec f, ElemId s) {
  AlgebraElement a(f);
  a.add_term(s, Scalar::one(f));
  return a;
}

AlgebraElement AlgebraElement::from_dense(FieldSpec f, const DenseVector& v) {
  AlgebraElement a(f);
  for (ElemId s = 1; s < v.size(); ++s) a.add_term(s, v[s]);
  return a;
}

Scalar AlgebraElement::coeff(ElemId s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void AlgebraElement::add_term(ElemId s, const Scalar& c) {
  if (!(c.field() == field_)) {
    throw FieldMismatch("coefficient over " + c.field().name() + " added to element over " +
                        field_.name());
  }
  if (s == kZero || c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(s, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DenseVector AlgebraElement::to_dense(std::size_t n) const {
  DenseVector v = zero_vector(field_, n);
  for (const auto& [s, c] : terms_) {
    if (s >= n) throw InvalidArgument("element index out of range");
    v[s] = c;
  }
  return v;
}

void AlgebraElement::check(const AlgebraElement& o) const {
  if (!(field_ == o.field_)) {
    throw FieldMismatch("algebra elements over " + field_.name() + " and " + o.field_.name());
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check(o);
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check(o);
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) {
  AlgebraElement out(a.field_);
  for (const auto& [s, x] : a.terms_) out.add_term(s, c * x);
  return out;
}

AlgebraElement multiply(const InverseSemigroupTable& S, const AlgebraElement& a,
                        const AlgebraElement& b) {
  if (!(a.field() == b.field())) {
    throw FieldMismatch("algebra elements over " + a.field().name() + " and " + b.field().name());
  }
  AlgebraElement out(a.field());
  for (const auto& [s, x] : a.terms()) {
    for (const auto& [t, y] : b.terms()) out.add_term(S.mul(s, t), x * y);
  }
  return out;
}

DenseVector left_mul(const InverseSemigroupTable& S, ElemId s, const DenseVector& v) {
  const FieldSpec f = v.empty() ? FieldSpec::rationals() : v.front().field();
  DenseVector out = zero_vector(f, v.size());
  for (ElemId t = 1; t < v.size(); ++t) {
    if (!v[t].is_zero()) out[S.mul(s, t)] += v[t];
  }
  out[0] = Scalar::zero(f);
  return out;
}

DenseVector right_mul(const InverseSemigroupTable& S, const DenseVector& v, ElemId s) {
  const FieldSpec f = v.empty() ? FieldSpec::rationals() : v.front().field();
  DenseVector out = zero_vector(f, v.size());
  for (ElemId t = 1; t < v.size(); ++t) {
    if (!v[t].is_zero()) out[S.mul(t, s)] += v[t];
  }
  out[0] = Scalar::zero(f);
  return out;
}

std::vector<AlgebraElement> elements_of(const SubspaceBasis& B) {
  std::vector<AlgebraElement> out;
  for (const auto& r : B.rows()) out.push_back(AlgebraElement::from_dense(B.field(), r));
  return out;
}

namespace {

AlgebraElement times_elem(const InverseSemigroupTable& S, const AlgebraElement& a, ElemId f,
                          bool on_right) {
  AlgebraElement out(a.field());
  for (const auto& [s, c] : a.terms()) out.add_term(on_right ? S.mul(s, f) : S.mul(f, s), c);
  return out;
}

SingularCertificate singular_one_sided(const InverseSemigroupTable& S, const AlgebraElement& a,
                                       bool on_right) {
  SingularCertificate cert;
  for (ElemId e : S.idempotents()) {
    bool found = false;
    for (ElemId f : idempotents_below(S, e)) {
      if (times_elem(S, a, f, on_right).is_zero()) {
        cert.annihilators[e] = f;
        found = true;
        break;
      }
    }
    if (!found) {
      cert.failing = e;
      cert.annihilators.clear();
      return cert;
    }
  }
  cert.singular = true;
  return cert;
}

Scalar sum_above(const InverseSemigroupTable& S, const AlgebraElement& a, ElemId u) {
  Scalar sum = Scalar::zero(a.field());
  for (const auto& [s, c] : a.terms()) {
    if (natural_leq(S, u, s)) sum += c;
  }
  return sum;
}

}  // namespace

SingularCertificate is_singular(const InverseSemigroupTable& S, const AlgebraElement& a) {
  return singular_one_sided(S, a, true);
}

SingularCertificate is_singular_left(const InverseSemigroupTable& S, const AlgebraElement& a) {
  return singular_one_sided(S, a, false);
}

bool is_singular_symmetric(const InverseSemigroupTable& S, const AlgebraElement& a) {
  for (ElemId t = 1; t < S.size(); ++t) {
    bool found = false;
    for (ElemId u = 1; u < S.size() && !found; ++u) {
      found = natural_leq(S, u, t) && sum_above(S, a, u).is_zero();
    }
    if (!found) return false;
  }
  return true;
}

std::optional<ElemId> find_magic(const InverseSemigroupTable& S, const AlgebraElement& a) {
  for (ElemId t = 1; t < S.size(); ++t) {
    bool magic = true;
    for (ElemId u = 1; u < S.size() && magic; ++u) {
      if (natural_leq(S, u, t) && sum_above(S, a, u).is_zero()) magic = false;
    }
    if (magic) return t;
  }
  return std::nullopt;
}

SubspaceBasis singular_ideal(const InverseSemigroupTable& S, FieldSpec f, bool parallel) {
  const std::size_t n = S.size();
  std::vector<DenseVector> rows;
  DenseVector pin = zero_vector(f, n);
  pin[0] = Scalar::one(f);
  rows.push_back(pin);
  // Coefficient of v in a*m is the sum of a_s over s with sm = v.
  for (ElemId m : minimal_idempotents(S)) {
    std::vector<DenseVector> eq(n, zero_vector(f, n));
    std::vector<bool> used(n, false);
    for (ElemId s = 1; s < n; ++s) {
      const ElemId v = S.mul(s, m);
      if (v == 0) continue;
      eq[v][s] = Scalar::one(f);
      used[v] = true;
    }
    for (ElemId v = 1; v < n; ++v) {
      if (used[v]) rows.push_back(std::move(eq[v]));
    }
  }
  return nullspace(f, std::move(rows), n, parallel);
}

SubspaceBasis ideal_generated_by(const InverseSemigroupTable& S, FieldSpec f,
                                 const std::vector<AlgebraElement>& seeds, const Caps& caps) {
  const std::size_t n = S.size();
  SubspaceBasis B(f, n);
  std::deque<DenseVector> work;
  auto push = [&](DenseVector v) {
    if (B.insert(v)) {
      if (B.dim() > caps.ideal_dim) {
        throw CapExceeded("ideal dimension exceeds " + std::to_string(caps.ideal_dim));
      }
      work.push_back(std::move(v));
    }
  };
  for (const auto& a : seeds) {
    if (!(a.field() == f)) throw FieldMismatch("seed over " + a.field().name());
    push(a.to_dense(n));
  }
  while (!work.empty()) {
    DenseVector v = std::move(work.front());
    work.pop_front();
    for (ElemId s = 1; s < n; ++s) {
      push(left_mul(S, s, v));
      push(right_mul(S, v, s));
    }
  }
  return B;
}

std::vector<AlgebraElement> tight_generators(const InverseSemigroupTable& S, FieldSpec f,
                                             const Caps& caps) {
  std::vector<AlgebraElement> gens;
  for (ElemId e : S.idempotents()) {
    for (const auto& w : minimal_covers(S, e, caps)) {
      AlgebraElement prod = AlgebraElement::basis(f, e);
      for (ElemId g : w.cover) {
        prod = multiply(S, prod, AlgebraElement::basis(f, e) - AlgebraElement::basis(f, g));
      }
      gens.push_back(std::move(prod));
    }
  }
  return gens;
}

SubspaceBasis tight_ideal(const InverseSemigroupTable& S, FieldSpec f, const Caps& caps) {
  return ideal_generated_by(S, f, tight_generators(S, f, caps), caps);
}

EssentialAlgebra quotient_algebra(const InverseSemigroupTable& S, const SubspaceBasis& ideal) {
  const FieldSpec f = ideal.field();
  const std::size_t n = S.size();
  EssentialAlgebra Q{f, {}, {}};
  std::vector<bool> pivot(n, false);
  for (auto p : ideal.pivots()) pivot[p] = true;
  for (ElemId s = 1; s < n; ++s) {
    if (!pivot[s]) Q.basis.push_back(s);
  }
  Q.structure.assign(Q.dim(), std::vector<DenseVector>(Q.dim()));
  for (std::size_t i = 0; i < Q.dim(); ++i) {
    for (std::size_t j = 0; j < Q.dim(); ++j) {
      Q.structure[i][j] = coset_image(S, ideal, Q, S.mul(Q.basis[i], Q.basis[j]));
    }
  }
  return Q;
}

DenseVector coset_image(const InverseSemigroupTable& S, const SubspaceBasis& ideal,
                        const EssentialAlgebra& Q, ElemId s) {
  DenseVector v = zero_vector(Q.field, S.size());
  if (s != 0) v[s] = Scalar::one(Q.field);
  v = ideal.reduce(std::move(v));
  DenseVector out = zero_vector(Q.field, Q.dim());
  for (std::size_t i = 0; i < Q.dim(); ++i) out[i] = v[Q.basis[i]];
  return out;
}

EssentialAlgebra essential_algebra(const InverseSemigroupTable& S, FieldSpec f) {
  return quotient_algebra(S, singular_ideal(S, f));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Simple: return "simple";
    case Verdict::NotSimple: return "not-simple";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

SimplicityReport simplicity_verdict(const InverseSemigroupTable& S, FieldSpec f, const Caps& caps) {
  SimplicityReport r{f, is_congruence_free(S), singular_ideal(S, f), tight_ideal(S, f, caps),
                     false, Verdict::Inconclusive, {}};
  r.hausdorff_agree = r.singular == r.tight;
  r.verdict = r.congruence_free.holds && r.singular.dim() == 0 ? Verdict::Simple : Verdict::NotSimple;
  for (const auto& a : elements_of(r.singular)) r.certificates.push_back(is_singular(S, a));
  return r;
}

std::vector<SimplicityReport> characteristic_sweep(const InverseSemigroupTable& S,
                                                   const std::vector<std::uint32_t>& primes,
                                                   const Caps& caps) {
  std::vector<SimplicityReport> out;
  out.push_back(simplicity_verdict(S, FieldSpec::rationals(), caps));
  for (auto p : primes) out.push_back(simplicity_verdict(S, FieldSpec::prime(p), caps));
  return out;
}

}  // namespace invsemi
