#pragma once

#include <map>
#include <optional>
#include <vector>

#include "invsemi/caps.hpp"
#include "invsemi/congruence.hpp"
#include "invsemi/field.hpp"
#include "invsemi/linalg.hpp"
#include "invsemi/semigroup.hpp"

namespace invsemi {

/// Element of the contracted algebra K_0 S: a finite sum of nonzero
/// semigroup elements with nonzero coefficients.
class AlgebraElement {
 public:
  explicit AlgebraElement(FieldSpec f) : field_(f) {}
  static AlgebraElement basis(FieldSpec f, ElemId s);
  /// Dense vectors are indexed by ElemId; entry 0 is ignored.
  static AlgebraElement from_dense(FieldSpec f, const DenseVector& v);

  FieldSpec field() const { return field_; }
  const std::map<ElemId, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(ElemId s) const;
  /// Adds c*s; terms on the zero element vanish.
  void add_term(ElemId s, const Scalar& c);
  void add_term(ElemId s, long c) { add_term(s, Scalar(field_, c)); }
  DenseVector to_dense(std::size_t n) const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  void check(const AlgebraElement& o) const;
  FieldSpec field_;
  std::map<ElemId, Scalar> terms_;
};

/// Bilinear extension of the table product. Throws FieldMismatch.
AlgebraElement multiply(const InverseSemigroupTable& S, const AlgebraElement& a,
                        const AlgebraElement& b);
DenseVector left_mul(const InverseSemigroupTable& S, ElemId s, const DenseVector& v);
DenseVector right_mul(const InverseSemigroupTable& S, const DenseVector& v, ElemId s);

/// Subspaces of K_0 S are echelon bases over ElemId-indexed vectors.
using SubspaceBasis = EchelonBasis;
std::vector<AlgebraElement> elements_of(const SubspaceBasis& B);

struct SingularCertificate {
  bool singular = false;
  /// Chosen annihilating f below each nonzero idempotent e.
  std::map<ElemId, ElemId> annihilators;
  /// When not singular: an e with no annihilating f below it.
  std::optional<ElemId> failing;
};

/// Right form: every nonzero idempotent e has 0 != f <= e with af = 0.
SingularCertificate is_singular(const InverseSemigroupTable& S, const AlgebraElement& a);
/// Left form: fa = 0 instead of af = 0.
SingularCertificate is_singular_left(const InverseSemigroupTable& S, const AlgebraElement& a);
/// Symmetric form: every nonzero t has 0 != u <= t with sum_{s >= u} a_s = 0.
bool is_singular_symmetric(const InverseSemigroupTable& S, const AlgebraElement& a);

/// Least t such that sum_{s >= u} a_s != 0 for every 0 != u <= t; none iff a
/// is singular.
std::optional<ElemId> find_magic(const InverseSemigroupTable& S, const AlgebraElement& a);

/// {a : am = 0 for every minimal nonzero idempotent m}.
SubspaceBasis singular_ideal(const InverseSemigroupTable& S, FieldSpec f, bool parallel = true);

/// Smallest two-sided ideal containing the seeds. Throws CapExceeded past
/// caps.ideal_dim.
SubspaceBasis ideal_generated_by(const InverseSemigroupTable& S, FieldSpec f,
                                 const std::vector<AlgebraElement>& seeds, const Caps& caps = {});

/// prod_{f in F} (e - f) for each nonzero idempotent e and minimal cover F.
std::vector<AlgebraElement> tight_generators(const InverseSemigroupTable& S, FieldSpec f,
                                             const Caps& caps = {});
SubspaceBasis tight_ideal(const InverseSemigroupTable& S, FieldSpec f, const Caps& caps = {});

/// K_0 S modulo a subspace ideal, on the coset basis of non-pivot elements.
struct EssentialAlgebra {
  FieldSpec field;
  std::vector<ElemId> basis;
  /// structure[i][j] = coordinates of basis[i] * basis[j].
  std::vector<std::vector<DenseVector>> structure;
  std::size_t dim() const { return basis.size(); }
};

EssentialAlgebra quotient_algebra(const InverseSemigroupTable& S, const SubspaceBasis& ideal);
EssentialAlgebra essential_algebra(const InverseSemigroupTable& S, FieldSpec f);
/// Coordinates of the image of s in the quotient.
DenseVector coset_image(const InverseSemigroupTable& S, const SubspaceBasis& ideal,
                        const EssentialAlgebra& Q, ElemId s);

enum class Verdict { Simple, NotSimple, Inconclusive };
std::string to_string(Verdict v);

struct SimplicityReport {
  FieldSpec field;
  CongruenceFreeResult congruence_free;
  SubspaceBasis singular;
  SubspaceBasis tight;
  /// Tight and singular ideals agree (always expected for finite S).
  bool hausdorff_agree = false;
  Verdict verdict = Verdict::Inconclusive;
  /// Annihilator choices for each singular basis vector.
  std::vector<SingularCertificate> certificates;
};

SimplicityReport simplicity_verdict(const InverseSemigroupTable& S, FieldSpec f,
                                    const Caps& caps = {});
/// Reports over Q followed by GF(p) for each p.
std::vector<SimplicityReport> characteristic_sweep(const InverseSemigroupTable& S,
                                                   const std::vector<std::uint32_t>& primes,
                                                   const Caps& caps = {});

}  // namespace invsemi
