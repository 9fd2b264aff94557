#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invsemi/algebra.hpp"
#include "invsemi/caps.hpp"
#include "invsemi/order.hpp"
#include "invsemi/semigroup.hpp"

namespace invsemi {

/// A finite groupoid with the discrete topology. Arrows are numbered
/// 0..num_arrows()-1, objects 0..num_objects-1.
struct FiniteGroupoid {
  std::size_t num_objects = 0;
  std::vector<std::string> object_names;
  std::vector<std::string> arrow_names;
  std::vector<std::size_t> dom;
  std::vector<std::size_t> ran;
  /// compose[g][h] = gh when d(g) = r(h), else -1.
  std::vector<std::vector<std::int32_t>> compose;
  std::vector<std::size_t> inverse;
  /// Identity arrow at each object.
  std::vector<std::size_t> unit;

  std::size_t num_arrows() const { return dom.size(); }
  bool is_unit(std::size_t g) const { return unit[dom[g]] == g; }
};

/// Checks the groupoid axioms; returns a description of the first failure.
std::optional<std::string> check_groupoid(const FiniteGroupoid& G);

FiniteGroupoid pair_groupoid(std::size_t n);
/// n objects, units only.
FiniteGroupoid disjoint_units(std::size_t n);
/// Transformation groupoid of a finite group acting on points: arrows (g, x)
/// from x to g.x. group_mul[g][h] is the product gh, act[g][x] the image of x.
FiniteGroupoid action_groupoid(const std::vector<std::vector<int>>& group_mul,
                               const std::vector<std::vector<int>>& act);

struct Germ {
  ElemId rep;
  FilterRep base;
  friend bool operator==(const Germ&, const Germ&) = default;
};

/// Germ [s, up(e)] in canonical form: the representative is s e, the least
/// element below s whose domain contains e. Requires e <= s*s.
Germ canonical_germ(const InverseSemigroupTable& S, ElemId s, ElemId e);
/// Germ equality by its definition: a common lower bound u <= s, t with e <= u*u.
bool germs_equal(const InverseSemigroupTable& S, ElemId s, ElemId t, ElemId e);

struct GermGroupoid : FiniteGroupoid {
  std::vector<FilterRep> objects;
  std::vector<Germ> germs;
  /// Arrow index of a canonical germ, if present.
  std::optional<std::size_t> find(const Germ& g) const;
};

GermGroupoid universal_groupoid(const InverseSemigroupTable& S);
GermGroupoid tight_groupoid(const InverseSemigroupTable& S);

struct GroupoidClass {
  bool effective = false;
  bool minimal = false;
  bool topologically_free = false;
};

/// Finite and discrete: effective and topologically free both mean the
/// isotropy is just the units; minimal means a single orbit.
GroupoidClass classify(const FiniteGroupoid& G);
/// Orbit index of each object.
std::vector<std::size_t> orbits(const FiniteGroupoid& G);

/// Boolean inverse semigroup structure read off an inverse semigroup table:
/// joins of compatible pairs, relative complements and skew operations.
class BooleanInverseSemigroup {
 public:
  /// Throws NotBoolean if E(S) is not a Boolean algebra with relative
  /// complements, a compatible pair lacks a join, or multiplication fails to
  /// distribute over joins.
  explicit BooleanInverseSemigroup(InverseSemigroupTable S);

  const InverseSemigroupTable& table() const { return S_; }
  bool leq(ElemId s, ElemId t) const { return leq_[s * S_.size() + t]; }
  bool compatible(ElemId s, ElemId t) const;
  /// Least upper bound, when one exists.
  std::optional<ElemId> join(ElemId s, ElemId t) const;
  /// e \ f for idempotents: largest idempotent below e orthogonal to f.
  ElemId complement(ElemId e, ElemId f) const;
  /// (ss* \ tt*) s (s*s \ t*t).
  ElemId skew_difference(ElemId s, ElemId t) const;
  /// (s (-) t) v t.
  ElemId skew_add(ElemId s, ElemId t) const;

 private:
  InverseSemigroupTable S_;
  std::vector<bool> leq_;
  std::vector<std::int64_t> join_;
};

/// Bisections of G (subsets on which d and r are injective) under setwise
/// product; zero is the empty set. `sets[i]` is the arrow bitmask of element i.
struct BisectionMonoid {
  BooleanInverseSemigroup boolean;
  std::vector<std::uint64_t> sets;
};

/// Throws CapExceeded past caps.arrows arrows.
BisectionMonoid bisection_monoid(const FiniteGroupoid& G, const Caps& caps = {});

using ElemSet = std::vector<bool>;

bool is_additive_ideal(const BooleanInverseSemigroup& B, const ElemSet& I);
ElemSet additive_ideal_generated(const BooleanInverseSemigroup& B, const std::vector<ElemId>& seeds);
std::vector<ElemSet> enumerate_additive_ideals(const BooleanInverseSemigroup& B);
bool is_additively_zero_simple(const BooleanInverseSemigroup& B);
bool is_additively_congruence_free(const BooleanInverseSemigroup& B);

struct AdditiveQuotient {
  InverseSemigroupTable table;
  /// Image of each element of the source.
  std::vector<ElemId> projection;
};

/// S // I: s ~ t iff some u <= s, t has s (-) u and t (-) u in I. Throws
/// NotAdditiveIdeal.
AdditiveQuotient additive_ideal_quotient(const BooleanInverseSemigroup& B, const ElemSet& I);

/// The additive ideal of bisections generated by the unit sets inside the
/// invariant object set W, and back.
ElemSet ideal_of_invariant_set(const BisectionMonoid& M, const FiniteGroupoid& G,
                               const std::vector<bool>& W);
std::vector<bool> invariant_set_of_ideal(const BisectionMonoid& M, const FiniteGroupoid& G,
                                         const ElemSet& I);

/// Zero-preserving homomorphisms between the underlying tables, found by
/// backtracking. Stops after `limit` maps.
std::vector<std::vector<ElemId>> enumerate_homomorphisms(const InverseSemigroupTable& A,
                                                         const InverseSemigroupTable& B,
                                                         std::size_t limit = 100000);

struct HomProperties {
  bool orthogonal_joins = false;  // phi(e v f) = phi(e) v phi(f) for ef = 0
  bool skew_ops = false;          // preserves skew difference and skew addition
  bool boolean_on_idempotents = false;
};
HomProperties hom_properties(const BooleanInverseSemigroup& A, const BooleanInverseSemigroup& B,
                             const std::vector<ElemId>& phi);

/// Functions on arrows with convolution product.
DenseVector convolve(const FiniteGroupoid& G, const DenseVector& f, const DenseVector& g);

/// f_a on the universal groupoid: f_a([t, x]) = sum of a_u over u with [u, x] = [t, x].
DenseVector phi(const InverseSemigroupTable& S, const GermGroupoid& G, const AlgebraElement& a);

struct IsoCheck {
  bool bijective = false;
  bool multiplicative = false;
  std::size_t rank = 0;
  std::size_t pairs_checked = 0;
  std::optional<std::pair<ElemId, ElemId>> failing_pair;
};

/// Checks that phi: K_0 S -> K G(S) is a bijection and respects the product
/// on all pairs of basis elements.
IsoCheck iso_check(const InverseSemigroupTable& S, FieldSpec f);

/// Kernel of K_0 S -> K G_T(S), a -> f_a restricted to the tight arrows.
SubspaceBasis restriction_kernel(const InverseSemigroupTable& S, FieldSpec f);

/// Kernel of K_0 Gamma -> K G sending a bisection to its indicator function.
SubspaceBasis bisection_kernel(const BisectionMonoid& M, const FiniteGroupoid& G, FieldSpec f);
/// Ideal of K_0 Gamma generated by U + V - (U u V) for disjoint unit bisections.
SubspaceBasis disjoint_union_ideal(const BisectionMonoid& M, FieldSpec f, const Caps& caps = {});

/// Functions whose support has empty interior. Discrete topology: always 0.
EchelonBasis singular_functions(const FiniteGroupoid& G, FieldSpec f);

}  // namespace invsemi
