#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invsemi/field.hpp"
#include "invsemi/selfsimilar.hpp"

namespace invsemi::selfsimilar {

/// u g v* in the inverse hull of X* G.
struct HullTerm {
  Word u;
  GroupElem g;
  Word v;
  friend auto operator<=>(const HullTerm&, const HullTerm&) = default;
};

/// nullopt is the zero of the hull.
using HullElement = std::optional<HullTerm>;

HullTerm hull_identity(const SelfSimilarAction& A);
HullTerm hull_letter(const SelfSimilarAction& A, Letter x);
HullTerm hull_word(const SelfSimilarAction& A, const Word& w);
HullTerm hull_group(const SelfSimilarAction& A, const GroupElem& g);

/// Product in normal form: zero unless the inner words are prefix comparable.
HullElement hull_mul(const SelfSimilarAction& A, const HullElement& s, const HullElement& t);
HullElement hull_star(const SelfSimilarAction& A, const HullElement& s);
std::string format(const SelfSimilarAction& A, const HullTerm& t);

/// Finite linear combination of nonzero hull elements.
class HullAlgebraElement {
 public:
  explicit HullAlgebraElement(FieldSpec f) : field_(f) {}

  FieldSpec field() const { return field_; }
  const std::map<HullTerm, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const HullTerm& t) const;
  void add_term(const HullElement& t, const Scalar& c);
  void add_term(const HullElement& t, long c) { add_term(t, Scalar(field_, c)); }

  HullAlgebraElement& operator+=(const HullAlgebraElement& o);
  HullAlgebraElement& operator-=(const HullAlgebraElement& o);
  friend HullAlgebraElement operator+(HullAlgebraElement a, const HullAlgebraElement& b) { return a += b; }
  friend HullAlgebraElement operator-(HullAlgebraElement a, const HullAlgebraElement& b) { return a -= b; }
  friend HullAlgebraElement operator*(const Scalar& c, const HullAlgebraElement& a);
  friend bool operator==(const HullAlgebraElement&, const HullAlgebraElement&) = default;

 private:
  FieldSpec field_;
  std::map<HullTerm, Scalar> terms_;
};

HullAlgebraElement hull_multiply(const SelfSimilarAction& A, const HullAlgebraElement& a,
                                 const HullAlgebraElement& b);
/// a * w for a word w.
HullAlgebraElement right_multiply(const SelfSimilarAction& A, const HullAlgebraElement& a, const Word& w);
/// Merges terms whose group parts the oracle proves equal.
HullAlgebraElement normalize(const SelfSimilarAction& A, const HullAlgebraElement& a, std::size_t depth);
/// The (empty, g, empty) terms.
HullAlgebraElement group_part(const HullAlgebraElement& a);
/// All terms have empty v, so a lies in KM.
bool in_monoid_algebra(const HullAlgebraElement& a);
/// a = sum over w of w a_w with a_w in KG. Throws InvalidArgument outside KM.
std::map<Word, HullAlgebraElement> blocks(const HullAlgebraElement& a);
std::string format(const SelfSimilarAction& A, const HullAlgebraElement& a);

struct SingularSearch {
  enum class Outcome { Certificate, Refutation, Inconclusive };
  Outcome outcome = Outcome::Inconclusive;
  /// Probe u and an extension v with a u v = 0.
  std::vector<std::pair<Word, Word>> annihilators;
  /// Probe u with a u in KM having a block of nonzero coefficient sum; such
  /// a block survives every right multiplication.
  std::optional<Word> refuting_probe;
  std::optional<Word> refuting_block;
  /// a u = 0 for every u of this length, which proves singularity outright.
  std::optional<std::size_t> zero_level;
  std::vector<Word> unresolved;
  std::size_t probes = 0;
};
std::string to_string(SingularSearch::Outcome o);

/// Breadth-first over probe words in length-lex order; inflated letters are
/// probed over the copies in the support of a plus one fresh copy.
/// Annihilators are searched up to `extension_length` letters.
SingularSearch hull_element_is_singular(const SelfSimilarAction& A, const HullAlgebraElement& a,
                                        std::size_t probe_budget, std::size_t extension_length = 2,
                                        std::size_t depth = 6, bool parallel = true);

struct CriterionSum {
  /// Primes in the order sigma.
  std::vector<std::uint32_t> order;
  std::vector<std::uint32_t> a, b;
  Scalar sum;
};

struct CriterionResult {
  bool singular = false;
  /// phi(c): primes occurring in the support.
  std::vector<std::uint32_t> primes;
  /// Every (sigma, a, b) sum, zero or not.
  std::vector<CriterionSum> sums;
  std::size_t nonzero = 0;
};

/// Exact singularity test for c in KG over the prime-set construction (or
/// its inflation). Throws WrongActionShape for other actions or when c has
/// non-group terms.
CriterionResult singular_criterion_group(const SelfSimilarAction& A, const HullAlgebraElement& c,
                                         bool parallel = true);

/// c = sum of all g in C_p x C_p.
HullAlgebraElement prime_witness(const SelfSimilarAction& A, std::uint32_t p, FieldSpec f);

/// All c in KG satisfying the criterion with the full prime set: the
/// elements of KG singular in K_0 S. Since S has a nonzero singular element
/// iff KG does, dimension 0 means the singular ideal vanishes.
struct GroupRingReduction {
  std::size_t group_order = 0;
  std::size_t equations = 0;
  std::size_t dimension = 0;
  std::vector<HullAlgebraElement> basis;
};
/// Throws WrongActionShape, CapExceeded past `max_tuples` letter tuples.
GroupRingReduction group_ring_singular_subspace(const SelfSimilarAction& A, FieldSpec f,
                                                bool parallel = true, std::size_t max_tuples = 200000);

struct BranchEquation {
  Letter letter;
  /// Term-by-term expansion before cancellation.
  std::vector<std::pair<HullTerm, Scalar>> expansion;
  HullAlgebraElement result;
};

struct BranchResult {
  std::shared_ptr<const AutomatonAction> action;
  HullAlgebraElement c;
  std::vector<BranchEquation> equations;
  /// Statements such as "h1 != 1" with the oracle answer.
  std::vector<std::pair<std::string, Tri>> distinct;
  bool nonzero = false;
  bool annihilated = false;
};

/// c = (1 - g1)(1 - g2) for g1, g2 in the first level stabilizer with
/// section vectors (1, h1, 1, ...) and (h2, 1, ...). Throws ShapeViolation
/// when the vectors do not have that shape to the oracle's depth.
BranchResult branch_singular_element(const AutomatonAction& base, const std::vector<AutomatonWord>& psi_g1,
                                     const std::vector<AutomatonWord>& psi_g2, FieldSpec f,
                                     std::size_t depth = 8);

}  // namespace invsemi::selfsimilar
