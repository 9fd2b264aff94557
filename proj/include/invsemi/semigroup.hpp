#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invsemi/caps.hpp"

namespace invsemi {

/// Index of an element in a finite semigroup table. 0 is always the zero.
using ElemId = std::uint32_t;
inline constexpr ElemId kZero = 0;

/// Unchecked input for validate_table: a row-major product table and an
/// involution, as read from a file or produced by a builder.
struct RawTable {
  std::vector<std::vector<ElemId>> mul;
  std::vector<ElemId> star;
  std::vector<std::string> labels;  // may be empty
};

/// One failed axiom with the elements that witness it.
struct Violation {
  enum class Kind { Shape, NonAssociative, BadInverse, NonCommutingIdempotents, ZeroNotAbsorbing };
  Kind kind;
  std::vector<ElemId> witness;
  std::string message;
};

std::string to_string(Violation::Kind k);

/// A finite inverse semigroup with zero. Immutable once built; construct
/// through validate_table or one of the builders.
class InverseSemigroupTable {
 public:
  std::size_t size() const { return n_; }
  ElemId mul(ElemId a, ElemId b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  ElemId star(ElemId a) const { return star_[a]; }
  bool is_idempotent(ElemId a) const { return mul(a, a) == a; }

  /// s*s and ss*.
  ElemId dom(ElemId s) const { return mul(star(s), s); }
  ElemId ran(ElemId s) const { return mul(s, star(s)); }

  const std::string& label(ElemId a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<ElemId> find(std::string_view label) const;
  /// Like find, but throws InvalidArgument for unknown labels.
  ElemId at(std::string_view label) const;

  /// Nonzero idempotents in index order.
  const std::vector<ElemId>& idempotents() const { return idempotents_; }
  std::span<const ElemId> table() const { return mul_; }

  RawTable to_raw() const;

 private:
  friend InverseSemigroupTable make_trusted(RawTable raw);
  std::size_t n_ = 0;
  std::vector<ElemId> mul_;
  std::vector<ElemId> star_;
  std::vector<std::string> labels_;
  std::vector<ElemId> idempotents_;
};

/// All axiom violations of a candidate table (at most one per kind; the
/// witness is the first in index order). `parallel` selects the OpenMP
/// associativity kernel.
std::vector<Violation> check_table(const RawTable& raw, bool parallel = true);

/// Checked construction. Throws AxiomViolation carrying the first violation.
InverseSemigroupTable validate_table(RawTable raw, bool parallel = true);

/// Builds without checking axioms (shape is still checked). For builders whose
/// output is an inverse semigroup by construction.
InverseSemigroupTable make_trusted(RawTable raw);

/// Natural partial order: s <= t iff s = t s* s.
bool natural_leq(const InverseSemigroupTable& S, ElemId s, ElemId t);

/// The four textbook characterizations of the natural order, individually.
enum class OrderForm { RightIdempotent, LeftIdempotent, RightDomain, LeftRange };
bool natural_leq_via(const InverseSemigroupTable& S, ElemId s, ElemId t, OrderForm form);

/// A partial injective map on {0, ..., ground-1}; kNone marks undefined points.
class PartialBijection {
 public:
  static constexpr int kNone = -1;

  PartialBijection() = default;
  explicit PartialBijection(std::size_t ground);
  /// Throws InvalidArgument if the map is not injective or out of range.
  PartialBijection(std::size_t ground, std::vector<int> images);

  static PartialBijection identity(std::size_t ground);
  static PartialBijection partial_identity(std::size_t ground, const std::vector<int>& points);

  std::size_t ground() const { return images_.size(); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }
  bool empty() const;
  PartialBijection inverse() const;

  /// Composition as functions: (f * g)(x) = f(g(x)).
  friend PartialBijection operator*(const PartialBijection& f, const PartialBijection& g);
  friend bool operator==(const PartialBijection&, const PartialBijection&) = default;
  friend auto operator<=>(const PartialBijection&, const PartialBijection&) = default;

 private:
  std::vector<int> images_;
};

/// Inverse semigroup generated by `gens` and their inverses, with the empty
/// map as zero. Labels are shortest words in the generator names ("g1",
/// "g1^-1", "g1.g2", ...). Throws CapExceeded past caps.closure elements or
/// caps.ground_set points.
InverseSemigroupTable generate_from_partial_bijections(const std::vector<PartialBijection>& gens,
                                                       const Caps& caps = {},
                                                       std::vector<std::string> names = {});

/// JSON semigroup files: {"size": n, "mul": [[...]], "star": [...], "labels": [...]}.
RawTable parse_table_json(std::string_view text);
std::string table_to_json(const InverseSemigroupTable& S);

}  // namespace invsemi
