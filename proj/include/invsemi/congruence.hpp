#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invsemi/caps.hpp"
#include "invsemi/semigroup.hpp"

namespace invsemi {

/// An equivalence relation on the elements, stored as canonical block
/// numbers: blocks are numbered in order of their least element.
class Partition {
 public:
  Partition() = default;
  /// Canonicalizes arbitrary block labels.
  explicit Partition(std::vector<std::uint32_t> block);

  static Partition equality(std::size_t n);
  static Partition universal(std::size_t n);

  std::size_t size() const { return block_.size(); }
  std::uint32_t block(ElemId a) const { return block_[a]; }
  std::size_t num_blocks() const;
  bool same(ElemId a, ElemId b) const { return block_[a] == block_[b]; }
  bool is_equality() const { return num_blocks() == size(); }
  bool is_universal() const { return num_blocks() == 1; }
  /// Every block of *this lies inside a block of other.
  bool refines(const Partition& other) const;
  std::vector<std::vector<ElemId>> blocks() const;
  const std::vector<std::uint32_t>& raw() const { return block_; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<std::uint32_t> block_;
};

/// Largest idempotent-separating congruence: s ~ t iff ses* = tet* for all e.
Partition mu(const InverseSemigroupTable& S);
bool is_congruence(const InverseSemigroupTable& S, const Partition& P);
bool separates_idempotents(const InverseSemigroupTable& S, const Partition& P);

bool is_fundamental(const InverseSemigroupTable& S);
/// Every nonzero element of the centralizer of E(S) lies above a nonzero idempotent.
bool is_quasi_fundamental(const InverseSemigroupTable& S);
/// Same property via mu: mu-related nonzero pairs have a common nonzero lower bound.
bool is_quasi_fundamental_via_mu(const InverseSemigroupTable& S);

std::vector<ElemId> centralizer_of_idempotents(const InverseSemigroupTable& S);

/// Two-sided ideal S s S (with s itself).
std::vector<ElemId> principal_ideal(const InverseSemigroupTable& S, ElemId s);
bool is_zero_simple(const InverseSemigroupTable& S);

enum class CongruenceFreeReason { CongruenceFree, NotFundamental, NotZeroSimple, NotZeroDisjunctive };

/// "congruence_free", "not_fundamental", "not_0_simple", "not_0_disjunctive".
std::string to_string(CongruenceFreeReason r);

struct CongruenceFreeResult {
  bool holds = false;
  CongruenceFreeReason reason = CongruenceFreeReason::CongruenceFree;
  bool fundamental = false;
  bool zero_simple = false;
  bool zero_disjunctive = false;
};

/// Fundamental, 0-simple and E(S) 0-disjunctive; the reason names the first
/// failing criterion in that order.
CongruenceFreeResult is_congruence_free(const InverseSemigroupTable& S);

/// Smallest congruence identifying a and b.
Partition principal_congruence(const InverseSemigroupTable& S, ElemId a, ElemId b);
/// Smallest congruence containing both.
Partition join(const InverseSemigroupTable& S, const Partition& P, const Partition& Q);

/// All congruences, as joins of principal congruences. Throws CapExceeded if
/// |S| > caps.oracle.
std::vector<Partition> enumerate_congruences(const InverseSemigroupTable& S, const Caps& caps = {});

/// Quotient table S / P, with P a congruence. Element i of the quotient is
/// block i; labels are those of the least element of each block.
InverseSemigroupTable quotient(const InverseSemigroupTable& S, const Partition& P);

}  // namespace invsemi
