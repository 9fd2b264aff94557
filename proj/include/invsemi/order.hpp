#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "invsemi/caps.hpp"
#include "invsemi/semigroup.hpp"

namespace invsemi {

/// A filter of E(S). E is finite, so every filter is the principal filter
/// above its least element.
struct FilterRep {
  ElemId generator;
  friend bool operator==(FilterRep, FilterRep) = default;
  friend auto operator<=>(FilterRep, FilterRep) = default;
};

struct CoverWitness {
  ElemId e;
  std::vector<ElemId> cover;
};

/// Nonzero idempotents f <= e, in index order (e itself included).
std::vector<ElemId> idempotents_below(const InverseSemigroupTable& S, ElemId e);

/// Members of the filter: nonzero idempotents f >= generator.
std::vector<ElemId> filter_members(const InverseSemigroupTable& S, FilterRep F);
bool in_filter(const InverseSemigroupTable& S, FilterRep F, ElemId f);

/// True iff every nonzero idempotent g <= e meets some f in F. Throws
/// NotIdempotent / NotBelow on bad input.
bool is_cover(const InverseSemigroupTable& S, ElemId e, const std::vector<ElemId>& F);

struct DisjunctivityResult {
  bool holds = true;
  /// For 0-disjunctivity: (e, f) with 0 != f < e and no 0 != g <= e orthogonal to f.
  std::optional<std::pair<ElemId, ElemId>> witness;
  /// For strong 0-disjunctivity: the element covered by strictly smaller ones.
  std::optional<CoverWitness> cover;
};

DisjunctivityResult is_zero_disjunctive(const InverseSemigroupTable& S);
DisjunctivityResult is_strongly_zero_disjunctive(const InverseSemigroupTable& S);

std::vector<FilterRep> filters(const InverseSemigroupTable& S);
/// Principal filters of minimal nonzero idempotents.
std::vector<FilterRep> ultrafilters(const InverseSemigroupTable& S);
std::vector<FilterRep> tight_filters(const InverseSemigroupTable& S);
bool is_tight(const InverseSemigroupTable& S, FilterRep F);

/// Minimal nonzero idempotents.
std::vector<ElemId> minimal_idempotents(const InverseSemigroupTable& S);

/// Inclusion-minimal covers of e by elements strictly below it. Throws
/// CapExceeded when more than caps.cover elements lie strictly between 0 and e.
std::vector<CoverWitness> minimal_covers(const InverseSemigroupTable& S, ElemId e,
                                         const Caps& caps = {});

}  // namespace invsemi
