#include "invsemi/order.hpp"

#include <algorithm>
#include <cstdint>

#include "invsemi/errors.hpp"

namespace invsemi {

namespace {

// Idempotents commute, so for idempotents f <= e iff fe = f.
bool idem_leq(const InverseSemigroupTable& S, ElemId f, ElemId e) { return S.mul(f, e) == f; }

void require_idempotent(const InverseSemigroupTable& S, ElemId e) {
  if (e >= S.size() || !S.is_idempotent(e)) {
    throw NotIdempotent("element " + std::to_string(e) + " is not an idempotent");
  }
}

// Does the candidate set cover e? Same test as is_cover without validation.
bool covers(const InverseSemigroupTable& S, ElemId e, const std::vector<ElemId>& F) {
  for (ElemId g : S.idempotents()) {
    if (!idem_leq(S, g, e)) continue;
    bool met = false;
    for (ElemId f : F) {
      if (S.mul(g, f) != 0) {
        met = true;
        break;
      }
    }
    if (!met) return false;
  }
  return true;
}

std::vector<ElemId> strictly_below(const InverseSemigroupTable& S, ElemId e) {
  std::vector<ElemId> out;
  for (ElemId f : S.idempotents()) {
    if (f != e && idem_leq(S, f, e)) out.push_back(f);
  }
  return out;
}

}  // namespace

std::vector<ElemId> idempotents_below(const InverseSemigroupTable& S, ElemId e) {
  std::vector<ElemId> out;
  for (ElemId f : S.idempotents()) {
    if (idem_leq(S, f, e)) out.push_back(f);
  }
  return out;
}

std::vector<ElemId> filter_members(const InverseSemigroupTable& S, FilterRep F) {
  std::vector<ElemId> out;
  for (ElemId f : S.idempotents()) {
    if (idem_leq(S, F.generator, f)) out.push_back(f);
  }
  return out;
}

bool in_filter(const InverseSemigroupTable& S, FilterRep F, ElemId f) {
  return f != 0 && S.is_idempotent(f) && idem_leq(S, F.generator, f);
}

bool is_cover(const InverseSemigroupTable& S, ElemId e, const std::vector<ElemId>& F) {
  require_idempotent(S, e);
  for (ElemId f : F) {
    require_idempotent(S, f);
    if (!idem_leq(S, f, e)) {
      throw NotBelow("element " + S.label(f) + " is not below " + S.label(e));
    }
  }
  return covers(S, e, F);
}

DisjunctivityResult is_zero_disjunctive(const InverseSemigroupTable& S) {
  for (ElemId e : S.idempotents()) {
    for (ElemId f : strictly_below(S, e)) {
      bool found = false;
      for (ElemId g : S.idempotents()) {
        if (idem_leq(S, g, e) && S.mul(f, g) == 0) {
          found = true;
          break;
        }
      }
      if (!found) return {false, std::pair{e, f}, std::nullopt};
    }
  }
  return {};
}

DisjunctivityResult is_strongly_zero_disjunctive(const InverseSemigroupTable& S) {
  // A cover only grows into a cover, so it is enough to test the largest
  // candidate set for each e.
  for (ElemId e : S.idempotents()) {
    auto below = strictly_below(S, e);
    if (!below.empty() && covers(S, e, below)) {
      return {false, std::nullopt, CoverWitness{e, std::move(below)}};
    }
  }
  return {};
}

std::vector<FilterRep> filters(const InverseSemigroupTable& S) {
  std::vector<FilterRep> out;
  for (ElemId e : S.idempotents()) out.push_back({e});
  return out;
}

std::vector<ElemId> minimal_idempotents(const InverseSemigroupTable& S) {
  std::vector<ElemId> out;
  for (ElemId e : S.idempotents()) {
    if (strictly_below(S, e).empty()) out.push_back(e);
  }
  return out;
}

std::vector<FilterRep> ultrafilters(const InverseSemigroupTable& S) {
  std::vector<FilterRep> out;
  for (ElemId m : minimal_idempotents(S)) out.push_back({m});
  return out;
}

bool is_tight(const InverseSemigroupTable& S, FilterRep F) {
  // Fails iff some e' in F is covered by the elements below it that are
  // outside F.
  for (ElemId ep : filter_members(S, F)) {
    std::vector<ElemId> outside;
    for (ElemId f : idempotents_below(S, ep)) {
      if (!idem_leq(S, F.generator, f)) outside.push_back(f);
    }
    if (!outside.empty() && covers(S, ep, outside)) return false;
  }
  return true;
}

std::vector<FilterRep> tight_filters(const InverseSemigroupTable& S) {
  std::vector<FilterRep> out;
  for (FilterRep F : filters(S)) {
    if (is_tight(S, F)) out.push_back(F);
  }
  return out;
}

std::vector<CoverWitness> minimal_covers(const InverseSemigroupTable& S, ElemId e,
                                         const Caps& caps) {
  require_idempotent(S, e);
  if (e == 0) throw NotIdempotent("0 has no covers");
  const auto below = strictly_below(S, e);
  if (below.size() > caps.cover || below.size() >= 63) {
    throw CapExceeded(std::to_string(below.size()) + " idempotents below " + S.label(e) +
                      " exceed the cover cap " + std::to_string(caps.cover));
  }
  const std::size_t k = below.size();
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m) masks.push_back(m);
  // Increasing size, so a cover with no earlier cover inside it is minimal.
  std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    return __builtin_popcountll(a) < __builtin_popcountll(b);
  });
  std::vector<std::uint64_t> found;
  std::vector<CoverWitness> out;
  for (std::uint64_t m : masks) {
    bool dominated = false;
    for (std::uint64_t f : found) {
      if ((f & m) == f) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    std::vector<ElemId> F;
    for (std::size_t i = 0; i < k; ++i) {
      if (m >> i & 1) F.push_back(below[i]);
    }
    if (covers(S, e, F)) {
      found.push_back(m);
      out.push_back({e, std::move(F)});
    }
  }
  return out;
}

}  // namespace invsemi
