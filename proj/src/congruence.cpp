#include "invsemi/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "invsemi/errors.hpp"
#include "invsemi/order.hpp"

namespace invsemi {

Partition::Partition(std::vector<std::uint32_t> block) : block_(std::move(block)) {
  std::map<std::uint32_t, std::uint32_t> renum;
  for (auto& b : block_) {
    auto it = renum.try_emplace(b, static_cast<std::uint32_t>(renum.size())).first;
    b = it->second;
  }
}

Partition Partition::equality(std::size_t n) {
  std::vector<std::uint32_t> b(n);
  std::iota(b.begin(), b.end(), 0u);
  return Partition(std::move(b));
}

Partition Partition::universal(std::size_t n) { return Partition(std::vector<std::uint32_t>(n, 0)); }

std::size_t Partition::num_blocks() const {
  std::uint32_t mx = 0;
  for (auto b : block_) mx = std::max(mx, b + 1);
  return block_.empty() ? 0 : mx;
}

bool Partition::refines(const Partition& other) const {
  std::vector<std::int64_t> image(num_blocks(), -1);
  for (std::size_t a = 0; a < size(); ++a) {
    auto& img = image[block_[a]];
    if (img == -1) img = other.block_[a];
    else if (img != other.block_[a]) return false;
  }
  return true;
}

std::vector<std::vector<ElemId>> Partition::blocks() const {
  std::vector<std::vector<ElemId>> out(num_blocks());
  for (ElemId a = 0; a < size(); ++a) out[block_[a]].push_back(a);
  return out;
}

Partition mu(const InverseSemigroupTable& S) {
  std::map<std::vector<ElemId>, std::uint32_t> sig_block;
  std::vector<std::uint32_t> block(S.size());
  for (ElemId s = 0; s < S.size(); ++s) {
    std::vector<ElemId> sig;
    for (ElemId e : S.idempotents()) sig.push_back(S.mul(S.mul(s, e), S.star(s)));
    block[s] = sig_block.try_emplace(sig, static_cast<std::uint32_t>(sig_block.size())).first->second;
  }
  return Partition(std::move(block));
}

bool is_congruence(const InverseSemigroupTable& S, const Partition& P) {
  const std::size_t n = S.size();
  for (ElemId a = 0; a < n; ++a) {
    for (ElemId b = a + 1; b < n; ++b) {
      if (!P.same(a, b)) continue;
      for (ElemId s = 0; s < n; ++s) {
        if (!P.same(S.mul(s, a), S.mul(s, b)) || !P.same(S.mul(a, s), S.mul(b, s))) return false;
      }
    }
  }
  return true;
}

bool separates_idempotents(const InverseSemigroupTable& S, const Partition& P) {
  std::vector<ElemId> idem{0};
  idem.insert(idem.end(), S.idempotents().begin(), S.idempotents().end());
  for (std::size_t i = 0; i < idem.size(); ++i) {
    for (std::size_t j = i + 1; j < idem.size(); ++j) {
      if (P.same(idem[i], idem[j])) return false;
    }
  }
  return true;
}

bool is_fundamental(const InverseSemigroupTable& S) { return mu(S).is_equality(); }

std::vector<ElemId> centralizer_of_idempotents(const InverseSemigroupTable& S) {
  std::vector<ElemId> out;
  for (ElemId s = 0; s < S.size(); ++s) {
    bool central = true;
    for (ElemId e : S.idempotents()) {
      if (S.mul(s, e) != S.mul(e, s)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(s);
  }
  return out;
}

bool is_quasi_fundamental(const InverseSemigroupTable& S) {
  for (ElemId s : centralizer_of_idempotents(S)) {
    if (s == 0) continue;
    bool above = false;
    for (ElemId f : S.idempotents()) {
      if (natural_leq(S, f, s)) {
        above = true;
        break;
      }
    }
    if (!above) return false;
  }
  return true;
}

bool is_quasi_fundamental_via_mu(const InverseSemigroupTable& S) {
  const Partition m = mu(S);
  for (ElemId s = 1; s < S.size(); ++s) {
    for (ElemId t = s + 1; t < S.size(); ++t) {
      if (!m.same(s, t)) continue;
      bool common = false;
      for (ElemId u = 1; u < S.size() && !common; ++u) {
        common = natural_leq(S, u, s) && natural_leq(S, u, t);
      }
      if (!common) return false;
    }
  }
  return true;
}

std::vector<ElemId> principal_ideal(const InverseSemigroupTable& S, ElemId s) {
  std::vector<bool> in(S.size(), false);
  in[s] = true;
  for (ElemId a = 0; a < S.size(); ++a) {
    in[S.mul(a, s)] = true;
    in[S.mul(s, a)] = true;
    for (ElemId b = 0; b < S.size(); ++b) in[S.mul(S.mul(a, s), b)] = true;
  }
  std::vector<ElemId> out;
  for (ElemId a = 0; a < S.size(); ++a) {
    if (in[a]) out.push_back(a);
  }
  return out;
}

bool is_zero_simple(const InverseSemigroupTable& S) {
  if (S.size() < 2) return false;
  for (ElemId s = 1; s < S.size(); ++s) {
    if (principal_ideal(S, s).size() != S.size()) return false;
  }
  return true;
}

std::string to_string(CongruenceFreeReason r) {
  switch (r) {
    case CongruenceFreeReason::CongruenceFree: return "congruence_free";
    case CongruenceFreeReason::NotFundamental: return "not_fundamental";
    case CongruenceFreeReason::NotZeroSimple: return "not_0_simple";
    case CongruenceFreeReason::NotZeroDisjunctive: return "not_0_disjunctive";
  }
  return "unknown";
}

CongruenceFreeResult is_congruence_free(const InverseSemigroupTable& S) {
  CongruenceFreeResult r;
  r.fundamental = is_fundamental(S);
  r.zero_simple = is_zero_simple(S);
  r.zero_disjunctive = is_zero_disjunctive(S).holds;
  if (!r.fundamental) r.reason = CongruenceFreeReason::NotFundamental;
  else if (!r.zero_simple) r.reason = CongruenceFreeReason::NotZeroSimple;
  else if (!r.zero_disjunctive) r.reason = CongruenceFreeReason::NotZeroDisjunctive;
  r.holds = r.fundamental && r.zero_simple && r.zero_disjunctive;
  return r;
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Closes uf (already a congruence) under the extra pairs.
Partition close(const InverseSemigroupTable& S, UnionFind uf,
                std::vector<std::pair<ElemId, ElemId>> work) {
  const std::size_t n = S.size();
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (!uf.unite(x, y)) continue;
    for (ElemId s = 0; s < n; ++s) {
      work.emplace_back(S.mul(s, x), S.mul(s, y));
      work.emplace_back(S.mul(x, s), S.mul(y, s));
    }
  }
  std::vector<std::uint32_t> block(n);
  for (std::uint32_t a = 0; a < n; ++a) block[a] = uf.find(a);
  return Partition(std::move(block));
}

UnionFind from_partition(const Partition& P) {
  UnionFind uf(P.size());
  std::vector<std::int64_t> first(P.num_blocks(), -1);
  for (std::uint32_t a = 0; a < P.size(); ++a) {
    auto& f = first[P.block(a)];
    if (f == -1) f = a;
    else uf.unite(static_cast<std::uint32_t>(f), a);
  }
  return uf;
}

}  // namespace

Partition principal_congruence(const InverseSemigroupTable& S, ElemId a, ElemId b) {
  return close(S, UnionFind(S.size()), {{a, b}});
}

Partition join(const InverseSemigroupTable& S, const Partition& P, const Partition& Q) {
  std::vector<std::pair<ElemId, ElemId>> work;
  std::vector<std::int64_t> first(Q.num_blocks(), -1);
  for (ElemId a = 0; a < Q.size(); ++a) {
    auto& f = first[Q.block(a)];
    if (f == -1) f = a;
    else work.emplace_back(static_cast<ElemId>(f), a);
  }
  return close(S, from_partition(P), std::move(work));
}

std::vector<Partition> enumerate_congruences(const InverseSemigroupTable& S, const Caps& caps) {
  if (S.size() > caps.oracle) {
    throw CapExceeded("congruence enumeration limited to " + std::to_string(caps.oracle) +
                      " elements, got " + std::to_string(S.size()));
  }
  std::set<Partition> principal;
  for (ElemId a = 0; a < S.size(); ++a) {
    for (ElemId b = a + 1; b < S.size(); ++b) principal.insert(principal_congruence(S, a, b));
  }
  std::set<Partition> found{Partition::equality(S.size())};
  std::vector<Partition> frontier{Partition::equality(S.size())};
  while (!frontier.empty()) {
    std::vector<Partition> next;
    for (const auto& C : frontier) {
      for (const auto& P : principal) {
        Partition J = join(S, C, P);
        if (found.insert(J).second) next.push_back(std::move(J));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

InverseSemigroupTable quotient(const InverseSemigroupTable& S, const Partition& P) {
  const auto blocks = P.blocks();
  const std::size_t k = blocks.size();
  RawTable raw;
  raw.mul.assign(k, std::vector<ElemId>(k));
  raw.star.resize(k);
  raw.labels.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const ElemId a = blocks[i].front();
    raw.star[i] = P.block(S.star(a));
    raw.labels[i] = S.label(a);
    for (std::size_t j = 0; j < k; ++j) raw.mul[i][j] = P.block(S.mul(a, blocks[j].front()));
  }
  return make_trusted(std::move(raw));
}

}  // namespace invsemi
