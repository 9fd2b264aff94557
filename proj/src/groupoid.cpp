#include "invsemi/groupoid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "invsemi/congruence.hpp"
#include "invsemi/errors.hpp"

namespace invsemi {

std::optional<std::string> check_groupoid(const FiniteGroupoid& G) {
  const std::size_t m = G.num_arrows();
  if (G.ran.size() != m || G.compose.size() != m || G.inverse.size() != m) {
    return "arrow tables have inconsistent sizes";
  }
  if (G.unit.size() != G.num_objects) return "one unit per object required";
  for (std::size_t x = 0; x < G.num_objects; ++x) {
    const std::size_t u = G.unit[x];
    if (G.dom[u] != x || G.ran[u] != x) return "unit of object " + std::to_string(x) + " misplaced";
  }
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t h = 0; h < m; ++h) {
      const bool defined = G.compose[g][h] >= 0;
      if (defined != (G.dom[g] == G.ran[h])) return "composition defined off d(g) = r(h)";
      if (!defined) continue;
      const auto gh = static_cast<std::size_t>(G.compose[g][h]);
      if (G.dom[gh] != G.dom[h] || G.ran[gh] != G.ran[g]) return "composite has wrong ends";
      for (std::size_t k = 0; k < m; ++k) {
        if (G.compose[h][k] < 0) continue;
        const auto hk = static_cast<std::size_t>(G.compose[h][k]);
        if (G.compose[gh][k] != G.compose[g][hk]) return "composition is not associative";
      }
    }
    if (G.compose[g][G.unit[G.dom[g]]] != static_cast<std::int32_t>(g) ||
        G.compose[G.unit[G.ran[g]]][g] != static_cast<std::int32_t>(g)) {
      return "units are not identities";
    }
    const std::size_t gi = G.inverse[g];
    if (G.compose[g][gi] != static_cast<std::int32_t>(G.unit[G.ran[g]]) ||
        G.compose[gi][g] != static_cast<std::int32_t>(G.unit[G.dom[g]])) {
      return "inverse of arrow " + std::to_string(g) + " is wrong";
    }
  }
  return std::nullopt;
}

namespace {

// Fills compose from a product callback on (g, h) with d(g) = r(h).
template <typename Product>
void fill_compose(FiniteGroupoid& G, Product product) {
  const std::size_t m = G.num_arrows();
  G.compose.assign(m, std::vector<std::int32_t>(m, -1));
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t h = 0; h < m; ++h) {
      if (G.dom[g] == G.ran[h]) G.compose[g][h] = static_cast<std::int32_t>(product(g, h));
    }
  }
}

}  // namespace

FiniteGroupoid pair_groupoid(std::size_t n) {
  FiniteGroupoid G;
  G.num_objects = n;
  // Arrow (i, j) goes from j to i.
  for (std::size_t i = 0; i < n; ++i) {
    G.object_names.push_back(std::to_string(i + 1));
    for (std::size_t j = 0; j < n; ++j) {
      G.arrow_names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
      G.ran.push_back(i);
      G.dom.push_back(j);
    }
  }
  for (std::size_t g = 0; g < n * n; ++g) G.inverse.push_back(G.dom[g] * n + G.ran[g]);
  for (std::size_t i = 0; i < n; ++i) G.unit.push_back(i * n + i);
  fill_compose(G, [&](std::size_t g, std::size_t h) { return G.ran[g] * n + G.dom[h]; });
  return G;
}

FiniteGroupoid disjoint_units(std::size_t n) {
  FiniteGroupoid G;
  G.num_objects = n;
  for (std::size_t i = 0; i < n; ++i) {
    G.object_names.push_back(std::to_string(i + 1));
    G.arrow_names.push_back("u" + std::to_string(i + 1));
    G.dom.push_back(i);
    G.ran.push_back(i);
    G.inverse.push_back(i);
    G.unit.push_back(i);
  }
  fill_compose(G, [](std::size_t g, std::size_t) { return g; });
  return G;
}

FiniteGroupoid action_groupoid(const std::vector<std::vector<int>>& group_mul,
                               const std::vector<std::vector<int>>& act) {
  const std::size_t k = group_mul.size();
  if (act.size() != k || k == 0) throw InvalidArgument("action table must have one row per group element");
  const std::size_t n = act[0].size();
  std::size_t identity = k;
  for (std::size_t g = 0; g < k && identity == k; ++g) {
    bool is_id = true;
    for (std::size_t h = 0; h < k; ++h) is_id = is_id && group_mul[g][h] == static_cast<int>(h);
    if (is_id) identity = g;
  }
  if (identity == k) throw InvalidArgument("group table has no identity");
  FiniteGroupoid G;
  G.num_objects = n;
  auto id = [n](std::size_t g, std::size_t x) { return g * n + x; };
  for (std::size_t x = 0; x < n; ++x) G.object_names.push_back(std::to_string(x));
  for (std::size_t g = 0; g < k; ++g) {
    for (std::size_t x = 0; x < n; ++x) {
      G.arrow_names.push_back("(g" + std::to_string(g) + "," + std::to_string(x) + ")");
      G.dom.push_back(x);
      G.ran.push_back(static_cast<std::size_t>(act[g][x]));
    }
  }
  for (std::size_t g = 0; g < k; ++g) {
    std::size_t ginv = 0;
    while (group_mul[g][ginv] != static_cast<int>(identity)) ++ginv;
    for (std::size_t x = 0; x < n; ++x) G.inverse.push_back(id(ginv, static_cast<std::size_t>(act[g][x])));
  }
  for (std::size_t x = 0; x < n; ++x) G.unit.push_back(id(identity, x));
  fill_compose(G, [&](std::size_t a, std::size_t b) {
    return id(static_cast<std::size_t>(group_mul[a / n][b / n]), G.dom[b]);
  });
  return G;
}

Germ canonical_germ(const InverseSemigroupTable& S, ElemId s, ElemId e) {
  if (S.mul(e, S.dom(s)) != e || e == 0) {
    throw InvalidArgument("germ base " + S.label(e) + " is not below the domain of " + S.label(s));
  }
  return {S.mul(s, e), {e}};
}

bool germs_equal(const InverseSemigroupTable& S, ElemId s, ElemId t, ElemId e) {
  for (ElemId w = 1; w < S.size(); ++w) {
    if (natural_leq(S, w, s) && natural_leq(S, w, t) && S.mul(e, S.dom(w)) == e) return true;
  }
  return false;
}

std::optional<std::size_t> GermGroupoid::find(const Germ& g) const {
  for (std::size_t i = 0; i < germs.size(); ++i) {
    if (germs[i] == g) return i;
  }
  return std::nullopt;
}

namespace {

GermGroupoid germ_groupoid(const InverseSemigroupTable& S, const std::vector<FilterRep>& objects) {
  GermGroupoid G;
  G.objects = objects;
  G.num_objects = objects.size();
  std::map<ElemId, std::size_t> obj_index;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    obj_index[objects[i].generator] = i;
    G.object_names.push_back("up(" + S.label(objects[i].generator) + ")");
  }
  std::set<std::pair<ElemId, ElemId>> seen;
  for (ElemId s = 1; s < S.size(); ++s) {
    for (const auto& x : objects) {
      const ElemId e = x.generator;
      if (S.mul(e, S.dom(s)) != e) continue;
      const Germ g = canonical_germ(S, s, e);
      if (!obj_index.count(S.ran(g.rep))) continue;  // range outside the object set
      seen.insert({g.rep, e});
    }
  }
  std::unordered_map<std::uint64_t, std::size_t> index;
  auto key = [](ElemId r, ElemId e) { return (std::uint64_t{r} << 32) | e; };
  for (auto [rep, e] : seen) {
    index[key(rep, e)] = G.germs.size();
    G.germs.push_back({rep, {e}});
    G.dom.push_back(obj_index.at(e));
    G.ran.push_back(obj_index.at(S.ran(rep)));
    G.arrow_names.push_back("[" + S.label(rep) + "," + S.label(e) + "]");
  }
  for (const auto& g : G.germs) {
    G.inverse.push_back(index.at(key(S.star(g.rep), S.ran(g.rep))));
  }
  for (const auto& x : objects) G.unit.push_back(index.at(key(x.generator, x.generator)));
  fill_compose(G, [&](std::size_t a, std::size_t b) {
    const ElemId e = G.germs[b].base.generator;
    return index.at(key(S.mul(G.germs[a].rep, G.germs[b].rep), e));
  });
  return G;
}

}  // namespace

GermGroupoid universal_groupoid(const InverseSemigroupTable& S) { return germ_groupoid(S, filters(S)); }

GermGroupoid tight_groupoid(const InverseSemigroupTable& S) {
  return germ_groupoid(S, tight_filters(S));
}

std::vector<std::size_t> orbits(const FiniteGroupoid& G) {
  std::vector<std::size_t> orbit(G.num_objects);
  std::iota(orbit.begin(), orbit.end(), std::size_t{0});
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t g = 0; g < G.num_arrows(); ++g) {
      const std::size_t a = orbit[G.dom[g]], b = orbit[G.ran[g]];
      if (a != b) {
        const std::size_t lo = std::min(a, b), hi = std::max(a, b);
        for (auto& o : orbit) {
          if (o == hi) o = lo;
        }
        changed = true;
      }
    }
  }
  std::map<std::size_t, std::size_t> renum;
  for (auto& o : orbit) o = renum.try_emplace(o, renum.size()).first->second;
  return orbit;
}

GroupoidClass classify(const FiniteGroupoid& G) {
  GroupoidClass c;
  c.effective = true;
  for (std::size_t g = 0; g < G.num_arrows(); ++g) {
    if (G.dom[g] == G.ran[g] && !G.is_unit(g)) c.effective = false;
  }
  c.topologically_free = c.effective;
  const auto orb = orbits(G);
  c.minimal = G.num_objects > 0 &&
              std::all_of(orb.begin(), orb.end(), [](std::size_t o) { return o == 0; });
  return c;
}

// ---------------------------------------------------------------------------

BooleanInverseSemigroup::BooleanInverseSemigroup(InverseSemigroupTable S) : S_(std::move(S)) {
  const std::size_t n = S_.size();
  leq_.assign(n * n, false);
  for (ElemId s = 0; s < n; ++s) {
    for (ElemId t = 0; t < n; ++t) leq_[s * n + t] = natural_leq(S_, s, t);
  }
  join_.assign(n * n, -1);
  for (ElemId s = 0; s < n; ++s) {
    for (ElemId t = s; t < n; ++t) {
      std::vector<ElemId> ub;
      for (ElemId u = 0; u < n; ++u) {
        if (leq(s, u) && leq(t, u)) ub.push_back(u);
      }
      for (ElemId u : ub) {
        if (std::all_of(ub.begin(), ub.end(), [&](ElemId v) { return leq(u, v); })) {
          join_[s * n + t] = join_[t * n + s] = u;
          break;
        }
      }
    }
  }
  std::vector<ElemId> E{0};
  E.insert(E.end(), S_.idempotents().begin(), S_.idempotents().end());
  for (ElemId e : E) {
    for (ElemId f : E) {
      if (!join(e, f)) {
        throw NotBoolean("idempotents " + S_.label(e) + " and " + S_.label(f) + " have no join");
      }
      const ElemId c = complement(e, f);
      if (join(c, S_.mul(e, f)) != e) {
        throw NotBoolean("no relative complement of " + S_.label(f) + " in " + S_.label(e));
      }
      for (ElemId g : E) {
        if (S_.mul(e, *join(f, g)) != *join(S_.mul(e, f), S_.mul(e, g))) {
          throw NotBoolean("idempotents do not form a distributive lattice");
        }
      }
    }
  }
  for (ElemId s = 0; s < n; ++s) {
    for (ElemId t = 0; t < n; ++t) {
      if (!compatible(s, t)) continue;
      const auto st = join(s, t);
      if (!st) throw NotBoolean("compatible " + S_.label(s) + ", " + S_.label(t) + " have no join");
      for (ElemId u = 0; u < n; ++u) {
        if (S_.mul(u, *st) != join(S_.mul(u, s), S_.mul(u, t)) ||
            S_.mul(*st, u) != join(S_.mul(s, u), S_.mul(t, u))) {
          throw NotBoolean("multiplication does not distribute over the join of " + S_.label(s) +
                           " and " + S_.label(t));
        }
      }
    }
  }
}

bool BooleanInverseSemigroup::compatible(ElemId s, ElemId t) const {
  return S_.is_idempotent(S_.mul(S_.star(s), t)) && S_.is_idempotent(S_.mul(s, S_.star(t)));
}

std::optional<ElemId> BooleanInverseSemigroup::join(ElemId s, ElemId t) const {
  const auto j = join_[s * S_.size() + t];
  if (j < 0) return std::nullopt;
  return static_cast<ElemId>(j);
}

ElemId BooleanInverseSemigroup::complement(ElemId e, ElemId f) const {
  // Candidates g <= e with gf = 0; the largest one, if it dominates the rest.
  std::vector<ElemId> cands{0};
  for (ElemId g : S_.idempotents()) {
    if (S_.mul(g, e) == g && S_.mul(g, f) == 0) cands.push_back(g);
  }
  for (ElemId g : cands) {
    if (std::all_of(cands.begin(), cands.end(), [&](ElemId h) { return S_.mul(h, g) == h; })) {
      return g;
    }
  }
  throw NotBoolean("no largest idempotent below " + S_.label(e) + " orthogonal to " + S_.label(f));
}

ElemId BooleanInverseSemigroup::skew_difference(ElemId s, ElemId t) const {
  const ElemId left = complement(S_.ran(s), S_.ran(t));
  const ElemId right = complement(S_.dom(s), S_.dom(t));
  return S_.mul(S_.mul(left, s), right);
}

ElemId BooleanInverseSemigroup::skew_add(ElemId s, ElemId t) const {
  const auto j = join(skew_difference(s, t), t);
  if (!j) throw NotBoolean("skew addition of " + S_.label(s) + " and " + S_.label(t) + " undefined");
  return *j;
}

BisectionMonoid bisection_monoid(const FiniteGroupoid& G, const Caps& caps) {
  const std::size_t m = G.num_arrows();
  if (m > caps.arrows || m > 30) {
    throw CapExceeded("groupoid has " + std::to_string(m) + " arrows, cap is " +
                      std::to_string(caps.arrows));
  }
  std::vector<std::uint64_t> sets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::uint64_t doms = 0, rans = 0;
    bool ok = true;
    for (std::size_t g = 0; g < m && ok; ++g) {
      if (!(mask >> g & 1)) continue;
      const std::uint64_t d = std::uint64_t{1} << G.dom[g], r = std::uint64_t{1} << G.ran[g];
      ok = !(doms & d) && !(rans & r);
      doms |= d;
      rans |= r;
    }
    if (ok) sets.push_back(mask);
  }
  std::unordered_map<std::uint64_t, ElemId> index;
  for (std::size_t i = 0; i < sets.size(); ++i) index[sets[i]] = static_cast<ElemId>(i);
  const std::size_t n = sets.size();
  RawTable raw;
  raw.mul.assign(n, std::vector<ElemId>(n));
  raw.star.resize(n);
  raw.labels.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::uint64_t inv = 0;
    std::string label;
    for (std::size_t g = 0; g < m; ++g) {
      if (!(sets[a] >> g & 1)) continue;
      inv |= std::uint64_t{1} << G.inverse[g];
      label += (label.empty() ? "" : ",") + G.arrow_names[g];
    }
    raw.star[a] = index.at(inv);
    raw.labels[a] = a == 0 ? "0" : "{" + label + "}";
    for (std::size_t b = 0; b < n; ++b) {
      std::uint64_t prod = 0;
      for (std::size_t g = 0; g < m; ++g) {
        if (!(sets[a] >> g & 1)) continue;
        for (std::size_t h = 0; h < m; ++h) {
          if ((sets[b] >> h & 1) && G.compose[g][h] >= 0) prod |= std::uint64_t{1} << G.compose[g][h];
        }
      }
      raw.mul[a][b] = index.at(prod);
    }
  }
  return {BooleanInverseSemigroup(make_trusted(std::move(raw))), std::move(sets)};
}

// ---------------------------------------------------------------------------

bool is_additive_ideal(const BooleanInverseSemigroup& B, const ElemSet& I) {
  const auto& S = B.table();
  if (I.size() != S.size() || !I[0]) return false;
  for (ElemId s = 0; s < S.size(); ++s) {
    if (!I[s]) continue;
    for (ElemId t = 0; t < S.size(); ++t) {
      if (!I[S.mul(s, t)] || !I[S.mul(t, s)]) return false;
      if (I[t] && B.compatible(s, t) && !I[*B.join(s, t)]) return false;
    }
  }
  return true;
}

ElemSet additive_ideal_generated(const BooleanInverseSemigroup& B, const std::vector<ElemId>& seeds) {
  const auto& S = B.table();
  ElemSet I(S.size(), false);
  I[0] = true;
  for (ElemId s : seeds) I[s] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (ElemId s = 0; s < S.size(); ++s) {
      if (!I[s]) continue;
      for (ElemId t = 0; t < S.size(); ++t) {
        for (ElemId x : {S.mul(s, t), S.mul(t, s)}) {
          if (!I[x]) I[x] = changed = true;
        }
        if (I[t] && B.compatible(s, t)) {
          const ElemId j = *B.join(s, t);
          if (!I[j]) I[j] = changed = true;
        }
      }
    }
  }
  return I;
}

std::vector<ElemSet> enumerate_additive_ideals(const BooleanInverseSemigroup& B) {
  const std::size_t n = B.table().size();
  std::set<ElemSet> principal;
  for (ElemId s = 0; s < n; ++s) principal.insert(additive_ideal_generated(B, {s}));
  std::set<ElemSet> found{additive_ideal_generated(B, {})};
  std::vector<ElemSet> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<ElemSet> next;
    for (const auto& I : frontier) {
      for (const auto& P : principal) {
        std::vector<ElemId> seeds;
        for (ElemId s = 0; s < n; ++s) {
          if (I[s] || P[s]) seeds.push_back(s);
        }
        ElemSet J = additive_ideal_generated(B, seeds);
        if (found.insert(J).second) next.push_back(std::move(J));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

bool is_additively_zero_simple(const BooleanInverseSemigroup& B) {
  return B.table().size() > 1 && enumerate_additive_ideals(B).size() == 2;
}

bool is_additively_congruence_free(const BooleanInverseSemigroup& B) {
  return is_fundamental(B.table()) && is_additively_zero_simple(B);
}

AdditiveQuotient additive_ideal_quotient(const BooleanInverseSemigroup& B, const ElemSet& I) {
  if (!is_additive_ideal(B, I)) throw NotAdditiveIdeal("set is not an additive ideal");
  const auto& S = B.table();
  const std::size_t n = S.size();
  std::vector<std::uint32_t> block(n);
  std::iota(block.begin(), block.end(), 0u);
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
    return block[x] == x ? x : block[x] = find(block[x]);
  };
  for (ElemId s = 0; s < n; ++s) {
    for (ElemId t = s + 1; t < n; ++t) {
      for (ElemId u = 0; u < n; ++u) {
        if (B.leq(u, s) && B.leq(u, t) && I[B.skew_difference(s, u)] && I[B.skew_difference(t, u)]) {
          const auto a = find(s), b = find(t);
          block[std::max(a, b)] = std::min(a, b);
          break;
        }
      }
    }
  }
  for (auto& b : block) b = find(b);
  Partition P(block);
  if (!is_congruence(S, P)) throw NotAdditiveIdeal("quotient relation is not a congruence");
  AdditiveQuotient q{quotient(S, P), {}};
  for (ElemId s = 0; s < n; ++s) q.projection.push_back(P.block(s));
  return q;
}

ElemSet ideal_of_invariant_set(const BisectionMonoid& M, const FiniteGroupoid& G,
                               const std::vector<bool>& W) {
  const auto& S = M.boolean.table();
  ElemSet I(S.size(), false);
  I[0] = true;
  for (ElemId U : S.idempotents()) {
    bool inside = true;
    for (std::size_t g = 0; g < G.num_arrows(); ++g) {
      if ((M.sets[U] >> g & 1) && !W[G.dom[g]]) inside = false;
    }
    if (!inside) continue;
    for (ElemId a = 0; a < S.size(); ++a) {
      for (ElemId b = 0; b < S.size(); ++b) I[S.mul(S.mul(a, U), b)] = true;
    }
  }
  return I;
}

std::vector<bool> invariant_set_of_ideal(const BisectionMonoid& M, const FiniteGroupoid& G,
                                         const ElemSet& I) {
  const auto& S = M.boolean.table();
  std::vector<bool> W(G.num_objects, false);
  for (ElemId U : S.idempotents()) {
    if (!I[U]) continue;
    for (std::size_t g = 0; g < G.num_arrows(); ++g) {
      if (M.sets[U] >> g & 1) W[G.dom[g]] = true;
    }
  }
  return W;
}

std::vector<std::vector<ElemId>> enumerate_homomorphisms(const InverseSemigroupTable& A,
                                                         const InverseSemigroupTable& B,
                                                         std::size_t limit) {
  const std::size_t n = A.size();
  std::vector<std::vector<ElemId>> out;
  std::vector<ElemId> phi(n, 0);
  // Assign phi[0..k] and check every product whose factors and value are assigned.
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (out.size() >= limit) return;
    if (k == n) {
      out.push_back(phi);
      return;
    }
    for (ElemId y = 0; y < B.size(); ++y) {
      if (k == 0 && y != 0) break;
      phi[k] = y;
      bool ok = true;
      for (ElemId i = 0; i <= k && ok; ++i) {
        for (ElemId j = 0; j <= k && ok; ++j) {
          const ElemId p = A.mul(i, j);
          if (p > k || (i != k && j != k && p != k)) continue;
          ok = phi[p] == B.mul(phi[i], phi[j]);
        }
      }
      if (ok) rec(k + 1);
    }
  };
  rec(0);
  return out;
}

HomProperties hom_properties(const BooleanInverseSemigroup& A, const BooleanInverseSemigroup& B,
                             const std::vector<ElemId>& phi) {
  const auto& S = A.table();
  std::vector<ElemId> E{0};
  E.insert(E.end(), S.idempotents().begin(), S.idempotents().end());
  HomProperties h{true, true, true};
  for (ElemId e : E) {
    for (ElemId f : E) {
      const bool joins = phi[*A.join(e, f)] == B.join(phi[e], phi[f]);
      if (S.mul(e, f) == 0 && !joins) h.orthogonal_joins = false;
      if (!joins || phi[A.complement(e, f)] != B.complement(phi[e], phi[f])) {
        h.boolean_on_idempotents = false;
      }
    }
  }
  if (phi[0] != 0) h.boolean_on_idempotents = false;
  for (ElemId s = 0; s < S.size() && h.skew_ops; ++s) {
    for (ElemId t = 0; t < S.size(); ++t) {
      if (phi[A.skew_difference(s, t)] != B.skew_difference(phi[s], phi[t]) ||
          phi[A.skew_add(s, t)] != B.skew_add(phi[s], phi[t])) {
        h.skew_ops = false;
        break;
      }
    }
  }
  return h;
}

// ---------------------------------------------------------------------------

DenseVector convolve(const FiniteGroupoid& G, const DenseVector& f, const DenseVector& g) {
  const std::size_t m = G.num_arrows();
  if (f.size() != m || g.size() != m) throw InvalidArgument("function has wrong number of arrows");
  const FieldSpec F = m ? f.front().field() : FieldSpec::rationals();
  DenseVector out = zero_vector(F, m);
  for (std::size_t a = 0; a < m; ++a) {
    if (f[a].is_zero()) continue;
    for (std::size_t b = 0; b < m; ++b) {
      if (G.compose[a][b] >= 0 && !g[b].is_zero()) out[G.compose[a][b]] += f[a] * g[b];
    }
  }
  return out;
}

DenseVector phi(const InverseSemigroupTable& S, const GermGroupoid& G, const AlgebraElement& a) {
  DenseVector out = zero_vector(a.field(), G.num_arrows());
  for (std::size_t g = 0; g < G.num_arrows(); ++g) {
    const ElemId t = G.germs[g].rep, e = G.germs[g].base.generator;
    for (const auto& [u, c] : a.terms()) {
      if (S.mul(e, S.dom(u)) == e && germs_equal(S, u, t, e)) out[g] += c;
    }
  }
  return out;
}

IsoCheck iso_check(const InverseSemigroupTable& S, FieldSpec f) {
  const GermGroupoid G = universal_groupoid(S);
  std::vector<DenseVector> images(S.size());
  images[0] = zero_vector(f, G.num_arrows());
  for (ElemId s = 1; s < S.size(); ++s) images[s] = phi(S, G, AlgebraElement::basis(f, s));
  IsoCheck r;
  r.rank = span(f, {images.begin() + 1, images.end()}, G.num_arrows()).dim();
  r.bijective = r.rank == S.size() - 1 && r.rank == G.num_arrows();
  r.multiplicative = true;
  for (ElemId s = 1; s < S.size(); ++s) {
    for (ElemId t = 1; t < S.size(); ++t) {
      ++r.pairs_checked;
      if (convolve(G, images[s], images[t]) != images[S.mul(s, t)]) {
        r.multiplicative = false;
        if (!r.failing_pair) r.failing_pair = std::pair{s, t};
      }
    }
  }
  return r;
}

SubspaceBasis restriction_kernel(const InverseSemigroupTable& S, FieldSpec f) {
  const GermGroupoid G = universal_groupoid(S);
  const auto tight = tight_filters(S);
  const std::size_t n = S.size();
  std::vector<DenseVector> rows(G.num_arrows(), zero_vector(f, n));
  for (ElemId s = 1; s < n; ++s) {
    const DenseVector v = phi(S, G, AlgebraElement::basis(f, s));
    for (std::size_t g = 0; g < G.num_arrows(); ++g) rows[g][s] = v[g];
  }
  std::vector<DenseVector> eqs;
  DenseVector pin = zero_vector(f, n);
  pin[0] = Scalar::one(f);
  eqs.push_back(pin);
  for (std::size_t g = 0; g < G.num_arrows(); ++g) {
    if (std::find(tight.begin(), tight.end(), G.objects[G.dom[g]]) != tight.end()) {
      eqs.push_back(std::move(rows[g]));
    }
  }
  return nullspace(f, std::move(eqs), n);
}

SubspaceBasis bisection_kernel(const BisectionMonoid& M, const FiniteGroupoid& G, FieldSpec f) {
  const std::size_t n = M.sets.size();
  std::vector<DenseVector> eqs;
  DenseVector pin = zero_vector(f, n);
  pin[0] = Scalar::one(f);
  eqs.push_back(pin);
  for (std::size_t g = 0; g < G.num_arrows(); ++g) {
    DenseVector row = zero_vector(f, n);
    for (std::size_t U = 1; U < n; ++U) {
      if (M.sets[U] >> g & 1) row[U] = Scalar::one(f);
    }
    eqs.push_back(std::move(row));
  }
  return nullspace(f, std::move(eqs), n);
}

SubspaceBasis disjoint_union_ideal(const BisectionMonoid& M, FieldSpec f, const Caps& caps) {
  const auto& S = M.boolean.table();
  std::unordered_map<std::uint64_t, ElemId> index;
  for (ElemId i = 0; i < M.sets.size(); ++i) index[M.sets[i]] = i;
  std::vector<AlgebraElement> seeds;
  for (ElemId U : S.idempotents()) {
    for (ElemId V : S.idempotents()) {
      if (U >= V || (M.sets[U] & M.sets[V])) continue;
      AlgebraElement a = AlgebraElement::basis(f, U) + AlgebraElement::basis(f, V);
      a.add_term(index.at(M.sets[U] | M.sets[V]), -1);
      seeds.push_back(std::move(a));
    }
  }
  return ideal_generated_by(S, f, seeds, caps);
}

EchelonBasis singular_functions(const FiniteGroupoid& G, FieldSpec f) {
  return EchelonBasis(f, G.num_arrows());
}

}  // namespace invsemi
