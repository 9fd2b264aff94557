#include "invsemi/hull.hpp"

#include <algorithm>
#include <exception>
#include <set>

#include "invsemi/errors.hpp"
#include "invsemi/linalg.hpp"

namespace invsemi::selfsimilar {

HullTerm hull_identity(const SelfSimilarAction& A) { return {{}, A.identity(), {}}; }
HullTerm hull_letter(const SelfSimilarAction& A, Letter x) { return {{x}, A.identity(), {}}; }
HullTerm hull_word(const SelfSimilarAction& A, const Word& w) { return {w, A.identity(), {}}; }
HullTerm hull_group(const SelfSimilarAction& A, const GroupElem& g) { return {{}, A.canonical(g), {}}; }

namespace {

bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

// u g v* . w h z*: if w = v w' this is u g(w') g|_w' h z*; if v = w v' then
// v'* h = h|_y y* with y = h^-1(v').
HullElement hull_mul(const SelfSimilarAction& A, const HullElement& s, const HullElement& t) {
  if (!s || !t) return std::nullopt;
  const auto& [u, g, v] = *s;
  const auto& [w, h, z] = *t;
  if (is_prefix(v, w)) {
    const Word rest(w.begin() + std::ptrdiff_t(v.size()), w.end());
    return HullTerm{concat(u, act_word(A, g, rest)),
                    A.canonical(A.multiply(restrict_word(A, g, rest), h)), z};
  }
  if (is_prefix(w, v)) {
    const Word rest(v.begin() + std::ptrdiff_t(w.size()), v.end());
    const Word y = act_word(A, A.inverse(h), rest);
    return HullTerm{u, A.canonical(A.multiply(g, restrict_word(A, h, y))), concat(z, y)};
  }
  return std::nullopt;
}

HullElement hull_star(const SelfSimilarAction& A, const HullElement& s) {
  if (!s) return std::nullopt;
  return HullTerm{s->v, A.canonical(A.inverse(s->g)), s->u};
}

std::string format(const SelfSimilarAction& A, const HullTerm& t) {
  std::vector<std::string> parts;
  if (!t.u.empty()) parts.push_back(A.format_word(t.u));
  if (A.canonical(t.g) != A.canonical(A.identity())) {
    std::string g = A.format(t.g);
    if (g.find(' ') != std::string::npos) g = "[" + g + "]";
    parts.push_back(g);
  }
  if (!t.v.empty()) {
    parts.push_back(t.v.size() == 1 ? A.format_word(t.v) + "*" : "(" + A.format_word(t.v) + ")*");
  }
  if (parts.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "." : "") + parts[i];
  return out;
}

Scalar HullAlgebraElement::coeff(const HullTerm& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void HullAlgebraElement::add_term(const HullElement& t, const Scalar& c) {
  if (!(c.field() == field_)) {
    throw FieldMismatch("coefficient over " + c.field().name() + " added to element over " + field_.name());
  }
  if (!t || c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(*t, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HullAlgebraElement& HullAlgebraElement::operator+=(const HullAlgebraElement& o) {
  if (!(field_ == o.field_)) throw FieldMismatch("hull elements over different fields");
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

HullAlgebraElement& HullAlgebraElement::operator-=(const HullAlgebraElement& o) {
  if (!(field_ == o.field_)) throw FieldMismatch("hull elements over different fields");
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

HullAlgebraElement operator*(const Scalar& c, const HullAlgebraElement& a) {
  HullAlgebraElement out(a.field_);
  for (const auto& [t, x] : a.terms_) out.add_term(t, c * x);
  return out;
}

HullAlgebraElement hull_multiply(const SelfSimilarAction& A, const HullAlgebraElement& a,
                                 const HullAlgebraElement& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("hull elements over different fields");
  HullAlgebraElement out(a.field());
  for (const auto& [s, x] : a.terms()) {
    for (const auto& [t, y] : b.terms()) out.add_term(hull_mul(A, s, t), x * y);
  }
  return out;
}

HullAlgebraElement right_multiply(const SelfSimilarAction& A, const HullAlgebraElement& a, const Word& w) {
  const HullElement t = hull_word(A, w);
  HullAlgebraElement out(a.field());
  for (const auto& [s, x] : a.terms()) out.add_term(hull_mul(A, s, t), x);
  return out;
}

HullAlgebraElement normalize(const SelfSimilarAction& A, const HullAlgebraElement& a, std::size_t depth) {
  if (A.exact()) return a;
  std::vector<std::pair<HullTerm, Scalar>> merged;
  for (const auto& [t, c] : a.terms()) {
    bool done = false;
    for (auto& [m, d] : merged) {
      if (m.u == t.u && m.v == t.v && A.equal(m.g, t.g, depth) == Tri::Yes) {
        d += c;
        done = true;
        break;
      }
    }
    if (!done) merged.emplace_back(t, c);
  }
  HullAlgebraElement out(a.field());
  for (const auto& [t, c] : merged) out.add_term(t, c);
  return out;
}

HullAlgebraElement group_part(const HullAlgebraElement& a) {
  HullAlgebraElement out(a.field());
  for (const auto& [t, c] : a.terms()) {
    if (t.u.empty() && t.v.empty()) out.add_term(t, c);
  }
  return out;
}

bool in_monoid_algebra(const HullAlgebraElement& a) {
  for (const auto& [t, c] : a.terms()) {
    if (!t.v.empty()) return false;
  }
  return true;
}

std::map<Word, HullAlgebraElement> blocks(const HullAlgebraElement& a) {
  std::map<Word, HullAlgebraElement> out;
  for (const auto& [t, c] : a.terms()) {
    if (!t.v.empty()) throw InvalidArgument("element is not in the monoid algebra");
    out.try_emplace(t.u, a.field()).first->second.add_term(HullTerm{{}, t.g, {}}, c);
  }
  return out;
}

std::string format(const SelfSimilarAction& A, const HullAlgebraElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : a.terms()) {
    std::string s = c.to_string();
    const bool neg = s[0] == '-';
    if (neg) s.erase(0, 1);
    const std::string term = (s == "1" ? "" : s + " ") + format(A, t);
    if (first) {
      out = (neg ? "-" : "") + term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------- search

std::string to_string(SingularSearch::Outcome o) {
  switch (o) {
    case SingularSearch::Outcome::Certificate: return "certificate";
    case SingularSearch::Outcome::Refutation: return "refutation";
    case SingularSearch::Outcome::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

std::vector<Letter> probe_letters(const SelfSimilarAction& A, const HullAlgebraElement& a) {
  std::set<std::uint32_t> copies;
  for (const auto& [t, c] : a.terms()) {
    for (Letter x : t.u) {
      if (A.inflated(x.base)) copies.insert(x.copy);
    }
    for (Letter x : t.v) {
      if (A.inflated(x.base)) copies.insert(x.copy);
    }
  }
  // Copies outside the support are interchangeable, so one fresh copy
  // stands for all of them.
  const std::uint32_t fresh = copies.empty() ? 0 : *copies.rbegin() + 1;
  copies.insert(fresh);
  std::vector<Letter> out;
  for (std::uint32_t b = 0; b < A.alphabet_size(); ++b) {
    if (!A.inflated(b)) {
      out.push_back({b, 0});
      continue;
    }
    for (auto c : copies) out.push_back({b, c});
  }
  return out;
}

/// Words of length n over the letters, in length-lex order, capped at limit.
std::vector<Word> words_of_length(const std::vector<Letter>& letters, std::size_t n, std::size_t limit) {
  std::vector<Word> out;
  std::vector<std::size_t> idx(n, 0);
  while (out.size() < limit) {
    Word w;
    for (auto i : idx) w.push_back(letters[i]);
    out.push_back(std::move(w));
    std::size_t k = n;
    while (k > 0 && ++idx[k - 1] == letters.size()) idx[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

/// A block of nonzero coefficient sum: that sum is preserved by every right
/// multiplication, so the block never vanishes.
std::optional<Word> surviving_block(const HullAlgebraElement& b) {
  if (!in_monoid_algebra(b)) return std::nullopt;
  for (const auto& [w, block] : blocks(b)) {
    Scalar sum = Scalar::zero(b.field());
    for (const auto& [t, c] : block.terms()) sum += c;
    if (!sum.is_zero()) return w;
  }
  return std::nullopt;
}

struct ProbeResult {
  bool zero = false;
  std::optional<Word> extension;
  std::optional<Word> refuting_block;
};

}  // namespace

SingularSearch hull_element_is_singular(const SelfSimilarAction& A, const HullAlgebraElement& a,
                                        std::size_t probe_budget, std::size_t extension_length,
                                        std::size_t depth, bool parallel) {
  SingularSearch out;
  const std::vector<Letter> letters = probe_letters(A, a);
  std::vector<std::vector<Word>> extensions;
  for (std::size_t n = 1; n <= extension_length; ++n) extensions.push_back(words_of_length(letters, n, 4096));

  for (std::size_t len = 0; out.probes < probe_budget; ++len) {
    const std::vector<Word> probes = words_of_length(letters, len, probe_budget - out.probes);
    std::size_t expected = 1;
    for (std::size_t i = 0; i < len && expected <= probe_budget; ++i) expected *= letters.size();
    const bool complete_level = probes.size() == expected;
    std::vector<ProbeResult> results(probes.size());
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::size_t i = 0; i < probes.size(); ++i) {
      try {
        ProbeResult r;
        const HullAlgebraElement b = normalize(A, right_multiply(A, a, probes[i]), depth);
        if (b.is_zero()) {
          r.zero = true;
        } else if (auto w = surviving_block(b)) {
          r.refuting_block = std::move(w);
        } else {
          for (const auto& level : extensions) {
            for (const auto& v : level) {
              if (normalize(A, right_multiply(A, b, v), depth).is_zero()) {
                r.extension = v;
                break;
              }
            }
            if (r.extension) break;
          }
        }
        results[i] = std::move(r);
      } catch (...) {
#pragma omp critical
        error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);

    bool all_zero = complete_level;
    for (std::size_t i = 0; i < probes.size(); ++i) {
      ++out.probes;
      const auto& r = results[i];
      if (r.refuting_block) {
        out.outcome = SingularSearch::Outcome::Refutation;
        out.refuting_probe = probes[i];
        out.refuting_block = r.refuting_block;
        return out;
      }
      if (r.zero) {
        out.annihilators.emplace_back(probes[i], Word{});
      } else if (r.extension) {
        out.annihilators.emplace_back(probes[i], *r.extension);
      } else {
        out.unresolved.push_back(probes[i]);
      }
      all_zero = all_zero && r.zero;
    }
    if (all_zero) {
      out.zero_level = len;
      break;
    }
    if (!complete_level) break;
  }
  out.outcome = (out.zero_level || (out.unresolved.empty() && out.probes > 0))
                    ? SingularSearch::Outcome::Certificate
                    : SingularSearch::Outcome::Inconclusive;
  return out;
}

// ---------------------------------------------------------------- criterion

namespace {

const PrimeSetAction& prime_shape(const SelfSimilarAction& A) {
  if (const auto* p = dynamic_cast<const PrimeSetAction*>(&A)) return *p;
  if (const auto* inf = dynamic_cast<const InflatedAction*>(&A)) {
    if (const auto* p = dynamic_cast<const PrimeSetAction*>(inf->base().get())) return *p;
  }
  throw WrongActionShape("the criterion applies to the prime-set construction only");
}

std::vector<std::pair<PrimeVec, Scalar>> group_coefficients(const HullAlgebraElement& c) {
  std::vector<std::pair<PrimeVec, Scalar>> out;
  for (const auto& [t, x] : c.terms()) {
    const auto* g = std::get_if<PrimeVec>(&t.g);
    if (!t.u.empty() || !t.v.empty() || !g) {
      throw WrongActionShape("criterion input must be a group ring element of the prime-set group");
    }
    out.emplace_back(*g, x);
  }
  return out;
}

struct TupleSpace {
  std::vector<std::vector<std::uint32_t>> lists;
  std::vector<std::int64_t> position;  // base letter -> index within its list
  std::size_t count = 1;

  TupleSpace(const PrimeSetAction& P, const std::vector<std::uint32_t>& order) {
    position.assign(P.alphabet_size(), -1);
    for (auto p : order) {
      lists.push_back(P.letters_of(p));
      for (std::size_t i = 0; i < lists.back().size(); ++i) position[lists.back()[i]] = std::int64_t(i);
      count *= lists.back().size();
    }
  }

  Word word(std::size_t index) const {
    Word w(lists.size());
    for (std::size_t i = lists.size(); i-- > 0;) {
      w[i] = {lists[i][index % lists[i].size()], 0};
      index /= lists[i].size();
    }
    return w;
  }

  std::size_t index(const Word& w) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < lists.size(); ++i) {
      idx = idx * lists[i].size() + std::size_t(position[w[i].base]);
    }
    return idx;
  }
};

std::vector<std::uint32_t> bases_of(const Word& w) {
  std::vector<std::uint32_t> out;
  for (Letter x : w) out.push_back(x.base);
  return out;
}

}  // namespace

CriterionResult singular_criterion_group(const SelfSimilarAction& A, const HullAlgebraElement& c,
                                         bool parallel) {
  const PrimeSetAction& P = prime_shape(A);
  const auto coeffs = group_coefficients(c);
  std::set<std::uint32_t> phi;
  for (const auto& [g, x] : coeffs) {
    for (const auto& comp : g.comps) phi.insert(comp.p);
  }
  CriterionResult out;
  out.primes.assign(phi.begin(), phi.end());
  std::vector<std::uint32_t> order = out.primes;
  do {
    const TupleSpace T(P, order);
    std::vector<std::vector<Scalar>> sums(T.count);
#pragma omp parallel for schedule(static) if (parallel)
    for (std::size_t ai = 0; ai < T.count; ++ai) {
      std::vector<Scalar> row(T.count, Scalar::zero(c.field()));
      const Word a = T.word(ai);
      for (const auto& [g, x] : coeffs) row[T.index(act_word(P, g, a))] += x;
      sums[ai] = std::move(row);
    }
    for (std::size_t ai = 0; ai < T.count; ++ai) {
      const auto a = bases_of(T.word(ai));
      for (std::size_t bi = 0; bi < T.count; ++bi) {
        if (!sums[ai][bi].is_zero()) ++out.nonzero;
        out.sums.push_back({order, a, bases_of(T.word(bi)), std::move(sums[ai][bi])});
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));
  out.singular = out.nonzero == 0;
  return out;
}

HullAlgebraElement prime_witness(const SelfSimilarAction& A, std::uint32_t p, FieldSpec f) {
  const PrimeSetAction& P = prime_shape(A);
  if (std::find(P.primes().begin(), P.primes().end(), p) == P.primes().end()) {
    throw InvalidArgument(std::to_string(p) + " is not in the prime set");
  }
  HullAlgebraElement c(f);
  for (const auto& g : P.component_group(p)) c.add_term(hull_group(A, g), 1);
  return c;
}

GroupRingReduction group_ring_singular_subspace(const SelfSimilarAction& A, FieldSpec f, bool parallel,
                                                std::size_t max_tuples) {
  const PrimeSetAction& P = prime_shape(A);
  const auto elems = P.all_elements();
  GroupRingReduction out;
  out.group_order = elems.size();

  std::vector<std::uint32_t> order = P.primes();
  std::size_t tuples = 0;
  do {
    tuples += TupleSpace(P, order).count;
  } while (std::next_permutation(order.begin(), order.end()));
  if (tuples > max_tuples) {
    throw CapExceeded("criterion system has " + std::to_string(tuples) + " letter tuples");
  }

  // Each (sigma, a) partitions G by g -> g(a); every fiber is one equation.
  std::set<std::vector<std::size_t>> fibers;
  do {
    const TupleSpace T(P, order);
    for (std::size_t ai = 0; ai < T.count; ++ai) {
      const Word a = T.word(ai);
      std::map<std::size_t, std::vector<std::size_t>> by_image;
      for (std::size_t k = 0; k < elems.size(); ++k) by_image[T.index(act_word(P, elems[k], a))].push_back(k);
      for (auto& [b, cols] : by_image) fibers.insert(std::move(cols));
    }
  } while (std::next_permutation(order.begin(), order.end()));

  std::vector<DenseVector> rows;
  for (const auto& cols : fibers) {
    DenseVector r = zero_vector(f, elems.size());
    for (auto k : cols) r[k] = Scalar::one(f);
    rows.push_back(std::move(r));
  }
  out.equations = rows.size();
  const EchelonBasis N = nullspace(f, std::move(rows), elems.size(), parallel);
  out.dimension = N.dim();
  for (const auto& r : N.rows()) {
    HullAlgebraElement c(f);
    for (std::size_t k = 0; k < elems.size(); ++k) c.add_term(hull_group(A, elems[k]), r[k]);
    out.basis.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------- branch

BranchResult branch_singular_element(const AutomatonAction& base, const std::vector<AutomatonWord>& psi_g1,
                                     const std::vector<AutomatonWord>& psi_g2, FieldSpec f,
                                     std::size_t depth) {
  const std::size_t m = base.alphabet_size();
  if (m < 2 || psi_g1.size() != m || psi_g2.size() != m) {
    throw ShapeViolation("section vectors must have one entry per base letter");
  }
  auto check = [&](const std::vector<AutomatonWord>& psi, std::size_t nontrivial, const std::string& name) {
    for (std::size_t i = 0; i < m; ++i) {
      const Tri t = base.is_identity(psi[i], depth);
      if (i == nontrivial && t != Tri::No) {
        throw ShapeViolation(name + " entry " + std::to_string(i + 1) + " is not certified nontrivial");
      }
      if (i != nontrivial && t != Tri::Yes) {
        throw ShapeViolation(name + " entry " + std::to_string(i + 1) + " is not certified trivial");
      }
    }
  };
  check(psi_g1, 1, "psi(g1)");
  check(psi_g2, 0, "psi(g2)");

  std::vector<std::uint32_t> id(m);
  for (std::uint32_t x = 0; x < m; ++x) id[x] = x;
  auto ext = base.with_states({{"g1", id, psi_g1, false}, {"g2", id, psi_g2, false}})->inflated_copy();
  const std::int32_t k1 = *ext->state_index("g1") + 1;
  const std::int32_t k2 = *ext->state_index("g2") + 1;
  const GroupElem one = ext->identity();
  const GroupElem g1 = AutomatonWord{{k1}};
  const GroupElem g2 = AutomatonWord{{k2}};
  const GroupElem g3 = ext->multiply(g1, g2);

  BranchResult out{ext, HullAlgebraElement(f), {}, {}, false, false};
  out.c.add_term(hull_group(*ext, one), 1);
  out.c.add_term(hull_group(*ext, g1), -1);
  out.c.add_term(hull_group(*ext, g2), -1);
  out.c.add_term(hull_group(*ext, g3), 1);

  out.distinct = {
      {"h1 = 1", base.is_identity(psi_g1[1], depth)}, {"h2 = 1", base.is_identity(psi_g2[0], depth)},
      {"g1 = 1", ext->is_identity(g1, depth)},       {"g2 = 1", ext->is_identity(g2, depth)},
      {"g3 = 1", ext->is_identity(g3, depth)},       {"g1 = g2", ext->equal(g1, g2, depth)},
      {"g1 = g3", ext->equal(g1, g3, depth)},        {"g2 = g3", ext->equal(g2, g3, depth)},
  };
  out.nonzero = std::all_of(out.distinct.begin(), out.distinct.end(),
                            [](const auto& d) { return d.second == Tri::No; });

  out.annihilated = true;
  for (std::uint32_t j = 0; j < m; ++j) {
    const Letter x{j, 0};
    BranchEquation eq{x, {}, HullAlgebraElement(f)};
    for (const auto& [t, c] : out.c.terms()) {
      if (auto p = hull_mul(*ext, t, hull_letter(*ext, x))) eq.expansion.emplace_back(*p, c);
    }
    eq.result = normalize(*ext, right_multiply(*ext, out.c, {x}), depth);
    out.annihilated = out.annihilated && eq.result.is_zero();
    out.equations.push_back(std::move(eq));
  }
  return out;
}

}  // namespace invsemi::selfsimilar
