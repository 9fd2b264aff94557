#include "invsemi/selfsimilar.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "invsemi/errors.hpp"
#include "invsemi/field.hpp"

namespace invsemi::selfsimilar {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::No: return "no";
    case Tri::Yes: return "yes";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

Tri SelfSimilarAction::equal(const GroupElem& g, const GroupElem& h, std::size_t depth) const {
  return is_identity(multiply(inverse(g), h), depth);
}

bool SelfSimilarAction::all_inflated() const {
  for (std::uint32_t b = 0; b < alphabet_size(); ++b) {
    if (!inflated(b)) return false;
  }
  return true;
}

std::string SelfSimilarAction::format_letter(Letter x) const {
  if (!inflated(x.base)) return letter_name(x.base);
  return "(" + letter_name(x.base) + "," + std::to_string(x.copy) + ")";
}

std::string SelfSimilarAction::format_word(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ".";
    out += format_letter(w[i]);
  }
  return out;
}

Word act_word(const SelfSimilarAction& A, GroupElem g, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    out.push_back(A.act(g, x));
    g = A.restrict(g, x);
  }
  return out;
}

GroupElem restrict_word(const SelfSimilarAction& A, GroupElem g, const Word& w) {
  for (Letter x : w) g = A.restrict(g, x);
  return A.canonical(g);
}

// ---------------------------------------------------------------- trivial

TrivialAction::TrivialAction(std::vector<std::string> letters, std::vector<bool> inflated)
    : letters_(std::move(letters)), inflated_(std::move(inflated)) {
  if (inflated_.size() != letters_.size()) throw InvalidArgument("inflation flags do not match alphabet");
  if (letters_.empty()) throw InvalidArgument("empty alphabet");
}

// ---------------------------------------------------------------- prime set

namespace {

const PrimeVec& as_prime(const GroupElem& g) {
  const auto* v = std::get_if<PrimeVec>(&g);
  if (!v) throw InvalidArgument("expected an element of the prime-set group");
  return *v;
}

}  // namespace

PrimeSetAction::PrimeSetAction(std::vector<std::uint32_t> primes, std::size_t max_letters)
    : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  if (primes_.empty()) throw InvalidArgument("prime-set construction needs a nonempty set of primes");
  std::size_t total = 0;
  for (auto p : primes_) {
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
    total += std::size_t(p + 1) * p;
  }
  if (total > max_letters) {
    throw CapExceeded("prime-set alphabet has " + std::to_string(total) + " letters");
  }
  for (auto p : primes_) {
    for (std::uint32_t line = 0; line <= p; ++line) {
      for (std::uint32_t t = 0; t < p; ++t) letters_.push_back({p, line, t});
    }
  }
}

std::string PrimeSetAction::letter_name(std::uint32_t b) const {
  const L& l = letters_.at(b);
  return "a" + std::to_string(l.p) + "_" + std::to_string(l.line) + "_" + std::to_string(l.t);
}

std::uint32_t PrimeSetAction::act_base(const GroupElem& g, std::uint32_t b) const {
  const L& l = letters_.at(b);
  for (const auto& c : as_prime(g).comps) {
    if (c.p != l.p) continue;
    const std::uint32_t lambda = l.line < l.p ? (c.x + l.line * c.y) % l.p : c.y;
    return b - l.t + (l.t + lambda) % l.p;
  }
  return b;
}

GroupElem PrimeSetAction::restrict_base(const GroupElem& g, std::uint32_t b) const {
  const std::uint32_t p = letters_.at(b).p;
  PrimeVec out;
  for (const auto& c : as_prime(g).comps) {
    if (c.p != p) out.comps.push_back(c);
  }
  return out;
}

GroupElem PrimeSetAction::multiply(const GroupElem& g, const GroupElem& h) const {
  const auto& a = as_prime(g).comps;
  const auto& b = as_prime(h).comps;
  PrimeVec out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].p < b[j].p)) {
      out.comps.push_back(a[i++]);
    } else if (i == a.size() || b[j].p < a[i].p) {
      out.comps.push_back(b[j++]);
    } else {
      const std::uint32_t p = a[i].p;
      PrimeVec::Component c{p, (a[i].x + b[j].x) % p, (a[i].y + b[j].y) % p};
      if (c.x || c.y) out.comps.push_back(c);
      ++i;
      ++j;
    }
  }
  return out;
}

GroupElem PrimeSetAction::inverse(const GroupElem& g) const {
  PrimeVec out = as_prime(g);
  for (auto& c : out.comps) {
    c.x = (c.p - c.x) % c.p;
    c.y = (c.p - c.y) % c.p;
  }
  return out;
}

Tri PrimeSetAction::is_identity(const GroupElem& g, std::size_t) const {
  return as_prime(g).comps.empty() ? Tri::Yes : Tri::No;
}

std::vector<GroupElem> PrimeSetAction::generators() const {
  std::vector<GroupElem> out;
  for (auto p : primes_) {
    out.push_back(component(p, 1, 0));
    out.push_back(component(p, 0, 1));
  }
  return out;
}

std::string PrimeSetAction::format(const GroupElem& g) const {
  const auto& v = as_prime(g);
  if (v.comps.empty()) return "1";
  std::string out;
  for (const auto& c : v.comps) {
    out += "c" + std::to_string(c.p) + "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
  }
  return out;
}

std::vector<std::uint32_t> PrimeSetAction::letters_of(std::uint32_t p) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t b = 0; b < letters_.size(); ++b) {
    if (letters_[b].p == p) out.push_back(b);
  }
  return out;
}

PrimeVec PrimeSetAction::component(std::uint32_t p, std::uint32_t x, std::uint32_t y) {
  PrimeVec v;
  if (x % p || y % p) v.comps.push_back({p, x % p, y % p});
  return v;
}

std::vector<PrimeVec> PrimeSetAction::component_group(std::uint32_t p) const {
  std::vector<PrimeVec> out;
  for (std::uint32_t x = 0; x < p; ++x) {
    for (std::uint32_t y = 0; y < p; ++y) out.push_back(component(p, x, y));
  }
  return out;
}

std::vector<PrimeVec> PrimeSetAction::all_elements() const {
  std::vector<PrimeVec> out{PrimeVec{}};
  for (auto p : primes_) {
    std::vector<PrimeVec> next;
    for (const auto& g : out) {
      for (const auto& h : component_group(p)) next.push_back(as_prime(multiply(g, h)));
    }
    out = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------- automaton

AutomatonAction::AutomatonAction(std::vector<std::string> letters, std::vector<bool> inflated,
                                 std::vector<State> states, bool involutions)
    : letters_(std::move(letters)),
      inflated_(std::move(inflated)),
      states_(std::move(states)) {
  const std::size_t m = letters_.size();
  if (m == 0) throw InvalidArgument("empty alphabet");
  if (inflated_.size() != m) throw InvalidArgument("inflation flags do not match alphabet");
  for (auto& s : states_) {
    s.involution = s.involution || involutions;
    if (s.perm.size() != m || s.sections.size() != m) {
      throw InvalidArgument("state " + s.name + " has tables of the wrong length");
    }
    std::vector<std::uint32_t> inv(m, UINT32_MAX);
    for (std::uint32_t x = 0; x < m; ++x) {
      if (s.perm[x] >= m || inv[s.perm[x]] != UINT32_MAX) {
        throw InvalidArgument("output table of state " + s.name + " is not a permutation");
      }
      inv[s.perm[x]] = x;
    }
    for (const auto& w : s.sections) {
      for (auto sym : w.syms) {
        if (sym == 0 || std::size_t(std::abs(sym)) > states_.size()) {
          throw InvalidArgument("section of state " + s.name + " names an unknown state");
        }
      }
    }
    if (s.involution) {
      for (std::uint32_t x = 0; x < m; ++x) {
        if (s.perm[s.perm[x]] != x) throw InvalidArgument("state " + s.name + " is not an involution");
      }
    }
    inverse_perm_.push_back(std::move(inv));
  }
}

const AutomatonWord& AutomatonAction::word(const GroupElem& g) const {
  const auto* w = std::get_if<AutomatonWord>(&g);
  if (!w) throw InvalidArgument("expected an automaton word");
  return *w;
}

std::uint32_t AutomatonAction::act_base(const GroupElem& g, std::uint32_t b) const {
  const auto& syms = word(g).syms;
  for (auto it = syms.rbegin(); it != syms.rend(); ++it) {
    const std::size_t k = std::size_t(std::abs(*it)) - 1;
    b = *it > 0 ? states_[k].perm[b] : inverse_perm_[k][b];
  }
  return b;
}

GroupElem AutomatonAction::restrict_base(const GroupElem& g, std::uint32_t b) const {
  const auto& syms = word(g).syms;
  std::vector<AutomatonWord> pieces(syms.size());
  for (std::size_t i = syms.size(); i-- > 0;) {
    const std::size_t k = std::size_t(std::abs(syms[i])) - 1;
    if (syms[i] > 0) {
      pieces[i] = states_[k].sections[b];
      b = states_[k].perm[b];
    } else {
      const std::uint32_t pre = inverse_perm_[k][b];
      pieces[i] = std::get<AutomatonWord>(inverse(states_[k].sections[pre]));
      b = pre;
    }
  }
  AutomatonWord out;
  for (const auto& p : pieces) out.syms.insert(out.syms.end(), p.syms.begin(), p.syms.end());
  return canonical(out);
}

GroupElem AutomatonAction::multiply(const GroupElem& g, const GroupElem& h) const {
  AutomatonWord out = word(g);
  const auto& t = word(h).syms;
  out.syms.insert(out.syms.end(), t.begin(), t.end());
  return canonical(out);
}

GroupElem AutomatonAction::inverse(const GroupElem& g) const {
  AutomatonWord out = word(g);
  std::reverse(out.syms.begin(), out.syms.end());
  for (auto& s : out.syms) s = -s;
  return canonical(out);
}

GroupElem AutomatonAction::canonical(const GroupElem& g) const {
  AutomatonWord out;
  for (auto s : word(g).syms) {
    const bool inv = states_.at(std::size_t(std::abs(s)) - 1).involution;
    if (inv) s = std::abs(s);
    const bool cancels = !out.syms.empty() && (inv ? out.syms.back() == s : out.syms.back() == -s);
    if (cancels) {
      out.syms.pop_back();
    } else {
      out.syms.push_back(s);
    }
  }
  return out;
}

// Explores sections breadth-first. A word with a nontrivial permutation at
// some level is a certain No. When every explored word has trivial
// permutation and all its sections were explored too, the explored set is a
// bisimulation with the identity.
Tri AutomatonAction::is_identity(const GroupElem& g, std::size_t depth) const {
  constexpr std::size_t kMaxWords = 20000;
  const AutomatonWord start = std::get<AutomatonWord>(canonical(g));
  if (start.syms.empty()) return Tri::Yes;
  std::set<AutomatonWord> seen{start};
  std::deque<std::pair<AutomatonWord, std::size_t>> work{{start, 0}};
  bool unknown = false;
  while (!work.empty()) {
    auto [w, level] = std::move(work.front());
    work.pop_front();
    for (std::uint32_t x = 0; x < letters_.size(); ++x) {
      if (act_base(w, x) != x) return Tri::No;
    }
    if (level >= depth) {
      unknown = true;
      continue;
    }
    for (std::uint32_t x = 0; x < letters_.size(); ++x) {
      AutomatonWord s = std::get<AutomatonWord>(restrict_base(w, x));
      if (s.syms.empty() || seen.count(s)) continue;
      if (seen.size() >= kMaxWords) {
        unknown = true;
        continue;
      }
      seen.insert(s);
      work.emplace_back(std::move(s), level + 1);
    }
  }
  return unknown ? Tri::Unknown : Tri::Yes;
}

std::vector<GroupElem> AutomatonAction::generators() const {
  std::vector<GroupElem> out;
  for (std::size_t k = 0; k < states_.size(); ++k) {
    out.push_back(AutomatonWord{{std::int32_t(k + 1)}});
  }
  return out;
}

std::string AutomatonAction::format(const GroupElem& g) const {
  const auto& syms = word(g).syms;
  if (syms.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < syms.size(); ++i) {
    if (i) out += " ";
    out += states_[std::size_t(std::abs(syms[i])) - 1].name;
    if (syms[i] < 0) out += "^-1";
  }
  return out;
}

std::optional<std::int32_t> AutomatonAction::state_index(const std::string& name) const {
  for (std::size_t k = 0; k < states_.size(); ++k) {
    if (states_[k].name == name) return std::int32_t(k);
  }
  return std::nullopt;
}

AutomatonWord AutomatonAction::parse_word(const std::string& text) const {
  AutomatonWord out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    bool inv = false;
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      inv = true;
      tok.resize(tok.size() - 3);
    }
    if (tok == "1") continue;
    auto k = state_index(tok);
    if (!k) throw ParseError("unknown state '" + tok + "'");
    out.syms.push_back(inv ? -(*k + 1) : *k + 1);
  }
  return std::get<AutomatonWord>(canonical(out));
}

std::shared_ptr<AutomatonAction> AutomatonAction::inflated_copy() const {
  return std::make_shared<AutomatonAction>(letters_, std::vector<bool>(letters_.size(), true), states_);
}

std::shared_ptr<AutomatonAction> AutomatonAction::with_states(std::vector<State> extra) const {
  std::vector<State> all = states_;
  for (auto& s : extra) {
    if (state_index(s.name)) throw InvalidArgument("state " + s.name + " already exists");
    all.push_back(std::move(s));
  }
  return std::make_shared<AutomatonAction>(letters_, inflated_, std::move(all));
}

// ---------------------------------------------------------------- inflation

InflatedAction::InflatedAction(ActionPtr base) : base_(std::move(base)) {
  if (!base_) throw InvalidArgument("null base action");
}

ActionPtr build_countable_inflation(ActionPtr base) {
  if (!base || base->alphabet_size() < 2) {
    throw InvalidArgument("countable inflation needs a base alphabet with at least 2 letters");
  }
  if (base->all_inflated()) return base;
  return std::make_shared<InflatedAction>(std::move(base));
}

ActionPtr build_prime_construction(const std::vector<std::uint32_t>& primes, std::size_t max_letters) {
  return build_countable_inflation(std::make_shared<PrimeSetAction>(primes, max_letters));
}

std::shared_ptr<const AutomatonAction> xz_example() {
  AutomatonAction::State a{"a", {1, 0, 2}, {{}, {}, {}}, true};
  return std::make_shared<AutomatonAction>(std::vector<std::string>{"x", "y", "z"},
                                           std::vector<bool>{false, false, true},
                                           std::vector<AutomatonAction::State>{a});
}

std::shared_ptr<const AutomatonAction> grigorchuk() {
  // States a=1, b=2, c=3, d=4.
  std::vector<AutomatonAction::State> st{
      {"a", {1, 0}, {{}, {}}},
      {"b", {0, 1}, {AutomatonWord{{1}}, AutomatonWord{{3}}}},
      {"c", {0, 1}, {AutomatonWord{{1}}, AutomatonWord{{4}}}},
      {"d", {0, 1}, {AutomatonWord{}, AutomatonWord{{2}}}},
  };
  return std::make_shared<AutomatonAction>(std::vector<std::string>{"0", "1"},
                                           std::vector<bool>{false, false}, std::move(st), true);
}

// ---------------------------------------------------------------- strongly fixed

StronglyFixed strongly_fixed(const SelfSimilarAction& A, const GroupElem& g, std::size_t depth) {
  StronglyFixed out;
  struct Node {
    Word w;
    GroupElem section;
  };
  const Tri root = A.is_identity(g, depth);
  if (root == Tri::Yes) {
    out.minimal.push_back({});
    return out;
  }
  if (root == Tri::Unknown) out.uncertain = true;
  std::vector<Node> level{{{}, A.canonical(g)}};
  for (std::size_t len = 1; len <= depth && !level.empty(); ++len) {
    std::vector<Node> next;
    for (const auto& n : level) {
      for (std::uint32_t b = 0; b < A.alphabet_size(); ++b) {
        const Letter x{b, 0};
        if (A.act(n.section, x) != x) continue;
        Word w = n.w;
        w.push_back(x);
        GroupElem s = A.canonical(A.restrict(n.section, x));
        const Tri t = A.is_identity(s, depth);
        if (t == Tri::Yes) {
          out.minimal.push_back(std::move(w));
        } else {
          if (t == Tri::Unknown) out.uncertain = true;
          next.push_back({std::move(w), std::move(s)});
        }
      }
    }
    level = std::move(next);
  }
  for (auto& n : level) out.open.push_back(std::move(n.w));
  return out;
}

std::string to_string(HausdorffVerdict v) {
  switch (v) {
    case HausdorffVerdict::FinitelyGenerated: return "finitely-generated";
    case HausdorffVerdict::Growing: return "growing";
    case HausdorffVerdict::ExactNo: return "exact-no";
  }
  return "unknown";
}

std::vector<HausdorffEntry> is_hausdorff_up_to_depth(const SelfSimilarAction& A, std::size_t depth) {
  std::vector<GroupElem> gens = A.generators();
  if (gens.empty()) gens.push_back(A.identity());
  std::vector<HausdorffEntry> out;
  for (const auto& g : gens) {
    HausdorffEntry e{g, HausdorffVerdict::Growing, {}};
    StronglyFixed last;
    for (std::size_t d = 0; d <= depth; ++d) {
      last = strongly_fixed(A, g, d);
      e.minimal_by_depth.push_back(last.minimal.size());
    }
    bool infinite_class = false;
    for (const auto& w : last.minimal) {
      for (Letter x : w) infinite_class = infinite_class || A.inflated(x.base);
    }
    if (!last.uncertain && infinite_class) {
      e.verdict = HausdorffVerdict::ExactNo;
    } else if (!last.uncertain && last.open.empty()) {
      e.verdict = HausdorffVerdict::FinitelyGenerated;
    }
    out.push_back(std::move(e));
  }
  return out;
}

EffectivenessResult effectiveness_criterion(const SelfSimilarAction& A, std::size_t depth) {
  std::vector<std::uint32_t> infinite;
  for (std::uint32_t b = 0; b < A.alphabet_size(); ++b) {
    if (A.inflated(b)) infinite.push_back(b);
  }
  if (infinite.empty()) throw UnsupportedAction("effectiveness needs an infinite (inflated) alphabet");
  if (infinite.size() == A.alphabet_size() && A.faithful() && A.alphabet_size() >= 2) {
    return {true, std::nullopt, "countable inflation of a faithful action"};
  }
  // A cofinite letter set contains every inflated class, so a witness must
  // strongly fix each inflated base letter.
  auto witness = [&](const GroupElem& g) {
    if (A.is_identity(g, depth) != Tri::No) return false;
    for (auto b : infinite) {
      const Letter x{b, 0};
      if (A.act(g, x) != x || A.is_identity(A.restrict(g, x), depth) != Tri::Yes) return false;
    }
    return true;
  };
  const auto* prime = dynamic_cast<const PrimeSetAction*>(&A);
  if (prime) {
    for (const auto& g : prime->all_elements()) {
      if (witness(g)) return {false, GroupElem{g}, "exhaustive over the finite group"};
    }
    return {true, std::nullopt, "exhaustive over the finite group"};
  }
  std::vector<GroupElem> gens = A.generators();
  std::vector<GroupElem> letters = gens;
  for (const auto& g : gens) letters.push_back(A.inverse(g));
  std::set<GroupElem> seen;
  std::vector<GroupElem> level{A.identity()};
  for (std::size_t len = 1; len <= depth; ++len) {
    std::vector<GroupElem> next;
    for (const auto& w : level) {
      for (const auto& s : letters) {
        GroupElem g = A.canonical(A.multiply(w, s));
        if (!seen.insert(g).second) continue;
        if (witness(g)) return {false, g, "search over words in the generators"};
        next.push_back(std::move(g));
      }
    }
    level = std::move(next);
  }
  throw Undecidable("no witness among group words of length <= " + std::to_string(depth));
}

}  // namespace invsemi::selfsimilar
