#include "invsemi/selfsimilar_spec.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "invsemi/errors.hpp"

namespace invsemi::selfsimilar {

using nlohmann::json;

bool is_action_spec(const json& j) { return j.is_object() && j.contains("kind"); }

namespace {

AutomatonWord parse_state_word(const std::map<std::string, std::int32_t>& names, const std::string& text) {
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
    auto it = names.find(tok);
    if (it == names.end()) throw ParseError("unknown state '" + tok + "'");
    out.syms.push_back(inv ? -(it->second + 1) : it->second + 1);
  }
  return out;
}

std::shared_ptr<const AutomatonAction> parse_automaton(const json& j) {
  const auto letters = j.at("alphabet").get<std::vector<std::string>>();
  std::vector<bool> inflated(letters.size(), false);
  if (j.contains("inflated")) {
    const auto& f = j.at("inflated");
    if (f.is_boolean()) {
      inflated.assign(letters.size(), f.get<bool>());
    } else {
      inflated = f.get<std::vector<bool>>();
    }
  }
  const bool involutions = j.value("involutions", false);
  std::map<std::string, std::int32_t> names;
  for (const auto& s : j.at("states")) {
    const auto name = s.at("name").get<std::string>();
    if (!names.emplace(name, std::int32_t(names.size())).second) throw ParseError("duplicate state " + name);
  }
  auto letter_index = [&](const json& x) -> std::uint32_t {
    if (x.is_number_unsigned()) return x.get<std::uint32_t>();
    auto it = std::find(letters.begin(), letters.end(), x.get<std::string>());
    if (it == letters.end()) throw ParseError("unknown letter " + x.dump());
    return std::uint32_t(it - letters.begin());
  };
  std::vector<AutomatonAction::State> states;
  for (const auto& s : j.at("states")) {
    AutomatonAction::State st;
    st.name = s.at("name").get<std::string>();
    for (const auto& x : s.at("output")) st.perm.push_back(letter_index(x));
    for (const auto& w : s.at("transition")) st.sections.push_back(parse_state_word(names, w.get<std::string>()));
    st.involution = s.value("involution", false);
    states.push_back(std::move(st));
  }
  return std::make_shared<AutomatonAction>(letters, inflated, std::move(states), involutions);
}

ActionSpec parse_spec(const json& j, const Caps& caps) {
  ActionSpec spec;
  spec.kind = j.at("kind").get<std::string>();
  if (spec.kind == "prime-set") {
    spec.primes = j.at("primes").get<std::vector<std::uint32_t>>();
    spec.action = build_prime_construction(spec.primes, caps.closure);
    spec.primes = prime_shape_primes(*spec.action);
  } else if (spec.kind == "inflation") {
    const ActionSpec base = parse_spec(j.at("base"), caps);
    spec.primes = base.primes;
    spec.action = build_countable_inflation(base.action);
  } else if (spec.kind == "xz-example") {
    spec.action = xz_example();
  } else if (spec.kind == "automaton") {
    spec.action = parse_automaton(j);
  } else if (spec.kind == "branch-shape") {
    spec.automaton = parse_automaton(j.at("automaton"));
    spec.action = spec.automaton;
    for (const auto& w : j.at("psi_g1")) spec.psi_g1.push_back(spec.automaton->parse_word(w.get<std::string>()));
    for (const auto& w : j.at("psi_g2")) spec.psi_g2.push_back(spec.automaton->parse_word(w.get<std::string>()));
  } else {
    throw ParseError("unknown action kind '" + spec.kind + "'");
  }
  return spec;
}

}  // namespace

std::vector<std::uint32_t> prime_shape_primes(const SelfSimilarAction& A) {
  if (const auto* p = dynamic_cast<const PrimeSetAction*>(&A)) return p->primes();
  if (const auto* inf = dynamic_cast<const InflatedAction*>(&A)) return prime_shape_primes(*inf->base());
  return {};
}

ActionSpec parse_action_spec(const json& j, const Caps& caps) {
  if (!is_action_spec(j)) throw ParseError("action spec needs a \"kind\" key");
  try {
    return parse_spec(j, caps);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed action spec: ") + e.what());
  }
}

ActionSpec parse_action_spec(const std::string& text, const Caps& caps) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  return parse_action_spec(j, caps);
}

HullAlgebraElement xz_witness(const SelfSimilarAction& A, FieldSpec f) {
  const Letter x{0, 0}, y{1, 0};
  const GroupElem one = A.identity();
  const GroupElem a = A.generators().at(0);
  HullAlgebraElement out(f);
  out.add_term(hull_identity(A), 1);
  out.add_term(HullTerm{{x}, one, {x}}, -1);
  out.add_term(HullTerm{{y}, one, {y}}, -1);
  out.add_term(hull_group(A, a), -1);
  out.add_term(HullTerm{{x}, one, {y}}, 1);
  out.add_term(HullTerm{{y}, one, {x}}, 1);
  return out;
}

namespace {

void set_congruence_free(SelfSimilarReport& r, const SelfSimilarAction& A) {
  r.congruence_free = A.faithful() && A.alphabet_size() >= 2;
  r.congruence_free_reason = r.congruence_free ? "faithful action on at least two letters"
                                               : "action not known to be faithful";
}

SelfSimilarReport prime_set_verdict(const ActionSpec& spec, FieldSpec f, const Caps& caps) {
  const SelfSimilarAction& A = *spec.action;
  SelfSimilarReport r;
  r.kind = spec.kind;
  r.field = f;
  set_congruence_free(r, A);
  r.effectiveness = effectiveness_criterion(A, caps.depth);
  for (auto p : spec.primes) r.criteria.emplace_back(p, singular_criterion_group(A, prime_witness(A, p, f)));
  r.reduction = group_ring_singular_subspace(A, f);
  const std::uint32_t ch = f.characteristic();
  const bool in_p = std::find(spec.primes.begin(), spec.primes.end(), ch) != spec.primes.end();
  if (in_p) {
    r.witness = prime_witness(A, ch, f);
    r.search = hull_element_is_singular(A, *r.witness, caps.probe_budget, 2, caps.depth);
  } else if (r.reduction->dimension > 0) {
    r.witness = r.reduction->basis.front();
  }
  if (r.reduction->dimension == 0) {
    r.verdict = r.congruence_free ? Verdict::Simple : Verdict::Inconclusive;
    r.method = "group-ring reduction: no nonzero element of KG satisfies the criterion";
  } else {
    r.verdict = Verdict::NotSimple;
    r.method = "criterion: witness in KG with every sum zero";
  }
  return r;
}

SelfSimilarReport xz_verdict(const ActionSpec& spec, FieldSpec f, const Caps& caps) {
  const SelfSimilarAction& A = *spec.action;
  SelfSimilarReport r;
  r.kind = spec.kind;
  r.field = f;
  set_congruence_free(r, A);
  r.effectiveness = effectiveness_criterion(A, caps.depth);
  r.witness = xz_witness(A, f);
  r.search = hull_element_is_singular(A, *r.witness, caps.probe_budget, 2, caps.depth);
  if (r.search->zero_level) {
    r.verdict = Verdict::NotSimple;
    r.method = "witness annihilated by every word of length " + std::to_string(*r.search->zero_level);
  } else {
    r.method = "witness search did not close";
  }
  return r;
}

SelfSimilarReport branch_verdict(const ActionSpec& spec, FieldSpec f, const Caps& caps) {
  SelfSimilarReport r;
  r.kind = spec.kind;
  r.field = f;
  r.branch = branch_singular_element(*spec.automaton, spec.psi_g1, spec.psi_g2, f, std::max<std::size_t>(caps.depth, 8));
  const SelfSimilarAction& A = *r.branch->action;
  set_congruence_free(r, A);
  r.effectiveness = effectiveness_criterion(A, caps.depth);
  r.witness = r.branch->c;
  if (r.branch->nonzero && r.branch->annihilated) {
    r.verdict = Verdict::NotSimple;
    r.method = "(1 - g1)(1 - g2) is nonzero and killed by every letter";
  } else {
    r.method = "branch certificate incomplete";
  }
  return r;
}

}  // namespace

SelfSimilarReport verdict_selfsimilar(const ActionSpec& spec, FieldSpec f, const Caps& caps) {
  if (spec.kind == "prime-set" || (spec.kind == "inflation" && !spec.primes.empty())) {
    return prime_set_verdict(spec, f, caps);
  }
  if (spec.kind == "xz-example") return xz_verdict(spec, f, caps);
  if (spec.kind == "branch-shape") return branch_verdict(spec, f, caps);
  throw UnsupportedAction("no verdict procedure for action kind '" + spec.kind + "'");
}

}  // namespace invsemi::selfsimilar
