#include "invsemi/report.hpp"

#include <sstream>

#include "invsemi/congruence.hpp"
#include "invsemi/errors.hpp"
#include "invsemi/order.hpp"

namespace invsemi {

namespace {

ojson labels_of(const InverseSemigroupTable& S, const std::vector<ElemId>& ids) {
  ojson out = ojson::array();
  for (auto e : ids) out.push_back(S.label(e));
  return out;
}

ojson filters_json(const InverseSemigroupTable& S, const std::vector<FilterRep>& fs) {
  ojson out = ojson::array();
  for (auto F : fs) out.push_back(labels_of(S, filter_members(S, F)));
  return out;
}

ojson basis_json(const InverseSemigroupTable& S, const SubspaceBasis& B) {
  ojson out = ojson::array();
  for (const auto& a : elements_of(B)) out.push_back(element_json(S, a));
  return out;
}

}  // namespace

ojson analyze_json(const InverseSemigroupTable& S, const Caps& caps) {
  ojson j;
  j["size"] = S.size();
  j["labels"] = S.labels();
  j["idempotents"] = labels_of(S, S.idempotents());

  ojson order;
  const auto zd = is_zero_disjunctive(S);
  order["zero_disjunctive"] = zd.holds;
  if (zd.witness) order["zero_disjunctive_witness"] = {S.label(zd.witness->first), S.label(zd.witness->second)};
  const auto szd = is_strongly_zero_disjunctive(S);
  order["strongly_zero_disjunctive"] = szd.holds;
  if (szd.cover) {
    order["cover_witness"] = {{"e", S.label(szd.cover->e)}, {"cover", labels_of(S, szd.cover->cover)}};
  }
  order["filters"] = filters_json(S, filters(S));
  order["ultrafilters"] = filters_json(S, ultrafilters(S));
  order["tight_filters"] = filters_json(S, tight_filters(S));
  order["minimal_idempotents"] = labels_of(S, minimal_idempotents(S));
  ojson covers = ojson::array();
  for (ElemId e : S.idempotents()) {
    for (const auto& c : minimal_covers(S, e, caps)) {
      covers.push_back({{"e", S.label(e)}, {"cover", labels_of(S, c.cover)}});
    }
  }
  order["minimal_covers"] = covers;
  j["order"] = order;

  ojson cong;
  ojson mu_blocks = ojson::array();
  for (const auto& b : mu(S).blocks()) mu_blocks.push_back(labels_of(S, b));
  cong["mu"] = mu_blocks;
  const auto cf = is_congruence_free(S);
  cong["fundamental"] = cf.fundamental;
  cong["quasi_fundamental"] = is_quasi_fundamental(S);
  cong["zero_simple"] = cf.zero_simple;
  cong["congruence_free"] = cf.holds;
  cong["reason"] = to_string(cf.reason);
  if (S.size() <= caps.oracle) cong["congruence_count"] = enumerate_congruences(S, caps).size();
  j["congruence"] = cong;
  return j;
}

ojson element_json(const InverseSemigroupTable& S, const AlgebraElement& a) {
  ojson out = ojson::object();
  for (const auto& [s, c] : a.terms()) out[S.label(s)] = c.to_string();
  return out;
}

ojson simplicity_json(const InverseSemigroupTable& S, const SimplicityReport& r) {
  ojson j;
  j["field"] = r.field.name();
  j["verdict"] = to_string(r.verdict);
  const auto& cf = r.congruence_free;
  j["congruence_free"] = {{"holds", cf.holds},
                          {"reason", to_string(cf.reason)},
                          {"fundamental", cf.fundamental},
                          {"zero_simple", cf.zero_simple},
                          {"zero_disjunctive", cf.zero_disjunctive}};
  j["singular_ideal"] = {{"dimension", r.singular.dim()}, {"basis", basis_json(S, r.singular)}};
  j["tight_ideal"] = {{"dimension", r.tight.dim()}, {"basis", basis_json(S, r.tight)}};
  j["hausdorff_agree"] = r.hausdorff_agree;
  j["essential_dimension"] = S.size() - 1 - r.singular.dim();
  ojson certs = ojson::array();
  const auto elems = elements_of(r.singular);
  for (std::size_t i = 0; i < r.certificates.size(); ++i) {
    ojson ann = ojson::object();
    for (const auto& [e, f] : r.certificates[i].annihilators) ann[S.label(e)] = S.label(f);
    certs.push_back({{"element", element_json(S, elems[i])}, {"annihilators", ann}});
  }
  j["certificates"] = certs;
  return j;
}

ojson sweep_json(const std::vector<SimplicityReport>& reports) {
  ojson out = ojson::array();
  for (const auto& r : reports) {
    out.push_back({{"field", r.field.name()},
                   {"verdict", to_string(r.verdict)},
                   {"congruence_free", r.congruence_free.holds},
                   {"singular_dimension", r.singular.dim()}});
  }
  return out;
}

ojson groupoid_json(const InverseSemigroupTable& S, const GermGroupoid& G, bool tight) {
  ojson j;
  j["kind"] = tight ? "tight" : "universal";
  ojson objects = ojson::array();
  for (std::size_t i = 0; i < G.num_objects; ++i) {
    objects.push_back({{"name", G.object_names[i]}, {"generator", S.label(G.objects[i].generator)}});
  }
  j["objects"] = objects;
  ojson arrows = ojson::array();
  for (std::size_t g = 0; g < G.num_arrows(); ++g) {
    arrows.push_back({{"name", G.arrow_names[g]},
                      {"rep", S.label(G.germs[g].rep)},
                      {"base", S.label(G.germs[g].base.generator)},
                      {"dom", G.dom[g]},
                      {"ran", G.ran[g]},
                      {"inverse", G.inverse[g]}});
  }
  j["arrows"] = arrows;
  j["units"] = G.unit;
  j["compose"] = G.compose;
  const auto c = classify(G);
  j["classification"] = {{"effective", c.effective}, {"minimal", c.minimal}, {"topologically_free", c.topologically_free}};
  j["orbits"] = orbits(G);
  return j;
}

FiniteGroupoid groupoid_from_json(const nlohmann::json& j) {
  try {
    FiniteGroupoid G;
    for (const auto& o : j.at("objects")) G.object_names.push_back(o.at("name").get<std::string>());
    G.num_objects = G.object_names.size();
    for (const auto& a : j.at("arrows")) {
      G.arrow_names.push_back(a.at("name").get<std::string>());
      G.dom.push_back(a.at("dom").get<std::size_t>());
      G.ran.push_back(a.at("ran").get<std::size_t>());
      G.inverse.push_back(a.at("inverse").get<std::size_t>());
    }
    G.unit = j.at("units").get<std::vector<std::size_t>>();
    G.compose = j.at("compose").get<std::vector<std::vector<std::int32_t>>>();
    if (auto err = check_groupoid(G)) throw ParseError("groupoid JSON: " + *err);
    return G;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("groupoid JSON: ") + e.what());
  }
}

namespace {

using namespace selfsimilar;

ojson word_names(const SelfSimilarAction& A, const std::vector<std::uint32_t>& bases) {
  ojson out = ojson::array();
  for (auto b : bases) out.push_back(A.letter_name(b));
  return out;
}

ojson criterion_json(const SelfSimilarAction& A, std::uint32_t p, const CriterionResult& c) {
  ojson sums = ojson::array();
  for (const auto& s : c.sums) {
    sums.push_back({{"order", s.order}, {"a", word_names(A, s.a)}, {"b", word_names(A, s.b)}, {"sum", s.sum.to_string()}});
  }
  return {{"prime", p},
          {"phi", c.primes},
          {"singular", c.singular},
          {"sum_count", c.sums.size()},
          {"nonzero_sums", c.nonzero},
          {"sums", sums}};
}

ojson search_json(const SelfSimilarAction& A, const SingularSearch& s) {
  ojson j;
  j["outcome"] = to_string(s.outcome);
  j["probes"] = s.probes;
  if (s.zero_level) j["zero_level"] = *s.zero_level;
  ojson ann = ojson::array();
  for (const auto& [u, v] : s.annihilators) {
    ann.push_back({{"u", A.format_word(u)}, {"v", A.format_word(v)}});
  }
  j["annihilators"] = ann;
  if (s.refuting_probe) {
    j["refutation"] = {{"u", A.format_word(*s.refuting_probe)}, {"block", A.format_word(*s.refuting_block)}};
  }
  ojson open = ojson::array();
  for (const auto& u : s.unresolved) open.push_back(A.format_word(u));
  j["unresolved"] = open;
  return j;
}

ojson branch_json(const BranchResult& b) {
  const auto& A = *b.action;
  ojson j;
  j["c"] = format(A, b.c);
  ojson distinct = ojson::object();
  for (const auto& [stmt, t] : b.distinct) distinct[stmt] = to_string(t);
  j["oracle"] = distinct;
  j["nonzero"] = b.nonzero;
  j["annihilated"] = b.annihilated;
  ojson eqs = ojson::array();
  for (const auto& e : b.equations) {
    ojson terms = ojson::array();
    for (const auto& [t, c] : e.expansion) terms.push_back({{"term", format(A, t)}, {"coeff", c.to_string()}});
    eqs.push_back({{"letter", A.format_letter(e.letter)}, {"expansion", terms}, {"reduction", format(A, e.result)}});
  }
  j["equations"] = eqs;
  return j;
}

}  // namespace

ojson selfsimilar_json(const SelfSimilarReport& r, const SelfSimilarAction& A) {
  const SelfSimilarAction& act = r.branch ? static_cast<const SelfSimilarAction&>(*r.branch->action) : A;
  ojson j;
  j["kind"] = r.kind;
  j["field"] = r.field.name();
  j["verdict"] = to_string(r.verdict);
  j["method"] = r.method;
  j["congruence_free"] = {{"holds", r.congruence_free}, {"reason", r.congruence_free_reason}};
  if (r.effectiveness) {
    ojson e = {{"effective", r.effectiveness->effective}, {"method", r.effectiveness->method}};
    if (r.effectiveness->witness) e["witness"] = act.format(*r.effectiveness->witness);
    j["effectiveness"] = e;
  }
  if (r.witness) j["witness"] = format(act, *r.witness);
  if (!r.criteria.empty()) {
    ojson cs = ojson::array();
    for (const auto& [p, c] : r.criteria) cs.push_back(criterion_json(act, p, c));
    j["criteria"] = cs;
  }
  if (r.reduction) {
    ojson basis = ojson::array();
    for (const auto& c : r.reduction->basis) basis.push_back(format(act, c));
    j["group_ring_reduction"] = {{"group_order", r.reduction->group_order},
                                 {"equations", r.reduction->equations},
                                 {"dimension", r.reduction->dimension},
                                 {"basis", basis}};
  }
  if (r.search) j["search"] = search_json(act, *r.search);
  if (r.branch) j["branch"] = branch_json(*r.branch);
  return j;
}

ojson action_summary_json(const ActionSpec& spec) {
  const auto& A = *spec.action;
  ojson j;
  j["kind"] = spec.kind;
  ojson letters = ojson::array();
  for (std::uint32_t b = 0; b < A.alphabet_size(); ++b) {
    letters.push_back({{"name", A.letter_name(b)}, {"inflated", A.inflated(b)}});
  }
  j["alphabet"] = letters;
  ojson gens = ojson::array();
  for (const auto& g : A.generators()) gens.push_back(A.format(g));
  j["generators"] = gens;
  j["exact"] = A.exact();
  if (!spec.primes.empty()) j["primes"] = spec.primes;
  return j;
}

namespace {

bool scalar_list(const ojson& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j) {
    if (x.is_structured() && !scalar_list(x)) return false;
  }
  return true;
}

std::string scalar_text(const ojson& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + scalar_text(j[i]);
    return out + "]";
  }
  return j.dump();
}

void render(const ojson& j, int indent, std::ostringstream& out) {
  const std::string pad(std::size_t(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !scalar_list(v) && !v.empty()) {
        out << pad << k << ":\n";
        render(v, indent + 2, out);
      } else {
        out << pad << k << ": " << scalar_text(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        out << pad << "-\n";
        render(v, indent + 2, out);
      } else {
        out << pad << "- " << scalar_text(v) << "\n";
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string render_text(const ojson& j) {
  std::ostringstream out;
  render(j, 0, out);
  return out.str();
}

}  // namespace invsemi
