// invsemi: validate, analyze and decide simplicity for finite inverse
// semigroup tables and self-similar action specs.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "invsemi/builtins.hpp"
#include "invsemi/errors.hpp"
#include "invsemi/report.hpp"

using namespace invsemi;
namespace ss = invsemi::selfsimilar;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInconclusive = 2;

struct RunConfig {
  std::string input;
  std::vector<std::string> fields;
  std::vector<std::uint32_t> primes{2, 3, 5};
  bool tight = false;
  bool iso = false;
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> probe_budget;
  Caps caps;
};

/// Either a table or an action spec.
struct Input {
  std::optional<RawTable> table;
  std::optional<ss::ActionSpec> action;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string builtin_action(const std::string& name) {
  if (name == "xz-example") return R"({"kind":"xz-example"})";
  if (name.rfind("prime-set:", 0) == 0) return R"({"kind":"prime-set","primes":[)" + name.substr(10) + "]}";
  if (name == "branch-grigorchuk") {
    return R"({"kind":"branch-shape",
      "automaton":{"alphabet":["0","1"],"involutions":true,"states":[
        {"name":"a","output":["1","0"],"transition":["",""]},
        {"name":"b","output":["0","1"],"transition":["a","c"]},
        {"name":"c","output":["0","1"],"transition":["a","d"]},
        {"name":"d","output":["0","1"],"transition":["","b"]}]},
      "psi_g1":["","a b a b"],"psi_g2":["b a b a",""]})";
  }
  return {};
}

Input load(const RunConfig& cfg) {
  Input in;
  if (cfg.input == "random") {
    in.table = random_partial_bijection_semigroup(cfg.seed.value_or(1)).to_raw();
    return in;
  }
  std::string text;
  if (cfg.input.rfind("builtin:", 0) == 0) {
    const std::string name = cfg.input.substr(8);
    text = builtin_action(name);
    if (text.empty()) {
      in.table = builtin_semigroup(name).to_raw();
      return in;
    }
  } else {
    text = read_file(cfg.input);
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (ss::is_action_spec(j)) {
    in.action = ss::parse_action_spec(j, cfg.caps);
  } else {
    in.table = parse_table_json(text);
  }
  return in;
}

std::vector<FieldSpec> fields_of(const RunConfig& cfg) {
  std::vector<FieldSpec> out;
  for (const auto& f : cfg.fields) {
    if (f == "Q" || f == "0") {
      out.push_back(FieldSpec::rationals());
      continue;
    }
    std::uint32_t p = 0;
    try {
      p = std::uint32_t(std::stoul(f));
    } catch (const std::exception&) {
      throw InvalidArgument("bad field '" + f + "'");
    }
    out.push_back(FieldSpec::from_characteristic(p));
  }
  if (out.empty()) out.push_back(FieldSpec::rationals());
  return out;
}

void emit(const RunConfig& cfg, ojson j, const std::string& title) {
  if (cfg.seed) j["seed"] = *cfg.seed;
  if (cfg.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "== " << title << " ==\n" << render_text(j);
  }
}

int cmd_validate(const RunConfig& cfg) {
  const Input in = load(cfg);
  if (in.action) {
    emit(cfg, {{"valid", true}, {"action", action_summary_json(*in.action)}}, "action spec");
    return kOk;
  }
  const auto violations = check_table(*in.table);
  ojson list = ojson::array();
  for (const auto& v : violations) {
    list.push_back({{"kind", to_string(v.kind)}, {"witness", v.witness}, {"message", v.message}});
  }
  emit(cfg, {{"valid", violations.empty()}, {"size", in.table->mul.size()}, {"violations", list}}, "validate");
  return violations.empty() ? kOk : kInputError;
}

int cmd_analyze(const RunConfig& cfg) {
  const Input in = load(cfg);
  if (in.action) {
    const auto& A = *in.action->action;
    ojson j = action_summary_json(*in.action);
    const std::size_t depth = cfg.caps.depth;
    ojson haus = ojson::array();
    for (const auto& h : ss::is_hausdorff_up_to_depth(A, depth)) {
      haus.push_back({{"generator", A.format(h.generator)},
                      {"verdict", ss::to_string(h.verdict)},
                      {"minimal_by_depth", h.minimal_by_depth}});
    }
    j["hausdorff"] = haus;
    try {
      const auto e = ss::effectiveness_criterion(A, depth);
      j["effectiveness"] = {{"effective", e.effective}, {"method", e.method}};
      if (e.witness) j["effectiveness"]["witness"] = A.format(*e.witness);
    } catch (const Error& e) {
      j["effectiveness"] = {{"undecided", e.what()}};
    }
    emit(cfg, j, "analyze");
    return kOk;
  }
  emit(cfg, analyze_json(validate_table(*in.table), cfg.caps), "analyze");
  return kOk;
}

int cmd_simplicity(const RunConfig& cfg) {
  const Input in = load(cfg);
  ojson out = ojson::array();
  bool inconclusive = false;
  for (FieldSpec f : fields_of(cfg)) {
    if (in.action) {
      const auto r = ss::verdict_selfsimilar(*in.action, f, cfg.caps);
      inconclusive = inconclusive || r.verdict == Verdict::Inconclusive;
      out.push_back(selfsimilar_json(r, *in.action->action));
    } else {
      const auto S = validate_table(*in.table);
      const auto r = simplicity_verdict(S, f, cfg.caps);
      inconclusive = inconclusive || r.verdict == Verdict::Inconclusive;
      out.push_back(simplicity_json(S, r));
    }
  }
  emit(cfg, {{"reports", out}}, "simplicity");
  return inconclusive ? kInconclusive : kOk;
}

int cmd_sweep(const RunConfig& cfg) {
  const Input in = load(cfg);
  bool inconclusive = false;
  ojson rows = ojson::array();
  if (in.action) {
    std::vector<FieldSpec> fields{FieldSpec::rationals()};
    for (auto p : cfg.primes) fields.push_back(FieldSpec::prime(p));
    for (FieldSpec f : fields) {
      const auto r = ss::verdict_selfsimilar(*in.action, f, cfg.caps);
      inconclusive = inconclusive || r.verdict == Verdict::Inconclusive;
      ojson row = {{"field", f.name()}, {"verdict", to_string(r.verdict)}, {"method", r.method}};
      if (r.witness) row["witness"] = ss::format(r.branch ? *r.branch->action : *in.action->action, *r.witness);
      rows.push_back(row);
    }
  } else {
    const auto reports = characteristic_sweep(validate_table(*in.table), cfg.primes, cfg.caps);
    for (const auto& r : reports) inconclusive = inconclusive || r.verdict == Verdict::Inconclusive;
    rows = sweep_json(reports);
  }
  emit(cfg, {{"sweep", rows}}, "sweep");
  return inconclusive ? kInconclusive : kOk;
}

int cmd_groupoid(const RunConfig& cfg) {
  const Input in = load(cfg);
  if (!in.table) throw UnsupportedAction("groupoid needs a finite table");
  const auto S = validate_table(*in.table);
  const GermGroupoid G = cfg.tight ? tight_groupoid(S) : universal_groupoid(S);
  ojson j = groupoid_json(S, G, cfg.tight);
  if (cfg.iso) {
    const auto c = iso_check(S, fields_of(cfg).front());
    j["iso_check"] = {{"bijective", c.bijective}, {"multiplicative", c.multiplicative}, {"pairs_checked", c.pairs_checked}};
  }
  emit(cfg, j, cfg.tight ? "tight groupoid" : "universal groupoid");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse semigroup algebra simplicity toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--field", cfg.fields, "Field characteristic: 0 (or Q) or a prime; repeatable");
  app.add_option("--primes", cfg.primes, "Primes for sweep")->delimiter(',');
  app.add_option("--depth", cfg.depth, "Word depth for self-similar searches");
  app.add_option("--probe-budget", cfg.probe_budget, "Probe budget for hull singularity searches");
  app.add_option("--seed", cfg.seed, "Seed for the random input");
  app.add_flag("--json", cfg.json, "Emit JSON");

  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&);
  };
  const Sub subs[] = {
      {"validate", "Check table axioms or parse an action spec", cmd_validate},
      {"analyze", "Order, filter and congruence structure", cmd_analyze},
      {"simplicity", "Simplicity verdicts with certificates", cmd_simplicity},
      {"sweep", "Verdicts over Q and each prime", cmd_sweep},
      {"groupoid", "Universal or tight germ groupoid", cmd_groupoid},
  };
  int (*run)(const RunConfig&) = nullptr;
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("input", cfg.input, "Path, builtin:<name> or random")->required();
    sub->fallthrough();
    if (std::string(s.name) == "groupoid") {
      sub->add_flag("--tight", cfg.tight, "Tight groupoid instead of universal");
      sub->add_flag("--iso", cfg.iso, "Also check K_0 S against the Steinberg algebra");
    }
    sub->callback([&run, s] { run = s.run; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }
  try {
    cfg.caps = Caps::from_environment();
    if (cfg.depth) cfg.caps.depth = *cfg.depth;
    if (cfg.probe_budget) cfg.caps.probe_budget = *cfg.probe_budget;
    for (auto p : cfg.primes) FieldSpec::prime(p);
    return run(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return kInputError;
  }
}
