#include <doctest.h>

#include "invsemi/builtins.hpp"
#include "invsemi/errors.hpp"
#include "invsemi/report.hpp"

using namespace invsemi;

TEST_CASE("analyze reports the structural flags") {
  const auto b2 = analyze_json(builtin_semigroup("b2"));
  CHECK(b2["congruence"]["congruence_free"] == true);
  CHECK(b2["congruence"]["congruence_count"] == 2);
  const auto q = analyze_json(builtin_semigroup("q"));
  CHECK(q["congruence"]["fundamental"] == false);
  CHECK(q["congruence"]["quasi_fundamental"] == true);
  CHECK(q["congruence"]["reason"] == "not_fundamental");
  const auto bo = analyze_json(builtin_semigroup("boolean"));
  CHECK(bo["order"]["strongly_zero_disjunctive"] == false);
  CHECK(bo["order"]["cover_witness"]["e"] == "1");
}

TEST_CASE("groupoid JSON round trips") {
  for (const auto& n : builtin_names()) {
    const auto S = builtin_semigroup(n);
    for (bool tight : {false, true}) {
      const GermGroupoid G = tight ? tight_groupoid(S) : universal_groupoid(S);
      const ojson j = groupoid_json(S, G, tight);
      const FiniteGroupoid back = groupoid_from_json(nlohmann::json::parse(j.dump()));
      CHECK(back.num_objects == G.num_objects);
      CHECK(back.dom == G.dom);
      CHECK(back.ran == G.ran);
      CHECK(back.inverse == G.inverse);
      CHECK(back.unit == G.unit);
      CHECK(back.compose == G.compose);
      CHECK(back.arrow_names == G.arrow_names);
      CHECK(back.object_names == G.object_names);
    }
  }
  auto j = nlohmann::json::parse(groupoid_json(builtin_semigroup("b2"), universal_groupoid(builtin_semigroup("b2")), false).dump());
  j["units"][0] = 1;
  CHECK_THROWS_AS(groupoid_from_json(j), ParseError);
  CHECK_THROWS_AS(groupoid_from_json(nlohmann::json::object()), ParseError);
}

TEST_CASE("reports re-parse losslessly") {
  for (const auto& n : builtin_names()) {
    const auto S = builtin_semigroup(n);
    for (const auto& r : characteristic_sweep(S, {2, 3})) {
      const ojson j = simplicity_json(S, r);
      CHECK(ojson::parse(j.dump()) == j);
      CHECK(j["verdict"] == to_string(r.verdict));
      CHECK(j["singular_ideal"]["dimension"] == r.singular.dim());
    }
    const ojson a = analyze_json(S);
    CHECK(ojson::parse(a.dump(2)) == a);
  }
  using namespace invsemi::selfsimilar;
  for (const char* spec : {R"({"kind":"prime-set","primes":[2]})", R"({"kind":"xz-example"})"}) {
    const auto s = parse_action_spec(std::string(spec));
    const auto r = verdict_selfsimilar(s, FieldSpec::prime(2));
    const ojson j = selfsimilar_json(r, *s.action);
    CHECK(ojson::parse(j.dump()) == j);
    CHECK(j["verdict"] == "not-simple");
    const ojson summary = action_summary_json(s);
    CHECK(ojson::parse(summary.dump()) == summary);
  }
}

TEST_CASE("text rendering lists nested keys") {
  const ojson j = {{"a", 1}, {"b", {{"c", "x"}}}, {"d", {1, 2}}};
  const std::string t = render_text(j);
  CHECK(t.find("a: 1") != std::string::npos);
  CHECK(t.find("c: x") != std::string::npos);
}
