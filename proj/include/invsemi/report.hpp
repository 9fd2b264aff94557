#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "invsemi/algebra.hpp"
#include "invsemi/caps.hpp"
#include "invsemi/groupoid.hpp"
#include "invsemi/selfsimilar_spec.hpp"

namespace invsemi {

using ojson = nlohmann::ordered_json;

/// Order and congruence structure of a finite table.
ojson analyze_json(const InverseSemigroupTable& S, const Caps& caps = {});

/// Algebra element as {label: coefficient}.
ojson element_json(const InverseSemigroupTable& S, const AlgebraElement& a);
ojson simplicity_json(const InverseSemigroupTable& S, const SimplicityReport& r);
/// One row per field: verdict and singular dimension.
ojson sweep_json(const std::vector<SimplicityReport>& reports);

ojson groupoid_json(const InverseSemigroupTable& S, const GermGroupoid& G, bool tight);
/// Reads the structural part of groupoid_json back. Throws ParseError.
FiniteGroupoid groupoid_from_json(const nlohmann::json& j);

ojson selfsimilar_json(const selfsimilar::SelfSimilarReport& r, const selfsimilar::SelfSimilarAction& A);
ojson action_summary_json(const selfsimilar::ActionSpec& spec);

/// Indented "key: value" rendering for terminals.
std::string render_text(const ojson& j);

}  // namespace invsemi
