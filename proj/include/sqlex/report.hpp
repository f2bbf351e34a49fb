#pragma once

#include <json.hpp>

#include "sqlex/lexsegment.hpp"
#include "sqlex/resolution.hpp"
#include "sqlex/s_sequence.hpp"
#include "sqlex/sym_invariants.hpp"

namespace sqlex {

// JSON I/O for the CLI. Reports use ordered_json so that emitted
// documents re-parse and re-serialize byte-identically, and every list
// is emitted in a deterministic order (generators descending by hslex,
// Betti entries by (i, j)).
using Json = nlohmann::ordered_json;

Json ideal_to_json(const SqIdeal& ideal);
SqIdeal ideal_from_json(const Json& j);

/// Accepts the {"n":..., "generators": [...]} schema, or inline text
/// "x1*x2, x1*x3*x4" together with an explicit n.
SqIdeal parse_ideal_text(const std::string& generators, int n);

Json betti_to_json(const BettiTable& table);

/// Aligned text diagram: rows are homological degree i, columns j - i.
std::string betti_diagram(const BettiTable& table);

Json extremal_to_json(const std::vector<ExtremalBetti>& extremal);
Json annihilators_to_json(const AnnihilatorIdeals& ann);
Json verdict_to_json(const SSequenceVerdict& verdict, bool include_basis);
Json sym_report_to_json(const SymReport& report);
Json sym_comparison_to_json(const SymComparison& cmp);

}  // namespace sqlex
