#pragma once

#include <json.hpp>

#include <string>

#include "dpfrac/bounds.hpp"
#include "dpfrac/cover.hpp"
#include "dpfrac/decide.hpp"
#include "dpfrac/graph.hpp"
#include "dpfrac/odd_cycle.hpp"
#include "dpfrac/solver.hpp"

// JSON wire formats. Vertices are 0-based; color indices are 1-based in
// every serialized form, with 0 as the unmatched sentinel in cover maps.
// Parse errors carry a JSON-pointer-style path to the offending field.

namespace dpfrac {

using Json = nlohmann::json;

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j, const std::string& where = "$");

Json cover_to_json(const Cover& c);
Cover cover_from_json(const Json& j, const std::string& where = "$");

Json coloring_to_json(const SetColoring& s);
SetColoring coloring_from_json(const Json& j, int n_vertices, const std::string& where = "$");

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& where = "$");

Json verdict_to_json(const Verdict& v, const Graph& g, const std::string& mode);
Json trace_to_json(const OddCycleTrace& t);

Json ledger_to_json(const BoundsLedger& l);
BoundsLedger ledger_from_json(const Json& j);
Json fact_to_json(const Fact& f);
Fact fact_from_json(const Json& j, const std::string& where = "$");

// Stable identifier used by the ledger: the generator label when the graph
// carries one, otherwise a digest of its canonical JSON.
std::string graph_key(const Graph& g);

// "cycle:<n>", "path:<n>", "kbip:<n>,<m>", or inline JSON.
Graph parse_graph_spec(const std::string& spec);

}  // namespace dpfrac
