#include "dpfrac/json_io.hpp"

#include <algorithm>

#include "dpfrac/error.hpp"

namespace dpfrac {

namespace {

[[noreturn]] void bad_field(const std::string& where, const std::string& what) {
  fail(Err::parse_error, "at " + where + ": " + what);
}

const Json& need(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad_field(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad_field(where + "." + key, "missing field");
  return *it;
}

int need_int(const Json& j, const char* key, const std::string& where) {
  const Json& v = need(j, key, where);
  if (!v.is_number_integer()) bad_field(where + "." + key, "expected an integer");
  return v.get<int>();
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.vertex_count();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  if (g.parts()) {
    j["parts"] = {{"A", g.parts()->a}, {"B", g.parts()->b}};
  }
  return j;
}

Graph graph_from_json(const Json& j, const std::string& where) {
  int n = need_int(j, "n", where);
  const Json& ej = need(j, "edges", where);
  if (!ej.is_array()) bad_field(where + ".edges", "expected an array");
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < ej.size(); ++i) {
    const Json& e = ej[i];
    std::string ew = where + ".edges[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      bad_field(ew, "expected a pair of vertex indices");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  Graph g;
  try {
    g = Graph::from_edges(n, std::move(edges));
  } catch (const Error& e) {
    bad_field(where, e.what());
  }
  if (j.contains("parts")) {
    const Json& pj = j["parts"];
    Parts p;
    const Json& aj = need(pj, "A", where + ".parts");
    const Json& bj = need(pj, "B", where + ".parts");
    if (!aj.is_array() || !bj.is_array()) bad_field(where + ".parts", "expected arrays");
    std::vector<char> seen(n, 0);
    for (const Json& x : aj) p.a.push_back(x.get<int>());
    for (const Json& x : bj) p.b.push_back(x.get<int>());
    for (int v : p.a) {
      if (v < 0 || v >= n || seen[v]) bad_field(where + ".parts", "parts must partition 0..n-1");
      seen[v] = 1;
    }
    for (int v : p.b) {
      if (v < 0 || v >= n || seen[v]) bad_field(where + ".parts", "parts must partition 0..n-1");
      seen[v] = 1;
    }
    if (static_cast<int>(p.a.size() + p.b.size()) != n)
      bad_field(where + ".parts", "parts must partition 0..n-1");
    // Rebuild through the generator so part-indexed operations can rely on
    // the A-then-B layout; accept only graphs that really are K_{|A|,|B|}.
    Graph k = Graph::complete_bipartite(static_cast<int>(p.a.size()),
                                        static_cast<int>(p.b.size()));
    bool same_layout = true;
    for (size_t i = 0; i < p.a.size() && same_layout; ++i)
      same_layout = p.a[i] == static_cast<int>(i);
    for (size_t i = 0; i < p.b.size() && same_layout; ++i)
      same_layout = p.b[i] == static_cast<int>(p.a.size() + i);
    if (!same_layout || !(k == g))
      bad_field(where + ".parts",
                "parts are only supported on complete bipartite graphs in A-then-B vertex order");
    g = std::move(k);
  }
  return g;
}

Json cover_to_json(const Cover& c) {
  Json j;
  j["graph"] = graph_to_json(c.base());
  j["fold"] = c.fold();
  Json ms = Json::array();
  for (const EdgeMap& em : c.edge_maps()) {
    Json m;
    m["u"] = em.u;
    m["v"] = em.v;
    std::vector<int> one_based(em.map.size());
    for (size_t i = 0; i < em.map.size(); ++i) one_based[i] = em.map[i] + 1;
    m["map"] = one_based;
    ms.push_back(std::move(m));
  }
  j["matchings"] = std::move(ms);
  return j;
}

Cover cover_from_json(const Json& j, const std::string& where) {
  Graph g = graph_from_json(need(j, "graph", where), where + ".graph");
  int fold = need_int(j, "fold", where);
  const Json& ms = need(j, "matchings", where);
  if (!ms.is_array()) bad_field(where + ".matchings", "expected an array");
  std::vector<EdgeMap> maps;
  for (size_t i = 0; i < ms.size(); ++i) {
    std::string mw = where + ".matchings[" + std::to_string(i) + "]";
    EdgeMap em;
    em.u = need_int(ms[i], "u", mw);
    em.v = need_int(ms[i], "v", mw);
    const Json& arr = need(ms[i], "map", mw);
    if (!arr.is_array()) bad_field(mw + ".map", "expected an array");
    for (const Json& x : arr) {
      if (!x.is_number_integer()) bad_field(mw + ".map", "expected integers");
      int t = x.get<int>();
      if (t < 0 || t > fold) bad_field(mw + ".map", "color index out of range (1-based, 0=unmatched)");
      em.map.push_back(t - 1);
    }
    maps.push_back(std::move(em));
  }
  try {
    return Cover::build(std::move(g), fold, maps);
  } catch (const Error& e) {
    bad_field(where, e.what());
  }
}

Json coloring_to_json(const SetColoring& s) {
  Json j;
  j["b"] = s.b;
  Json sel = Json::object();
  for (size_t v = 0; v < s.selection.size(); ++v) {
    std::vector<int> one_based(s.selection[v].size());
    for (size_t i = 0; i < s.selection[v].size(); ++i) one_based[i] = s.selection[v][i] + 1;
    sel[std::to_string(v)] = one_based;
  }
  j["selection"] = std::move(sel);
  return j;
}

SetColoring coloring_from_json(const Json& j, int n_vertices, const std::string& where) {
  SetColoring s;
  s.b = need_int(j, "b", where);
  const Json& sel = need(j, "selection", where);
  if (!sel.is_object()) bad_field(where + ".selection", "expected an object");
  s.selection.assign(n_vertices, {});
  for (auto it = sel.begin(); it != sel.end(); ++it) {
    std::string sw = where + ".selection." + it.key();
    int v = -1;
    try {
      v = std::stoi(it.key());
    } catch (...) {
      bad_field(sw, "vertex key must be an integer");
    }
    if (v < 0 || v >= n_vertices) bad_field(sw, "vertex out of range");
    if (!it->is_array()) bad_field(sw, "expected an array of colors");
    for (const Json& x : *it) {
      if (!x.is_number_integer() || x.get<int>() < 1) bad_field(sw, "colors are 1-based integers");
      s.selection[v].push_back(x.get<int>() - 1);
    }
    std::sort(s.selection[v].begin(), s.selection[v].end());
    if (std::adjacent_find(s.selection[v].begin(), s.selection[v].end()) !=
        s.selection[v].end())
      bad_field(sw, "duplicate color in selection");
  }
  return s;
}

Json rational_to_json(const Rational& q) {
  return {{"num", boost::multiprecision::numerator(q).str()},
          {"den", boost::multiprecision::denominator(q).str()}};
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  const Json& num = need(j, "num", where);
  const Json& den = need(j, "den", where);
  if (!num.is_string() || !den.is_string()) bad_field(where, "num/den must be decimal strings");
  try {
    return Rational(BigInt(num.get<std::string>()), BigInt(den.get<std::string>()));
  } catch (const std::exception&) {
    bad_field(where, "bad rational");
  }
}

Json verdict_to_json(const Verdict& v, const Graph& g, const std::string& mode) {
  Json j;
  j["type"] = "verdict";
  j["graph"] = graph_to_json(g);
  j["graph_key"] = graph_key(g);
  j["a"] = v.a;
  j["b"] = v.b;
  j["mode"] = mode;
  j["outcome"] = outcome_name(v.outcome);
  if (v.witness) j["witness"] = cover_to_json(*v.witness);
  if (v.witness_index) j["witness_index"] = *v.witness_index;
  if (v.witness_seed) j["witness_seed"] = *v.witness_seed;
  j["reverified"] = v.reverified;
  j["stats"] = {{"covers_examined", v.covers_examined},
                {"covers_colored", v.covers_colored},
                {"total_covers", v.total_covers},
                {"nodes", v.nodes},
                {"seed", v.seed}};
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json trace_to_json(const OddCycleTrace& t) {
  int fold = t.completed.fold();
  auto pair_list = [&](const std::vector<int>& ids) {
    Json a = Json::array();
    for (int id : ids) a.push_back({id / fold, id % fold + 1});  // [vertex, color]
    return a;
  };
  Json j;
  j["type"] = "odd-cycle-trace";
  j["r"] = t.r;
  j["cover"] = cover_to_json(t.completed);
  Json cycles = Json::array();
  for (const auto& cy : t.cycles) cycles.push_back(pair_list(cy));
  j["cycles"] = std::move(cycles);
  j["windings"] = t.windings;
  j["even_cycle_count"] = t.even_cycle_count;
  j["deleted"] = pair_list(t.deleted);
  Json paths = Json::array();
  for (const auto& p : t.paths) paths.push_back(pair_list(p));
  j["paths"] = std::move(paths);
  j["path_ks"] = t.path_ks;
  j["coloring"] = coloring_to_json(t.coloring);
  j["tallies"] = t.tallies;
  return j;
}

namespace {

const char* fact_kind_name(Fact::Kind k) {
  switch (k) {
    case Fact::Kind::colorable: return "colorable";
    case Fact::Kind::refuted: return "refuted";
    case Fact::Kind::analytic_lower: return "analytic-lower";
    case Fact::Kind::analytic_upper: return "analytic-upper";
  }
  return "?";
}

Fact::Kind fact_kind_from(const std::string& s, const std::string& where) {
  if (s == "colorable") return Fact::Kind::colorable;
  if (s == "refuted") return Fact::Kind::refuted;
  if (s == "analytic-lower") return Fact::Kind::analytic_lower;
  if (s == "analytic-upper") return Fact::Kind::analytic_upper;
  bad_field(where + ".kind", "unknown fact kind '" + s + "'");
}

}  // namespace

Json fact_to_json(const Fact& f) {
  Json j;
  j["graph"] = f.graph_key;
  j["kind"] = fact_kind_name(f.kind);
  if (f.a || f.b) {
    j["a"] = f.a;
    j["b"] = f.b;
  }
  j["value"] = rational_to_json(f.value);
  if (f.strict) j["strict"] = true;
  j["provenance"] = f.provenance;
  return j;
}

Fact fact_from_json(const Json& j, const std::string& where) {
  Fact f;
  const Json& gk = need(j, "graph", where);
  if (!gk.is_string()) bad_field(where + ".graph", "expected a graph key string");
  f.graph_key = gk.get<std::string>();
  const Json& kind = need(j, "kind", where);
  if (!kind.is_string()) bad_field(where + ".kind", "expected a string");
  f.kind = fact_kind_from(kind.get<std::string>(), where);
  if (j.contains("a")) f.a = need_int(j, "a", where);
  if (j.contains("b")) f.b = need_int(j, "b", where);
  f.value = rational_from_json(need(j, "value", where), where + ".value");
  if (j.contains("strict")) f.strict = j["strict"].get<bool>();
  const Json& prov = need(j, "provenance", where);
  if (!prov.is_string()) bad_field(where + ".provenance", "expected a string");
  f.provenance = prov.get<std::string>();
  return f;
}

Json ledger_to_json(const BoundsLedger& l) {
  Json facts = Json::array();
  for (const Fact& f : l.facts()) facts.push_back(fact_to_json(f));
  return {{"facts", std::move(facts)}};
}

BoundsLedger ledger_from_json(const Json& j) {
  BoundsLedger l;
  if (j.is_null() || (j.is_object() && j.empty())) return l;
  const Json& facts = need(j, "facts", "$");
  if (!facts.is_array()) bad_field("$.facts", "expected an array");
  for (size_t i = 0; i < facts.size(); ++i)
    l.update(fact_from_json(facts[i], "$.facts[" + std::to_string(i) + "]"));
  return l;
}

std::string graph_key(const Graph& g) {
  if (g.label()) return *g.label();
  return "g#" + fnv1a64_hex(graph_to_json(g).dump());
}

Graph parse_graph_spec(const std::string& spec) {
  if (spec.find('{') != std::string::npos) {
    Json j = Json::parse(spec, nullptr, false);
    if (j.is_discarded()) fail(Err::parse_error, "graph spec is not valid JSON");
    return graph_from_json(j);
  }
  auto num = [&](const std::string& s) {
    try {
      size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (...) {
      fail(Err::parse_error, "bad number '" + s + "' in graph spec '" + spec + "'");
    }
  };
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    fail(Err::parse_error,
         "graph spec must be cycle:<n>, path:<n>, kbip:<n>,<m>, or inline JSON");
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "cycle") return Graph::cycle(num(rest));
  if (kind == "path") return Graph::path(num(rest));
  if (kind == "kbip") {
    auto comma = rest.find(',');
    if (comma == std::string::npos)
      fail(Err::parse_error, "kbip spec needs two sizes: kbip:<n>,<m>");
    return Graph::complete_bipartite(num(rest.substr(0, comma)), num(rest.substr(comma + 1)));
  }
  fail(Err::parse_error, "unknown graph generator '" + kind + "'");
}

}  // namespace dpfrac
