#include "proofforge/emit.hpp"

#include "json.hpp"

#include <sstream>

namespace proofforge {

using nlohmann::json;

namespace {

std::vector<bool> axioms_of(const Hypergraph& h, const Theory& t) {
  std::vector<bool> a(h.vertex_count());
  for (VertexId v = 0; v < h.vertex_count(); ++v) a[v] = t.contains(h.label(v));
  return a;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string graph_json(const Hypergraph& h, const std::vector<bool>& axiom, std::optional<VertexId> sink) {
  json j;
  j["vertices"] = json::array();
  for (VertexId v = 0; v < h.vertex_count(); ++v)
    j["vertices"].push_back({{"id", v}, {"label", h.label(v).str()}, {"is_axiom", v < axiom.size() && axiom[v]}});
  j["edges"] = json::array();
  for (const auto& e : h.edges()) j["edges"].push_back({{"sources", e.sources}, {"target", e.target}, {"rule", e.rule}});
  if (sink) j["sink"] = *sink;
  return j.dump(2) + "\n";
}

std::string proof_json(const Proof& p, const Theory& t) { return graph_json(p.graph, axioms_of(p.graph, t), p.sink); }

std::string structure_json(const DerivationStructure& d) {
  auto sink = d.find(d.goal);
  return graph_json(d.graph, d.axiom, sink);
}

std::string graph_dot(const Hypergraph& h, const std::vector<bool>& axiom, std::optional<VertexId> sink) {
  std::ostringstream o;
  o << "digraph proof {\n  rankdir=BT;\n  node [shape=box];\n";
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    o << "  v" << v << " [label=" << quote(h.label(v).str());
    if (v < axiom.size() && axiom[v]) o << ", penwidth=2";
    if (sink && *sink == v) o << ", style=rounded";
    o << "];\n";
  }
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const auto& ed = h.edge(e);
    o << "  e" << e << " [shape=point, xlabel=" << quote(ed.rule) << "];\n";
    for (auto s : ed.sources) o << "  v" << s << " -> e" << e << " [arrowhead=none];\n";
    o << "  e" << e << " -> v" << ed.target << ";\n";
  }
  o << "}\n";
  return o.str();
}

std::string proof_dot(const Proof& p, const Theory& t) { return graph_dot(p.graph, axioms_of(p.graph, t), p.sink); }

std::string instance_json(const ReductionInstance& r) {
  json j;
  j["goal"] = r.goal.str();
  j["threshold"] = r.threshold.str();
  j["measure"] = r.measure;
  j["deriver"] = deriver_name(r.deriver);
  j["meta"] = r.meta;
  return j.dump(2) + "\n";
}

InstanceSidecar parse_instance_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error("syntax", std::string("sidecar: ") + e.what());
  }
  auto field = [&](const char* k) -> std::string {
    if (!j.contains(k) || !j[k].is_string()) throw Error("syntax", std::string("sidecar lacks string field '") + k + "'");
    return j[k].get<std::string>();
  };
  InstanceSidecar s;
  s.goal = parse_gci(field("goal"));
  s.threshold = Weight::parse(field("threshold"));
  s.measure = field("measure");
  s.deriver = j.contains("deriver") ? field("deriver") : "elk";
  return s;
}

}  // namespace proofforge
