#include "hgc/io.hpp"

#include <algorithm>

#include "hgc/errors.hpp"

namespace hgc {

Json to_json(const Hypergraph& h) {
  std::vector<std::vector<VertexId>> edges;
  edges.reserve(h.size());
  for (VertexMask e : h.edges()) edges.push_back(h.names(e));
  std::sort(edges.begin(), edges.end());
  Json j;
  j["vertices"] = h.vertices();
  j["edges"] = edges;
  return j;
}

Hypergraph hypergraph_from_json(const Json& j) {
  if (!j.is_object()) throw ConstructionError("hypergraph must be a JSON object");
  if (!j.contains("vertices") || !j.at("vertices").is_array()) {
    throw ConstructionError("hypergraph needs a \"vertices\" array");
  }
  std::vector<VertexId> vertices;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_string()) throw ConstructionError("vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::vector<VertexId>> edges;
  if (j.contains("edges")) {
    if (!j.at("edges").is_array()) throw ConstructionError("\"edges\" must be an array");
    for (const auto& e : j.at("edges")) {
      if (!e.is_array()) throw ConstructionError("each edge must be an array of vertex ids");
      std::vector<VertexId> inc;
      for (const auto& v : e) {
        if (!v.is_string()) throw ConstructionError("vertex ids must be strings");
        inc.push_back(v.get<std::string>());
      }
      std::sort(inc.begin(), inc.end());
      if (std::adjacent_find(inc.begin(), inc.end()) != inc.end()) {
        throw ConstructionError("edge lists a vertex twice");
      }
      edges.push_back(std::move(inc));
    }
  }
  return Hypergraph::build(std::move(vertices), edges);
}

std::string to_canonical_string(const Hypergraph& h) { return to_json(h).dump(); }

Json to_json(const Rational& q) { return Json{{"num", q.numerator()}, {"den", q.denominator()}}; }

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace hgc
