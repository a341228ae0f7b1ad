#include "hgc/hypergraph.hpp"

#include <algorithm>

#include "hgc/errors.hpp"

namespace hgc {

Hypergraph::Hypergraph(std::vector<VertexId> vertices, std::vector<VertexMask> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), degrees_(vertices_.size(), 0) {
  for (VertexMask e : edges_) for_each_vertex(e, [&](VertexIndex v) { ++degrees_[v]; });
}

Hypergraph Hypergraph::build(std::vector<VertexId> vertex_ids,
                             const std::vector<std::vector<VertexId>>& edge_incidences) {
  if (vertex_ids.size() > kMaxOrder) {
    throw BudgetExceeded("hypergraph order " + std::to_string(vertex_ids.size()) + " exceeds " +
                         std::to_string(kMaxOrder));
  }
  std::sort(vertex_ids.begin(), vertex_ids.end());
  if (auto dup = std::adjacent_find(vertex_ids.begin(), vertex_ids.end()); dup != vertex_ids.end()) {
    throw ConstructionError("duplicate vertex id '" + *dup + "'");
  }
  std::vector<VertexMask> edges;
  edges.reserve(edge_incidences.size());
  for (std::size_t e = 0; e < edge_incidences.size(); ++e) {
    VertexMask m = 0;
    for (const auto& id : edge_incidences[e]) {
      auto it = std::lower_bound(vertex_ids.begin(), vertex_ids.end(), id);
      if (it == vertex_ids.end() || *it != id) {
        throw ConstructionError("edge " + std::to_string(e) + " uses unknown vertex '" + id + "'");
      }
      m |= bit(static_cast<VertexIndex>(it - vertex_ids.begin()));
    }
    if (popcount(m) < 2) {
      throw ConstructionError("edge " + std::to_string(e) + ": incidence cardinality < 2");
    }
    edges.push_back(m);
  }
  return Hypergraph(std::move(vertex_ids), std::move(edges));
}

Hypergraph Hypergraph::from_masks(std::vector<VertexId> sorted_vertex_ids, std::vector<VertexMask> edges) {
  if (sorted_vertex_ids.size() > kMaxOrder) {
    throw BudgetExceeded("hypergraph order exceeds " + std::to_string(kMaxOrder));
  }
  if (!std::is_sorted(sorted_vertex_ids.begin(), sorted_vertex_ids.end()) ||
      std::adjacent_find(sorted_vertex_ids.begin(), sorted_vertex_ids.end()) != sorted_vertex_ids.end()) {
    throw ConstructionError("vertex ids must be sorted and distinct");
  }
  const VertexMask all = full_mask(sorted_vertex_ids.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!is_subset(edges[e], all)) throw ConstructionError("edge " + std::to_string(e) + " uses unknown vertex");
    if (popcount(edges[e]) < 2) {
      throw ConstructionError("edge " + std::to_string(e) + ": incidence cardinality < 2");
    }
  }
  return Hypergraph(std::move(sorted_vertex_ids), std::move(edges));
}

std::optional<VertexIndex> Hypergraph::find(const VertexId& id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || *it != id) return std::nullopt;
  return static_cast<VertexIndex>(it - vertices_.begin());
}

VertexIndex Hypergraph::index_of(const VertexId& id) const {
  if (auto v = find(id)) return *v;
  throw DomainError("unknown vertex '" + id + "'");
}

VertexMask Hypergraph::mask_of(std::span<const VertexId> ids) const {
  VertexMask m = 0;
  for (const auto& id : ids) m |= bit(index_of(id));
  return m;
}

std::vector<VertexId> Hypergraph::names(VertexMask set) const {
  std::vector<VertexId> out;
  for_each_vertex(set & all(), [&](VertexIndex v) { out.push_back(vertices_[v]); });
  return out;
}

DegreeProfile degree_profile(const Hypergraph& h) {
  DegreeProfile p;
  p.degrees = h.degrees();
  if (!p.degrees.empty()) {
    auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
    p.min_degree = *lo;
    p.max_degree = *hi;
  }
  for (VertexMask e : h.edges()) p.degree_sum += popcount(e);
  return p;
}

std::size_t degree(const Hypergraph& h, const VertexId& v) { return h.degree(h.index_of(v)); }

std::size_t min_degree(const Hypergraph& h) {
  return h.empty() ? 0 : *std::min_element(h.degrees().begin(), h.degrees().end());
}

std::size_t max_degree(const Hypergraph& h) {
  return h.empty() ? 0 : *std::max_element(h.degrees().begin(), h.degrees().end());
}

std::size_t degree_sum(const Hypergraph& h) {
  std::size_t s = 0;
  for (VertexMask e : h.edges()) s += popcount(e);
  return s;
}

bool is_regular(const Hypergraph& h, std::size_t r) {
  return !h.empty() && std::all_of(h.degrees().begin(), h.degrees().end(), [r](std::size_t d) { return d == r; });
}

std::size_t multiplicity(const Hypergraph& h, VertexIndex u, VertexIndex v) {
  if (u == v) throw DomainError("multiplicity requires two distinct vertices");
  if (u >= h.order() || v >= h.order()) throw DomainError("multiplicity: vertex index out of range");
  const VertexMask uv = bit(u) | bit(v);
  return static_cast<std::size_t>(std::count(h.edges().begin(), h.edges().end(), uv));
}

std::size_t multiplicity(const Hypergraph& h, const VertexId& u, const VertexId& v) {
  return multiplicity(h, h.index_of(u), h.index_of(v));
}

bool is_simple(const Hypergraph& h) {
  std::vector<VertexMask> sorted = h.edges();
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool is_graph(const Hypergraph& h) {
  return std::all_of(h.edges().begin(), h.edges().end(), [](VertexMask e) { return popcount(e) == 2; });
}

namespace {

void require_subset(const Hypergraph& h, VertexMask x) {
  if (!is_subset(x, h.all())) throw DomainError("vertex set is not a subset of V(H)");
}

// Re-indexes the masks of `edges` (all inside `keep`) onto the compacted vertex list.
VertexMask compact(VertexMask e, VertexMask keep) {
  VertexMask out = 0;
  std::size_t i = 0;
  for_each_vertex(keep, [&](VertexIndex v) {
    if (contains(e, v)) out |= bit(i);
    ++i;
  });
  return out;
}

}  // namespace

Hypergraph induced(const Hypergraph& h, VertexMask x) {
  require_subset(h, x);
  std::vector<VertexMask> edges;
  for (VertexMask e : h.edges()) {
    if (is_subset(e, x)) edges.push_back(compact(e, x));
  }
  return Hypergraph::from_masks(h.names(x), std::move(edges));
}

Hypergraph induced(const Hypergraph& h, std::span<const VertexId> x) { return induced(h, h.mask_of(x)); }

Hypergraph remove(const Hypergraph& h, VertexMask x) {
  require_subset(h, x);
  return induced(h, h.all() & ~x);
}

Hypergraph remove(const Hypergraph& h, std::span<const VertexId> x) { return remove(h, h.mask_of(x)); }

Hypergraph shrink(const Hypergraph& h, VertexMask x) {
  require_subset(h, x);
  std::vector<VertexMask> edges;
  for (VertexMask e : h.edges()) {
    if (popcount(e & x) >= 2) edges.push_back(compact(e & x, x));
  }
  return Hypergraph::from_masks(h.names(x), std::move(edges));
}

Hypergraph shrink(const Hypergraph& h, std::span<const VertexId> x) { return shrink(h, h.mask_of(x)); }

Hypergraph shrink_remove(const Hypergraph& h, VertexMask x) {
  require_subset(h, x);
  return shrink(h, h.all() & ~x);
}

Hypergraph shrink_remove(const Hypergraph& h, std::span<const VertexId> x) {
  return shrink_remove(h, h.mask_of(x));
}

Hypergraph remove_edge(const Hypergraph& h, EdgeIndex e) {
  if (e >= h.size()) throw DomainError("unknown edge " + std::to_string(e));
  std::vector<VertexMask> edges = h.edges();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
  return Hypergraph::from_masks(h.vertices(), std::move(edges));
}

namespace {

std::vector<std::vector<VertexId>> edge_names(const Hypergraph& h, const VertexId* from = nullptr,
                                              const VertexId* to = nullptr) {
  std::vector<std::vector<VertexId>> out;
  out.reserve(h.size());
  for (VertexMask e : h.edges()) {
    auto names = h.names(e);
    if (from != nullptr) std::replace(names.begin(), names.end(), *from, *to);
    out.push_back(std::move(names));
  }
  return out;
}

}  // namespace

Hypergraph merge(const Hypergraph& h1, const VertexId& v1, const Hypergraph& h2, const VertexId& v2,
                 const VertexId& vstar) {
  h1.index_of(v1);
  h2.index_of(v2);
  for (const auto& id : h2.vertices()) {
    if (h1.find(id)) throw DomainError("merge: hypergraphs share vertex '" + id + "'");
  }
  if (h1.find(vstar) || h2.find(vstar)) throw DomainError("merge: fresh vertex '" + vstar + "' clashes");

  std::vector<VertexId> vertices;
  for (const auto& id : h1.vertices()) {
    if (id != v1) vertices.push_back(id);
  }
  for (const auto& id : h2.vertices()) {
    if (id != v2) vertices.push_back(id);
  }
  vertices.push_back(vstar);
  auto edges = edge_names(h1, &v1, &vstar);
  auto rest = edge_names(h2, &v2, &vstar);
  edges.insert(edges.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
  return Hypergraph::build(std::move(vertices), edges);
}

Hypergraph replicate(const Hypergraph& h, std::size_t t) {
  if (t == 0) throw DomainError("replicate: t must be at least 1");
  if (!is_simple(h)) throw DomainError("replicate: hypergraph is not simple");
  std::vector<VertexMask> edges;
  edges.reserve(h.size() * t);
  for (VertexMask e : h.edges()) edges.insert(edges.end(), t, e);
  return Hypergraph::from_masks(h.vertices(), std::move(edges));
}

Hypergraph disjoint_union(const Hypergraph& h1, const Hypergraph& h2) {
  for (const auto& id : h2.vertices()) {
    if (h1.find(id)) throw DomainError("disjoint_union: shared vertex '" + id + "'");
  }
  std::vector<VertexId> vertices = h1.vertices();
  vertices.insert(vertices.end(), h2.vertices().begin(), h2.vertices().end());
  auto edges = edge_names(h1);
  auto rest = edge_names(h2);
  edges.insert(edges.end(), rest.begin(), rest.end());
  return Hypergraph::build(std::move(vertices), edges);
}

Hypergraph relabel(const Hypergraph& h, const std::vector<VertexId>& new_names) {
  if (new_names.size() != h.order()) throw DomainError("relabel: name count differs from order");
  std::vector<std::vector<VertexId>> edges;
  for (VertexMask e : h.edges()) {
    std::vector<VertexId> inc;
    for_each_vertex(e, [&](VertexIndex v) { inc.push_back(new_names[v]); });
    edges.push_back(std::move(inc));
  }
  return Hypergraph::build(new_names, edges);
}

std::vector<VertexId> default_vertex_names(std::size_t n) {
  const std::size_t width = n <= 10 ? 1 : std::to_string(n - 1).size();
  std::vector<VertexId> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string s = std::to_string(i);
    names.push_back(std::string(width - s.size(), '0') + s);
  }
  return names;
}

namespace families {

Hypergraph edgeless(std::size_t n) { return Hypergraph::from_masks(default_vertex_names(n), {}); }

Hypergraph complete(std::size_t n) {
  std::vector<VertexMask> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.push_back(bit(u) | bit(v));
  }
  return Hypergraph::from_masks(default_vertex_names(n), std::move(edges));
}

Hypergraph cycle(std::size_t n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<VertexMask> edges;
  for (std::size_t v = 0; v < n; ++v) edges.push_back(bit(v) | bit((v + 1) % n));
  return Hypergraph::from_masks(default_vertex_names(n), std::move(edges));
}

Hypergraph path(std::size_t n) {
  std::vector<VertexMask> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) edges.push_back(bit(v) | bit(v + 1));
  return Hypergraph::from_masks(default_vertex_names(n), std::move(edges));
}

Hypergraph single_edge(std::size_t n) {
  if (n < 2) throw DomainError("an edge needs at least 2 vertices");
  return Hypergraph::from_masks(default_vertex_names(n), {full_mask(n)});
}

}  // namespace families

}  // namespace hgc
