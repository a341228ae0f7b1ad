#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hgc {

using VertexId = std::string;
using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

/// Bit i set <=> the vertex with index i belongs to the set.
using VertexMask = std::uint64_t;

/// Hypergraphs are limited to this many vertices so that every vertex set
/// fits in a VertexMask.
inline constexpr std::size_t kMaxOrder = 64;

inline constexpr VertexMask bit(VertexIndex v) { return VertexMask{1} << v; }
inline constexpr bool contains(VertexMask set, VertexIndex v) { return (set >> v) & 1U; }
inline constexpr bool is_subset(VertexMask a, VertexMask b) { return (a & ~b) == 0; }
inline constexpr std::size_t popcount(VertexMask m) { return static_cast<std::size_t>(std::popcount(m)); }
inline constexpr VertexMask full_mask(std::size_t n) { return n >= 64 ? ~VertexMask{0} : (bit(n) - 1); }

/// Calls fn(v) for every vertex index in `set`, in increasing order.
template <class Fn>
void for_each_vertex(VertexMask set, Fn&& fn) {
  while (set != 0) {
    const auto v = static_cast<VertexIndex>(std::countr_zero(set));
    fn(v);
    set &= set - 1;
  }
}

/// An immutable multi-hypergraph H = (V, E, i).
///
/// Vertices are opaque string identifiers kept in sorted order, so a vertex
/// index is its rank among the identifiers. Edges are identified by their
/// position; parallel edges are simply distinct positions with equal
/// incidence. Every incidence is stored as a sorted index list and as a mask.
class Hypergraph {
 public:
  /// The empty hypergraph.
  Hypergraph() = default;

  /// Validating constructor. Vertex identifiers must be distinct, every edge
  /// must have at least two distinct vertices drawn from `vertex_ids`.
  /// Edges keep their input order. Throws ConstructionError.
  static Hypergraph build(std::vector<VertexId> vertex_ids,
                          const std::vector<std::vector<VertexId>>& edge_incidences);

  /// Same as build(), but edges are given as masks over the sorted vertex list.
  static Hypergraph from_masks(std::vector<VertexId> sorted_vertex_ids, std::vector<VertexMask> edges);

  std::size_t order() const noexcept { return vertices_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const VertexId& vertex(VertexIndex v) const { return vertices_.at(v); }
  std::optional<VertexIndex> find(const VertexId& id) const;
  /// Throws DomainError for unknown identifiers.
  VertexIndex index_of(const VertexId& id) const;

  VertexMask all() const noexcept { return full_mask(order()); }
  VertexMask edge(EdgeIndex e) const { return edges_.at(e); }
  const std::vector<VertexMask>& edges() const noexcept { return edges_; }
  std::size_t edge_size(EdgeIndex e) const { return popcount(edges_.at(e)); }

  std::size_t degree(VertexIndex v) const { return degrees_.at(v); }
  const std::vector<std::size_t>& degrees() const noexcept { return degrees_; }

  /// Degree of v in the induced subhypergraph H[within].
  std::size_t degree_within(VertexIndex v, VertexMask within) const noexcept {
    std::size_t d = 0;
    for (VertexMask e : edges_) d += (contains(e, v) && is_subset(e, within)) ? 1 : 0;
    return d;
  }

  /// Number of edges of H[within].
  std::size_t edges_within(VertexMask within) const noexcept {
    std::size_t m = 0;
    for (VertexMask e : edges_) m += is_subset(e, within) ? 1 : 0;
    return m;
  }

  VertexMask mask_of(std::span<const VertexId> ids) const;
  std::vector<VertexId> names(VertexMask set) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  Hypergraph(std::vector<VertexId> vertices, std::vector<VertexMask> edges);

  std::vector<VertexId> vertices_;
  std::vector<VertexMask> edges_;
  std::vector<std::size_t> degrees_;
};

struct DegreeProfile {
  std::vector<std::size_t> degrees;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::size_t degree_sum = 0;
};

DegreeProfile degree_profile(const Hypergraph& h);
std::size_t degree(const Hypergraph& h, const VertexId& v);
std::size_t min_degree(const Hypergraph& h);
std::size_t max_degree(const Hypergraph& h);
std::size_t degree_sum(const Hypergraph& h);
bool is_regular(const Hypergraph& h, std::size_t r);

/// Number of ordinary edges with incidence exactly {u, v}. Throws on u == v.
std::size_t multiplicity(const Hypergraph& h, const VertexId& u, const VertexId& v);
std::size_t multiplicity(const Hypergraph& h, VertexIndex u, VertexIndex v);

bool is_simple(const Hypergraph& h);
/// True when every edge is ordinary (a 2-uniform hypergraph).
bool is_graph(const Hypergraph& h);

/// H[X]: keeps edges whose incidence lies inside X.
Hypergraph induced(const Hypergraph& h, VertexMask x);
Hypergraph induced(const Hypergraph& h, std::span<const VertexId> x);
/// H - X = H[V \ X].
Hypergraph remove(const Hypergraph& h, VertexMask x);
Hypergraph remove(const Hypergraph& h, std::span<const VertexId> x);

/// H(X): keeps edges meeting X in at least two vertices, truncated to X.
Hypergraph shrink(const Hypergraph& h, VertexMask x);
Hypergraph shrink(const Hypergraph& h, std::span<const VertexId> x);
/// H ÷ X = H(V \ X).
Hypergraph shrink_remove(const Hypergraph& h, VertexMask x);
Hypergraph shrink_remove(const Hypergraph& h, std::span<const VertexId> x);

/// H - e: deletes one edge and keeps every vertex.
Hypergraph remove_edge(const Hypergraph& h, EdgeIndex e);

/// Merges v1 in h1 and v2 in h2 to the fresh vertex vstar. The vertex sets of
/// h1 and h2 must be disjoint. Edges of h1 come first, then edges of h2.
Hypergraph merge(const Hypergraph& h1, const VertexId& v1, const Hypergraph& h2, const VertexId& v2,
                 const VertexId& vstar);

/// tH for simple H.
Hypergraph replicate(const Hypergraph& h, std::size_t t);

/// Vertex-disjoint union; throws DomainError if identifiers collide.
Hypergraph disjoint_union(const Hypergraph& h1, const Hypergraph& h2);

/// Renames vertex i to new_names[i]. Names must be distinct.
Hypergraph relabel(const Hypergraph& h, const std::vector<VertexId>& new_names);

/// Identifiers "0", "1", ... zero-padded so that lexicographic and numeric order agree.
std::vector<VertexId> default_vertex_names(std::size_t n);

namespace families {
Hypergraph edgeless(std::size_t n);
Hypergraph complete(std::size_t n);
Hypergraph cycle(std::size_t n);
Hypergraph path(std::size_t n);
/// A single edge spanning all n >= 2 vertices.
Hypergraph single_edge(std::size_t n);
}  // namespace families

}  // namespace hgc
