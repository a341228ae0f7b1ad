#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "hgc/coloring.hpp"
#include "hgc/degeneracy.hpp"
#include "hgc/hypergraph.hpp"
#include "hgc/property.hpp"

namespace hgc {

struct EnumerationBounds {
  std::size_t min_order = 0;
  std::size_t max_order = 4;
  std::size_t max_edges = 6;
  std::size_t max_edge_size = 2;
  std::size_t max_multiplicity = 1;
  std::size_t min_degree = 0;  // orders with no such hypergraph yield nothing
  bool connected_only = false;
  bool simple_only = false;
};

/// Largest order enum_hypergraphs accepts.
inline constexpr std::size_t kMaxEnumerationOrder = 8;
/// Largest order canonical_form accepts.
inline constexpr std::size_t kMaxCanonicalOrder = 12;

/// Isomorphism-class representative: the lexicographically smallest sorted
/// edge-mask sequence over all vertex relabelings.
struct CanonicalForm {
  std::size_t order = 0;
  std::vector<VertexMask> edges;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept;
};

/// Minimum over all vertex bijections that respect an iterated
/// degree/neighbourhood refinement of the vertices. Since the refinement is
/// isomorphism invariant the result is identical for isomorphic inputs.
/// Throws BudgetExceeded above kMaxCanonicalOrder.
CanonicalForm canonical_form(const Hypergraph& h);

/// Rebuilds the representative with vertices named by default_vertex_names().
Hypergraph canonical_hypergraph(const CanonicalForm& f);

/// Canonical JSON of the class representative.
std::string canonical_string(const Hypergraph& h);

/// All automorphisms as vertex permutations (perm[v] is the image of v).
std::vector<std::vector<VertexIndex>> automorphisms(const Hypergraph& h);

/// Every isomorphism class within the bounds exactly once, ordered by
/// (order, edge count, canonical form). Throws DomainError for infeasible
/// bounds and BudgetExceeded above kMaxEnumerationOrder.
void for_each_hypergraph(const EnumerationBounds& b, const std::function<void(const Hypergraph&)>& fn);
std::vector<Hypergraph> enum_hypergraphs(const EnumerationBounds& b);

/// One representative per color-permutation orbit of list assignments on the
/// vertices of `active` with |L(v)| = sizes[v]. An orbit is determined by the
/// multiset of color supports {v : c ∈ L(v)}; `fn` receives that multiset in
/// its canonical order and ListAssignment::from_supports() turns it into lists.
/// Generation stops as soon as `fn` returns false; the return value is false
/// exactly when that happened.
bool for_each_list_support(std::size_t n, VertexMask active, const std::vector<std::size_t>& sizes,
                           const std::function<bool(const std::vector<VertexMask>&)>& fn);

/// Orbit representatives with |L(v)| = k on all of V(H). Throws
/// BudgetExceeded beyond the guard.
std::vector<ListAssignment> enum_list_assignments(const Hypergraph& h, std::size_t k,
                                                  const ChoosabilityGuard& guard = {});

struct CriticalInstance {
  Hypergraph hypergraph;
  ListAssignment lists;
};

/// All connected (P,L)-critical pairs with |L(v)| = k within the bounds, one
/// per orbit of vertex automorphisms acting jointly with color permutations.
std::vector<CriticalInstance> search_critical(const Property& p, std::size_t k, EnumerationBounds b,
                                              const ChoosabilityGuard& guard = {.max_order = 6, .max_k = 4});

/// Degree-feasible-or-not vector functions with entries in [0, max_entry].
void for_each_vector_function(const Hypergraph& h, std::size_t p, unsigned max_entry, bool degree_feasible_only,
                              const std::function<void(const VectorFunction&)>& fn);

/// Connected hypergraphs assembled by repeatedly gluing a block from `menu`
/// at one vertex, up to isomorphism. Only results with maximum degree at most
/// max_degree, at most max_blocks blocks and at most max_order vertices are
/// kept. K_1 is included.
std::vector<Hypergraph> enum_block_trees(const std::vector<Hypergraph>& menu, std::size_t max_order,
                                         std::size_t max_blocks, std::size_t max_degree);

}  // namespace hgc
