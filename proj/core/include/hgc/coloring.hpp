#pragma once

#include <optional>
#include <vector>

#include "hgc/hypergraph.hpp"
#include "hgc/io.hpp"
#include "hgc/property.hpp"

namespace hgc {

using Color = unsigned;

/// L : V(H) -> 2^C, one sorted color list per vertex index.
struct ListAssignment {
  std::vector<std::vector<Color>> lists;

  static ListAssignment constant(std::size_t n, std::vector<Color> colors);
  /// Lists built from color supports: color c + 1 is available exactly at the
  /// vertices of supports[c].
  static ListAssignment from_supports(std::size_t n, const std::vector<VertexMask>& supports);

  std::size_t order() const noexcept { return lists.size(); }
  std::size_t size(VertexIndex v) const { return lists.at(v).size(); }

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;
};

/// A total coloring, one color per vertex index.
struct Coloring {
  std::vector<Color> colors;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// A coloring of H[S] stored against the vertex indices of H.
using PartialColoring = std::vector<std::optional<Color>>;

/// Every color class induces a member of P. Throws DomainError if φ is not total.
bool is_P_coloring(const Hypergraph& h, const Property& p, const Coloring& phi);
bool is_L_coloring(const ListAssignment& l, const Coloring& phi);

/// Backtracking search for (P,L)-colorings of induced subhypergraphs of one
/// host. Vertices are tried in order of descending degree, ties by index; a
/// branch is cut as soon as the color class it extends leaves P (sound
/// because P is hereditary).
class ListColoringSearch {
 public:
  ListColoringSearch(const Hypergraph& h, const Property& p);

  std::optional<PartialColoring> solve(const ListAssignment& l, VertexMask active) const;
  std::optional<PartialColoring> solve(const ListAssignment& l) const { return solve(l, h_.all()); }
  bool colorable(const ListAssignment& l, VertexMask active) const { return solve(l, active).has_value(); }
  bool colorable(const ListAssignment& l) const { return colorable(l, h_.all()); }

 private:
  const Hypergraph& h_;
  const Property& p_;
  std::vector<VertexIndex> order_;
};

std::optional<Coloring> find_PL_coloring(const Hypergraph& h, const Property& p, const ListAssignment& l);

/// Least k with a P-coloring from {1..k}.
std::size_t chi_P(const Hypergraph& h, const Property& p);

/// Size guards for the exhaustive list-chromatic computation.
struct ChoosabilityGuard {
  std::size_t max_order = 6;
  std::size_t max_k = 3;
};

/// χ^ℓ(H:P): quantifies over one representative per color-permutation orbit
/// of list assignments with |L(v)| = k. Throws BudgetExceeded when a list
/// size k < |H| beyond the guard would have to be examined.
std::size_t chi_list_P(const Hypergraph& h, const Property& p, const ChoosabilityGuard& guard = {});

/// Per low vertex evaluation of the tight-degree structure at a fixed
/// coloring φ of H - v.
struct LowVertexCheck {
  VertexIndex vertex = 0;
  std::vector<std::pair<Color, std::size_t>> class_degrees;  // (c, d_c) for c in L(v)
  bool all_equal_r = false;
  bool edges_covered = false;  // E_H(v) is the union of the E_{H_{c,v}}(v)
};

struct CriticalityReport {
  bool is_critical = false;
  bool colorable = false;  // H itself
  /// witnesses[v]: a (P,L)-coloring of H - v when one exists.
  std::vector<std::optional<PartialColoring>> witnesses;
  /// {v : d_H(v) = r |L(v)|}; only filled in when critical.
  VertexMask low_vertices = 0;
  /// d_H(v) >= r |L(v)| at every vertex (evaluated when critical).
  bool degree_bound_holds = true;
  std::vector<VertexIndex> degree_bound_violations;
  std::vector<LowVertexCheck> low_vertex_checks;
};

/// Throws DomainError for the empty hypergraph.
CriticalityReport is_PL_critical(const Hypergraph& h, const Property& p, const ListAssignment& l);

/// H(V(H,P,L)). Throws DomainError unless H is (P,L)-critical.
Hypergraph low_vertex_hypergraph(const Hypergraph& h, const Property& p, const ListAssignment& l);

/// A minimum-order induced subhypergraph with the same P-list-chromatic
/// number; ties are broken by the smallest canonical form.
Hypergraph critical_core(const Hypergraph& h, const Property& p, const ChoosabilityGuard& guard = {});

Json to_json(const Hypergraph& h, const ListAssignment& l);
ListAssignment list_assignment_from_json(const Hypergraph& h, const Json& j);
Json to_json(const Hypergraph& h, const Coloring& phi);
Json to_json(const Hypergraph& h, const PartialColoring& phi);
Json to_json(const Hypergraph& h, const Property& p, const CriticalityReport& r);

}  // namespace hgc
