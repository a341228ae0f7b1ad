#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hgc/hypergraph.hpp"
#include "hgc/io.hpp"

namespace hgc {

struct EnumerationBounds;

/// A hypergraph property P given by a membership predicate.
///
/// The predicate is evaluated on induced subhypergraphs H[S] without
/// materializing them: it receives the host hypergraph and the vertex mask S.
/// `r` is d(P), declared analytically by whoever defines the property.
class Property {
 public:
  using Predicate = std::function<bool(const Hypergraph& host, VertexMask within)>;

  Property(std::string name, Predicate member, bool additive, unsigned r);

  /// Adapts a predicate on whole hypergraphs; H[S] is materialized per call.
  static Property from_hypergraph_predicate(std::string name, std::function<bool(const Hypergraph&)> member,
                                            bool additive, unsigned r);

  const std::string& name() const noexcept { return name_; }
  bool additive() const noexcept { return additive_; }
  unsigned r() const noexcept { return r_; }

  bool contains(const Hypergraph& h) const { return member_(h, h.all()); }
  /// H[within] ∈ P.
  bool contains(const Hypergraph& h, VertexMask within) const { return member_(h, within & h.all()); }

 private:
  std::string name_;
  Predicate member_;
  bool additive_;
  unsigned r_;
};

namespace properties {
/// O: edgeless hypergraphs. d(O) = 1.
Property edgeless();
/// S_k: maximum degree at most k. d(S_k) = 1 (S_0 coincides with O).
Property max_degree(unsigned k);
/// D_k: strictly (k+1)-degenerate hypergraphs. d(D_k) = k + 1.
Property degenerate(unsigned k);
}  // namespace properties

/// Parses "O", "S:k" or "D:k". Throws DomainError otherwise.
Property builtin(std::string_view spec);

/// H ∉ P but H - v ∈ P for every vertex v.
bool in_F(const Property& p, const Hypergraph& h);
bool in_F(const Property& p, const Hypergraph& h, VertexMask within);

/// Minimum degree over the members of F(P) found within the bounds, or
/// nullopt if none was found. This is an upper bound for d(P).
std::optional<std::size_t> d_P_bounded(const Property& p, const EnumerationBounds& bounds);

struct SmoothnessViolation {
  std::string clause;  // "P1", "P2", "a", "b", "c", "e", "additive"
  std::string witness;  // canonical JSON of the offending hypergraph
  std::string detail;
};

struct SmoothnessReport {
  std::size_t instances = 0;
  std::size_t members = 0;
  std::size_t forbidden = 0;  // members of F(P) seen in the stream
  std::optional<std::size_t> min_forbidden_degree;
  std::vector<SmoothnessViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Checks heredity, non-triviality, the F(P) characterizations, the degree
/// bound at critical vertices against the declared r, and additivity (when
/// declared) over a stream of hypergraphs. Violations are returned as data.
SmoothnessReport verify_smooth(const Property& p, const std::vector<Hypergraph>& stream);

Json to_json(const SmoothnessReport& r);

}  // namespace hgc
