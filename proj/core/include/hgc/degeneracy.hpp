#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hgc/hypergraph.hpp"
#include "hgc/io.hpp"
#include "hgc/structure.hpp"

namespace hgc {

/// f : V(H) -> N_0^p, stored per vertex index.
class VectorFunction {
 public:
  VectorFunction() = default;
  VectorFunction(std::size_t p, std::vector<std::vector<unsigned>> values);
  /// The same tuple at every one of n vertices.
  static VectorFunction constant(std::size_t n, std::vector<unsigned> tuple);

  std::size_t p() const noexcept { return p_; }
  std::size_t order() const noexcept { return values_.size(); }
  const std::vector<unsigned>& at(VertexIndex v) const { return values_.at(v); }
  unsigned coordinate(VertexIndex v, std::size_t i) const { return values_.at(v).at(i); }
  /// f_i as a per-vertex vector.
  std::vector<unsigned> component(std::size_t i) const;
  unsigned sum(VertexIndex v) const;

  friend bool operator==(const VectorFunction&, const VectorFunction&) = default;

 private:
  std::size_t p_ = 0;
  std::vector<std::vector<unsigned>> values_;
};

/// A p-partition as one vertex mask per part. Parts may be empty.
struct Partition {
  std::vector<VertexMask> parts;

  friend bool operator==(const Partition&, const Partition&) = default;
};

bool is_partition_of(const Hypergraph& h, const Partition& p);

/// Greedy elimination: repeatedly delete the smallest vertex v whose current
/// degree is below h(v). Succeeds iff the hypergraph empties.
bool is_strictly_h_degenerate(const Hypergraph& h, std::span<const unsigned> bound);
/// Same test on H[within].
bool is_strictly_h_degenerate(const Hypergraph& h, VertexMask within, std::span<const unsigned> bound);
bool is_strictly_k_degenerate(const Hypergraph& h, unsigned k);

/// Σ_i f_i(v) >= d_H(v) at every vertex.
bool degree_feasible(const Hypergraph& h, const VectorFunction& f);

/// Exhaustive f-partition search. For every coordinate the family of vertex
/// sets inducing a strictly f_i-degenerate hypergraph is tabulated once
/// (it is closed under subsets); a backtracking assignment of vertices to
/// parts then prunes any partial part that already left its family.
///
/// The solver keeps per-subset degree tables for one hypergraph so repeated
/// queries with different f are cheap.
class FPartitionSolver {
 public:
  /// Throws BudgetExceeded above kMaxOrder vertices.
  explicit FPartitionSolver(const Hypergraph& h);

  std::optional<Partition> solve(const VectorFunction& f) const;

  static constexpr std::size_t kMaxOrder = 16;

 private:
  std::vector<bool> degenerate_sets(std::span<const unsigned> bound) const;

  const Hypergraph& h_;
  std::vector<std::uint8_t> degree_;  // degree_[S * n + v] = d_{H[S]}(v), clamped to 255
};

std::optional<Partition> find_f_partition(const Hypergraph& h, const VectorFunction& f);

/// Proof object for a hard pair. Leaves describe a single block of H:
/// Monoblock (type M), Complete (type K, tK_n) or OddCycle (type C, tC_n);
/// a Merge node glues two hard pairs at `merge_vertex`.
struct HardPairCertificate {
  enum class Kind { Monoblock, Complete, OddCycle, Merge };

  Kind kind = Kind::Monoblock;
  /// Vertices of the carrier hypergraph (for leaves: the block).
  VertexMask vertices = 0;
  std::size_t coordinate = 0;  // M, zero-based
  std::size_t t = 0;           // K, C
  std::size_t n = 0;           // K, C
  std::vector<unsigned> split; // K: n_1..n_p
  std::size_t first = 0;       // C: zero-based coordinates k < l
  std::size_t second = 0;
  VertexIndex merge_vertex = 0;
  std::vector<HardPairCertificate> parts;  // Merge: exactly two

  friend bool operator==(const HardPairCertificate&, const HardPairCertificate&) = default;
};

/// Recognizes hard pairs for a fixed connected hypergraph. The block
/// decomposition and block classifications are computed once; recognize()
/// then chooses one admissible type (M/K/C) per block so that the block
/// contributions add up to f at every separating vertex and equal f
/// elsewhere, and assembles a merge tree along the block-cut tree.
class HardPairRecognizer {
 public:
  /// Throws DomainError if h is empty or disconnected.
  explicit HardPairRecognizer(const Hypergraph& h);

  std::optional<HardPairCertificate> recognize(const VectorFunction& f) const;

 private:
  struct BlockInfo {
    VertexMask vertices = 0;
    std::vector<std::size_t> degree;  // per vertex index of H (0 outside the block)
    BrickClassification brick;
  };
  struct Option {
    HardPairCertificate::Kind kind;
    std::size_t a = 0, b = 0;     // M: coordinate; C: coordinate pair
    std::vector<unsigned> split;  // K
  };

  std::vector<Option> options_for(const BlockInfo& block, std::size_t p) const;
  std::vector<unsigned> contribution(const BlockInfo& block, const Option& o, VertexIndex v, std::size_t p) const;
  HardPairCertificate leaf(const BlockInfo& block, const Option& o) const;

  const Hypergraph& h_;
  BlockDecomposition decomposition_;
  std::vector<BlockInfo> blocks_;
  std::vector<std::size_t> order_;          // blocks in breadth-first order over the block-cut tree
  std::vector<VertexIndex> attach_vertex_;  // per position in order_ (unused for the root)
};

/// Throws DomainError when h is empty or disconnected.
std::optional<HardPairCertificate> classify_hard_pair(const Hypergraph& h, const VectorFunction& f);

/// Re-checks a certificate against H and f from first principles: every leaf
/// carrier is the claimed block type with the claimed function, every merge
/// glues two carriers sharing exactly the merge vertex, the contributions add
/// up at merge vertices, and the root carrier is all of H with function f.
bool validate_certificate(const Hypergraph& h, const VectorFunction& f, const HardPairCertificate& cert);

Json to_json(const Hypergraph& h, const VectorFunction& f);
VectorFunction vector_function_from_json(const Hypergraph& h, const Json& j);
Json to_json(const Hypergraph& h, const Partition& p);
/// Coordinates are reported one-based.
Json to_json(const Hypergraph& h, const HardPairCertificate& cert);

}  // namespace hgc
