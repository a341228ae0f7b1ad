#pragma once

#include <map>
#include <vector>

#include "hgc/hypergraph.hpp"

namespace hgc {

/// Vertex sets of the components of H[within], ordered by smallest vertex.
std::vector<VertexMask> components(const Hypergraph& h, VertexMask within);
std::vector<VertexMask> components(const Hypergraph& h);
bool is_connected(const Hypergraph& h);

/// Vertices v for which H ÷ v has more components than H.
VertexMask separating_vertices(const Hypergraph& h);

struct Block {
  VertexMask vertices = 0;
  std::vector<EdgeIndex> edges;

  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockDecomposition {
  /// Sorted by smallest contained vertex (ties by the full vertex mask).
  std::vector<Block> blocks;
  VertexMask separating = 0;
  /// separating vertex -> indices into `blocks` of the blocks containing it.
  std::map<VertexIndex, std::vector<std::size_t>> block_adjacency;

  std::size_t separating_count(std::size_t block) const { return popcount(blocks.at(block).vertices & separating); }
  bool is_end_block(std::size_t block) const { return separating_count(block) <= 1; }
};

/// Blocks of H. An isolated vertex forms a K_1 block. Computed from the
/// biconnected components of the vertex/edge incidence graph, glued along
/// shared hyperedges.
BlockDecomposition blocks(const Hypergraph& h);

/// The block as a hypergraph (blocks are induced subhypergraphs).
Hypergraph block_hypergraph(const Hypergraph& h, const Block& b);

/// True iff H - e has |i(e)| - 1 more components than H.
bool is_bridge(const Hypergraph& h, EdgeIndex e);

enum class BrickKind { CompleteMultiple, OddCycleMultiple, NotBrick };

struct BrickClassification {
  BrickKind kind = BrickKind::NotBrick;
  std::size_t t = 0;
  std::size_t n = 0;

  friend bool operator==(const BrickClassification&, const BrickClassification&) = default;
};

/// Recognizes tK_n (t >= 1, n >= 1) and tC_n (n >= 5 odd; C_3 is reported as K_3).
/// Throws DomainError for empty or disconnected input.
BrickClassification classify_brick(const Hypergraph& h);

/// T_B = T - (V(B) \ {x}) where x is the separating vertex in the end-block B,
/// or the smallest vertex of T when T has a single block.
Hypergraph trim_end_block(const Hypergraph& t, const BlockDecomposition& d, std::size_t block);

}  // namespace hgc
