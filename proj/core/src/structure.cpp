#include "hgc/structure.hpp"

#include <algorithm>
#include <numeric>

#include "hgc/errors.hpp"

namespace hgc {

std::vector<VertexMask> components(const Hypergraph& h, VertexMask within) {
  std::vector<VertexMask> out;
  VertexMask rest = within & h.all();
  while (rest != 0) {
    VertexMask comp = rest & (~rest + 1);
    for (bool grown = true; grown;) {
      grown = false;
      for (VertexMask e : h.edges()) {
        if ((e & comp) != 0 && is_subset(e, within) && !is_subset(e, comp)) {
          comp |= e;
          grown = true;
        }
      }
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

std::vector<VertexMask> components(const Hypergraph& h) { return components(h, h.all()); }

bool is_connected(const Hypergraph& h) { return components(h).size() == 1; }

VertexMask separating_vertices(const Hypergraph& h) {
  const std::size_t base = components(h).size();
  VertexMask out = 0;
  for (VertexIndex v = 0; v < h.order(); ++v) {
    if (components(shrink_remove(h, bit(v))).size() > base) out |= bit(v);
  }
  return out;
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

// Hopcroft-Tarjan biconnected components on the bipartite incidence graph.
// Nodes 0..n-1 are vertices, n..n+m-1 are edges. Each component is reported
// as the list of incidence pairs (vertex, edge) it contains.
class IncidenceBiconnectivity {
 public:
  explicit IncidenceBiconnectivity(const Hypergraph& h)
      : h_(h), n_(h.order()), adj_(h.order() + h.size()), disc_(adj_.size(), 0), low_(adj_.size(), 0) {
    for (EdgeIndex e = 0; e < h.size(); ++e) {
      for_each_vertex(h.edge(e), [&](VertexIndex v) {
        adj_[v].push_back(n_ + e);
        adj_[n_ + e].push_back(v);
      });
    }
    for (std::size_t s = 0; s < adj_.size(); ++s) {
      if (disc_[s] == 0 && !adj_[s].empty()) dfs(s, adj_.size());
    }
  }

  std::vector<std::vector<std::pair<VertexIndex, EdgeIndex>>> components;

 private:
  void dfs(std::size_t u, std::size_t parent) {
    disc_[u] = low_[u] = ++timer_;
    for (std::size_t w : adj_[u]) {
      if (w == parent) continue;
      if (disc_[w] == 0) {
        stack_.emplace_back(u, w);
        dfs(w, u);
        low_[u] = std::min(low_[u], low_[w]);
        if (low_[w] >= disc_[u]) pop_component(u, w);
      } else if (disc_[w] < disc_[u]) {
        stack_.emplace_back(u, w);
        low_[u] = std::min(low_[u], disc_[w]);
      }
    }
  }

  void pop_component(std::size_t u, std::size_t w) {
    std::vector<std::pair<VertexIndex, EdgeIndex>> comp;
    while (true) {
      auto [a, b] = stack_.back();
      stack_.pop_back();
      comp.push_back(a < n_ ? std::pair{a, b - n_} : std::pair{b, a - n_});
      if (a == u && b == w) break;
    }
    components.push_back(std::move(comp));
  }

  const Hypergraph& h_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> disc_;
  std::vector<std::size_t> low_;
  std::size_t timer_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> stack_;
};

}  // namespace

BlockDecomposition blocks(const Hypergraph& h) {
  IncidenceBiconnectivity bcc(h);

  // Incidence components sharing a hyperedge belong to the same block.
  UnionFind uf(h.size());
  for (const auto& comp : bcc.components) {
    for (const auto& [v, e] : comp) uf.unite(e, comp.front().second);
  }

  BlockDecomposition d;
  std::map<std::size_t, Block> by_root;
  for (EdgeIndex e = 0; e < h.size(); ++e) {
    Block& b = by_root[uf.find(e)];
    b.vertices |= h.edge(e);
    b.edges.push_back(e);
  }
  for (auto& [root, b] : by_root) d.blocks.push_back(std::move(b));
  for (VertexIndex v = 0; v < h.order(); ++v) {
    if (h.degree(v) == 0) d.blocks.push_back(Block{bit(v), {}});
  }
  std::sort(d.blocks.begin(), d.blocks.end(), [](const Block& a, const Block& b) {
    const auto la = std::countr_zero(a.vertices);
    const auto lb = std::countr_zero(b.vertices);
    return la != lb ? la < lb : a.vertices < b.vertices;
  });

  std::vector<std::size_t> count(h.order(), 0);
  for (const Block& b : d.blocks) for_each_vertex(b.vertices, [&](VertexIndex v) { ++count[v]; });
  for (VertexIndex v = 0; v < h.order(); ++v) {
    if (count[v] >= 2) d.separating |= bit(v);
  }
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    for_each_vertex(d.blocks[i].vertices & d.separating, [&](VertexIndex v) { d.block_adjacency[v].push_back(i); });
  }
  return d;
}

Hypergraph block_hypergraph(const Hypergraph& h, const Block& b) { return induced(h, b.vertices); }

bool is_bridge(const Hypergraph& h, EdgeIndex e) {
  if (e >= h.size()) throw DomainError("unknown edge " + std::to_string(e));
  const std::size_t before = components(h).size();
  const std::size_t after = components(remove_edge(h, e)).size();
  return after == before + h.edge_size(e) - 1;
}

BrickClassification classify_brick(const Hypergraph& h) {
  if (h.empty()) throw DomainError("classify_brick: empty hypergraph");
  if (!is_connected(h)) throw DomainError("classify_brick: hypergraph is disconnected");
  const std::size_t n = h.order();
  if (n == 1) return {BrickKind::CompleteMultiple, 1, 1};
  if (!is_graph(h)) return {};

  std::map<VertexMask, std::size_t> mult;
  for (VertexMask e : h.edges()) ++mult[e];
  const std::size_t t = mult.begin()->second;
  for (const auto& [e, m] : mult) {
    if (m != t) return {};
  }
  const std::size_t pairs = mult.size();
  if (pairs == n * (n - 1) / 2) return {BrickKind::CompleteMultiple, t, n};

  // Connected simple quotient with n edges and all degrees 2 is the cycle C_n.
  if (pairs == n && n % 2 == 1 && n >= 5 &&
      std::all_of(h.degrees().begin(), h.degrees().end(), [t](std::size_t d) { return d == 2 * t; })) {
    return {BrickKind::OddCycleMultiple, t, n};
  }
  return {};
}

Hypergraph trim_end_block(const Hypergraph& t, const BlockDecomposition& d, std::size_t block) {
  if (block >= d.blocks.size()) throw DomainError("trim_end_block: unknown block");
  if (!d.is_end_block(block)) throw DomainError("trim_end_block: block is not an end-block");
  const VertexMask bv = d.blocks[block].vertices;
  VertexMask x = bv & d.separating;
  if (d.blocks.size() == 1) {
    x = bit(static_cast<VertexIndex>(std::countr_zero(t.all())));
  } else if (x == 0) {
    x = bv & (~bv + 1);
  }
  return remove(t, bv & ~x);
}

}  // namespace hgc
