#include "hgc/degeneracy.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "hgc/errors.hpp"

namespace hgc {

VectorFunction::VectorFunction(std::size_t p, std::vector<std::vector<unsigned>> values)
    : p_(p), values_(std::move(values)) {
  if (p_ == 0) throw DomainError("vector function needs p >= 1 coordinates");
  for (const auto& t : values_) {
    if (t.size() != p_) throw DomainError("vector function tuple has wrong length");
  }
}

VectorFunction VectorFunction::constant(std::size_t n, std::vector<unsigned> tuple) {
  const std::size_t p = tuple.size();
  return VectorFunction(p, std::vector<std::vector<unsigned>>(n, std::move(tuple)));
}

std::vector<unsigned> VectorFunction::component(std::size_t i) const {
  std::vector<unsigned> out;
  out.reserve(values_.size());
  for (const auto& t : values_) out.push_back(t.at(i));
  return out;
}

unsigned VectorFunction::sum(VertexIndex v) const {
  const auto& t = values_.at(v);
  return std::accumulate(t.begin(), t.end(), 0U);
}

bool is_partition_of(const Hypergraph& h, const Partition& p) {
  VertexMask seen = 0;
  for (VertexMask part : p.parts) {
    if ((part & seen) != 0 || !is_subset(part, h.all())) return false;
    seen |= part;
  }
  return seen == h.all();
}

bool is_strictly_h_degenerate(const Hypergraph& h, VertexMask within, std::span<const unsigned> bound) {
  if (bound.size() != h.order()) throw DomainError("degeneracy bound must be defined on every vertex");
  VertexMask alive = within & h.all();
  while (alive != 0) {
    VertexMask low = 0;
    for_each_vertex(alive, [&](VertexIndex v) {
      if (low == 0 && h.degree_within(v, alive) < bound[v]) low = bit(v);
    });
    if (low == 0) return false;
    alive &= ~low;
  }
  return true;
}

bool is_strictly_h_degenerate(const Hypergraph& h, std::span<const unsigned> bound) {
  return is_strictly_h_degenerate(h, h.all(), bound);
}

bool is_strictly_k_degenerate(const Hypergraph& h, unsigned k) {
  const std::vector<unsigned> bound(h.order(), k);
  return is_strictly_h_degenerate(h, bound);
}

bool degree_feasible(const Hypergraph& h, const VectorFunction& f) {
  if (f.order() != h.order()) throw DomainError("vector function must be defined on every vertex");
  for (VertexIndex v = 0; v < h.order(); ++v) {
    if (f.sum(v) < h.degree(v)) return false;
  }
  return true;
}

FPartitionSolver::FPartitionSolver(const Hypergraph& h) : h_(h) {
  const std::size_t n = h.order();
  if (n > kMaxOrder) throw BudgetExceeded("f-partition search is limited to " + std::to_string(kMaxOrder) + " vertices");
  const std::size_t subsets = std::size_t{1} << n;
  degree_.assign(subsets * n, 0);
  for (std::size_t s = 0; s < subsets; ++s) {
    for (VertexMask e : h.edges()) {
      if (!is_subset(e, s)) continue;
      for_each_vertex(e, [&](VertexIndex v) {
        auto& d = degree_[s * n + v];
        if (d < 255) ++d;
      });
    }
  }
}

std::vector<bool> FPartitionSolver::degenerate_sets(std::span<const unsigned> bound) const {
  const std::size_t n = h_.order();
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<bool> ok(subsets, false);
  ok[0] = true;
  for (std::size_t s = 1; s < subsets; ++s) {
    const std::uint8_t* deg = &degree_[s * n];
    bool found = false;
    for_each_vertex(s, [&](VertexIndex v) {
      if (!found && deg[v] < bound[v] && ok[s & ~bit(v)]) found = true;
    });
    ok[s] = found;
  }
  return ok;
}

std::optional<Partition> FPartitionSolver::solve(const VectorFunction& f) const {
  const std::size_t n = h_.order();
  if (f.order() != n) throw DomainError("vector function must be defined on every vertex");
  const std::size_t p = f.p();
  std::vector<std::vector<bool>> ok;
  ok.reserve(p);
  for (std::size_t i = 0; i < p; ++i) ok.push_back(degenerate_sets(f.component(i)));

  Partition part{std::vector<VertexMask>(p, 0)};
  std::function<bool(VertexIndex)> place = [&](VertexIndex v) {
    if (v == n) return true;
    for (std::size_t i = 0; i < p; ++i) {
      const VertexMask next = part.parts[i] | bit(v);
      if (!ok[i][next]) continue;
      part.parts[i] = next;
      if (place(v + 1)) return true;
      part.parts[i] &= ~bit(v);
    }
    return false;
  };
  if (place(0)) return part;
  return std::nullopt;
}

std::optional<Partition> find_f_partition(const Hypergraph& h, const VectorFunction& f) {
  return FPartitionSolver(h).solve(f);
}

// ---------------------------------------------------------------------------
// Hard pairs

namespace {

void compositions(std::size_t total, std::size_t parts, std::vector<unsigned>& cur,
                  std::vector<std::vector<unsigned>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(static_cast<unsigned>(total));
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::size_t k = 0; k <= total; ++k) {
    cur.push_back(static_cast<unsigned>(k));
    compositions(total - k, parts, cur, out);
    cur.pop_back();
  }
}

}  // namespace

HardPairRecognizer::HardPairRecognizer(const Hypergraph& h) : h_(h), decomposition_(blocks(h)) {
  if (h.empty()) throw DomainError("hard pairs need a non-empty hypergraph");
  if (!is_connected(h)) throw DomainError("hard pairs need a connected hypergraph");

  for (const Block& b : decomposition_.blocks) {
    BlockInfo info;
    info.vertices = b.vertices;
    info.degree.assign(h.order(), 0);
    for (EdgeIndex e : b.edges) for_each_vertex(h.edge(e), [&](VertexIndex v) { ++info.degree[v]; });
    info.brick = classify_brick(block_hypergraph(h, b));
    blocks_.push_back(std::move(info));
  }

  // Breadth-first walk of the block-cut tree from block 0.
  std::vector<bool> seen(blocks_.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  order_.push_back(0);
  attach_vertex_.push_back(0);
  while (!queue.empty()) {
    const std::size_t b = queue.front();
    queue.pop_front();
    for_each_vertex(blocks_[b].vertices & decomposition_.separating, [&](VertexIndex x) {
      for (std::size_t other : decomposition_.block_adjacency.at(x)) {
        if (seen[other]) continue;
        seen[other] = true;
        order_.push_back(other);
        attach_vertex_.push_back(x);
        queue.push_back(other);
      }
    });
  }
}

std::vector<HardPairRecognizer::Option> HardPairRecognizer::options_for(const BlockInfo& block, std::size_t p) const {
  using Kind = HardPairCertificate::Kind;
  std::vector<Option> out;
  for (std::size_t j = 0; j < p; ++j) out.push_back(Option{Kind::Monoblock, j, 0, {}});
  if (block.brick.kind == BrickKind::CompleteMultiple && block.brick.n >= 3) {
    std::vector<std::vector<unsigned>> splits;
    std::vector<unsigned> cur;
    compositions(block.brick.n - 1, p, cur, splits);
    for (auto& s : splits) {
      if (std::count_if(s.begin(), s.end(), [](unsigned x) { return x != 0; }) >= 2) {
        out.push_back(Option{Kind::Complete, 0, 0, std::move(s)});
      }
    }
  }
  if (block.brick.kind == BrickKind::OddCycleMultiple) {
    for (std::size_t k = 0; k < p; ++k) {
      for (std::size_t l = k + 1; l < p; ++l) out.push_back(Option{Kind::OddCycle, k, l, {}});
    }
  }
  return out;
}

std::vector<unsigned> HardPairRecognizer::contribution(const BlockInfo& block, const Option& o, VertexIndex v,
                                                       std::size_t p) const {
  using Kind = HardPairCertificate::Kind;
  std::vector<unsigned> c(p, 0);
  const auto t = static_cast<unsigned>(block.brick.t);
  switch (o.kind) {
    case Kind::Monoblock:
      c[o.a] = static_cast<unsigned>(block.degree[v]);
      break;
    case Kind::Complete:
      for (std::size_t i = 0; i < p; ++i) c[i] = t * o.split[i];
      break;
    case Kind::OddCycle:
      c[o.a] = t;
      c[o.b] = t;
      break;
    case Kind::Merge:
      break;
  }
  return c;
}

HardPairCertificate HardPairRecognizer::leaf(const BlockInfo& block, const Option& o) const {
  HardPairCertificate c;
  c.kind = o.kind;
  c.vertices = block.vertices;
  switch (o.kind) {
    case HardPairCertificate::Kind::Monoblock:
      c.coordinate = o.a;
      break;
    case HardPairCertificate::Kind::Complete:
      c.t = block.brick.t;
      c.n = block.brick.n;
      c.split = o.split;
      break;
    case HardPairCertificate::Kind::OddCycle:
      c.t = block.brick.t;
      c.n = block.brick.n;
      c.first = o.a;
      c.second = o.b;
      break;
    case HardPairCertificate::Kind::Merge:
      break;
  }
  return c;
}

std::optional<HardPairCertificate> HardPairRecognizer::recognize(const VectorFunction& f) const {
  const std::size_t n = h_.order();
  if (f.order() != n) throw DomainError("vector function must be defined on every vertex");
  const std::size_t p = f.p();

  // Contributions add up to f and each block type contributes its degree sum,
  // so a hard pair is tight at every vertex.
  for (VertexIndex v = 0; v < n; ++v) {
    if (f.sum(v) != h_.degree(v)) return std::nullopt;
  }

  const VertexMask sep = decomposition_.separating;
  std::vector<std::vector<Option>> viable(blocks_.size());
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (Option& o : options_for(blocks_[b], p)) {
      bool fits = true;
      for_each_vertex(blocks_[b].vertices, [&](VertexIndex v) {
        if (!fits) return;
        const auto c = contribution(blocks_[b], o, v, p);
        for (std::size_t i = 0; i < p && fits; ++i) {
          fits = contains(sep, v) ? c[i] <= f.coordinate(v, i) : c[i] == f.coordinate(v, i);
        }
      });
      if (fits) viable[b].push_back(std::move(o));
    }
    if (viable[b].empty()) return std::nullopt;
  }

  // residual[v] = what separating vertex v still needs from unassigned blocks.
  std::vector<std::vector<unsigned>> residual(n);
  std::vector<std::size_t> pending(n, 0);
  for_each_vertex(sep, [&](VertexIndex v) {
    residual[v] = f.at(v);
    pending[v] = decomposition_.block_adjacency.at(v).size();
  });

  std::vector<std::size_t> choice(order_.size(), 0);
  std::function<bool(std::size_t)> assign = [&](std::size_t pos) {
    if (pos == order_.size()) return true;
    const BlockInfo& block = blocks_[order_[pos]];
    const auto& opts = viable[order_[pos]];
    for (std::size_t k = 0; k < opts.size(); ++k) {
      bool fits = true;
      for_each_vertex(block.vertices & sep, [&](VertexIndex v) {
        if (!fits) return;
        const auto c = contribution(block, opts[k], v, p);
        for (std::size_t i = 0; i < p && fits; ++i) {
          fits = c[i] <= residual[v][i] && (pending[v] > 1 || c[i] == residual[v][i]);
        }
      });
      if (!fits) continue;
      for_each_vertex(block.vertices & sep, [&](VertexIndex v) {
        const auto c = contribution(block, opts[k], v, p);
        for (std::size_t i = 0; i < p; ++i) residual[v][i] -= c[i];
        --pending[v];
      });
      choice[pos] = k;
      if (assign(pos + 1)) return true;
      for_each_vertex(block.vertices & sep, [&](VertexIndex v) {
        const auto c = contribution(block, opts[k], v, p);
        for (std::size_t i = 0; i < p; ++i) residual[v][i] += c[i];
        ++pending[v];
      });
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;

  HardPairCertificate cert = leaf(blocks_[order_[0]], viable[order_[0]][choice[0]]);
  for (std::size_t pos = 1; pos < order_.size(); ++pos) {
    HardPairCertificate merged;
    merged.kind = HardPairCertificate::Kind::Merge;
    merged.merge_vertex = attach_vertex_[pos];
    HardPairCertificate next = leaf(blocks_[order_[pos]], viable[order_[pos]][choice[pos]]);
    merged.vertices = cert.vertices | next.vertices;
    merged.parts.push_back(std::move(cert));
    merged.parts.push_back(std::move(next));
    cert = std::move(merged);
  }
  return cert;
}

std::optional<HardPairCertificate> classify_hard_pair(const Hypergraph& h, const VectorFunction& f) {
  return HardPairRecognizer(h).recognize(f);
}

// ---------------------------------------------------------------------------
// Independent certificate validation

namespace {

struct Carrier {
  VertexMask vertices = 0;
  std::vector<EdgeIndex> edges;                 // sorted
  std::vector<std::vector<unsigned>> function;  // indexed by vertex of H, empty outside the carrier
};

std::optional<Carrier> check_node(const Hypergraph& h, std::size_t p, const HardPairCertificate& c) {
  using Kind = HardPairCertificate::Kind;
  if (c.kind == Kind::Merge) {
    if (c.parts.size() != 2) return std::nullopt;
    auto left = check_node(h, p, c.parts[0]);
    auto right = check_node(h, p, c.parts[1]);
    if (!left || !right) return std::nullopt;
    if ((left->vertices & right->vertices) != bit(c.merge_vertex)) return std::nullopt;
    Carrier out;
    out.vertices = left->vertices | right->vertices;
    if (out.vertices != c.vertices) return std::nullopt;
    std::set_union(left->edges.begin(), left->edges.end(), right->edges.begin(), right->edges.end(),
                   std::back_inserter(out.edges));
    if (out.edges.size() != left->edges.size() + right->edges.size()) return std::nullopt;
    out.function.assign(h.order(), {});
    for_each_vertex(out.vertices, [&](VertexIndex v) {
      if (v == c.merge_vertex) {
        std::vector<unsigned> sum(p);
        for (std::size_t i = 0; i < p; ++i) sum[i] = left->function[v][i] + right->function[v][i];
        out.function[v] = std::move(sum);
      } else {
        out.function[v] = contains(left->vertices, v) ? left->function[v] : right->function[v];
      }
    });
    return out;
  }

  if (c.vertices == 0 || !is_subset(c.vertices, h.all())) return std::nullopt;
  const Hypergraph block = induced(h, c.vertices);
  Carrier out;
  out.vertices = c.vertices;
  for (EdgeIndex e = 0; e < h.size(); ++e) {
    if (is_subset(h.edge(e), c.vertices)) out.edges.push_back(e);
  }
  out.function.assign(h.order(), {});
  std::vector<std::vector<unsigned>> local(block.order(), std::vector<unsigned>(p, 0));

  switch (c.kind) {
    case Kind::Monoblock: {
      if (!is_connected(block) || separating_vertices(block) != 0 || c.coordinate >= p) return std::nullopt;
      for (VertexIndex v = 0; v < block.order(); ++v) local[v][c.coordinate] = static_cast<unsigned>(block.degree(v));
      break;
    }
    case Kind::Complete: {
      const auto brick = classify_brick(block);
      if (brick.kind != BrickKind::CompleteMultiple || brick.n < 3 || brick.t != c.t || brick.n != c.n) {
        return std::nullopt;
      }
      if (c.split.size() != p) return std::nullopt;
      const auto total = std::accumulate(c.split.begin(), c.split.end(), 0U);
      const auto nonzero = std::count_if(c.split.begin(), c.split.end(), [](unsigned x) { return x != 0; });
      if (total != c.n - 1 || nonzero < 2) return std::nullopt;
      for (auto& t : local) {
        for (std::size_t i = 0; i < p; ++i) t[i] = static_cast<unsigned>(c.t) * c.split[i];
      }
      break;
    }
    case Kind::OddCycle: {
      if (!is_connected(block)) return std::nullopt;
      const auto brick = classify_brick(block);
      if (brick.kind != BrickKind::OddCycleMultiple || brick.n < 5 || brick.n % 2 == 0 || brick.t != c.t ||
          brick.n != c.n) {
        return std::nullopt;
      }
      if (c.first == c.second || c.first >= p || c.second >= p) return std::nullopt;
      for (auto& t : local) {
        t[c.first] = static_cast<unsigned>(c.t);
        t[c.second] = static_cast<unsigned>(c.t);
      }
      break;
    }
    case Kind::Merge:
      return std::nullopt;
  }
  std::size_t i = 0;
  for_each_vertex(c.vertices, [&](VertexIndex v) { out.function[v] = local[i++]; });
  return out;
}

}  // namespace

bool validate_certificate(const Hypergraph& h, const VectorFunction& f, const HardPairCertificate& cert) {
  if (f.order() != h.order()) return false;
  std::optional<Carrier> root;
  try {
    root = check_node(h, f.p(), cert);
  } catch (const DomainError&) {
    return false;  // e.g. a leaf carrier that is not connected
  }
  if (!root || root->vertices != h.all() || root->edges.size() != h.size()) return false;
  for (VertexIndex v = 0; v < h.order(); ++v) {
    if (root->function[v] != f.at(v)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// JSON

Json to_json(const Hypergraph& h, const VectorFunction& f) {
  Json j = Json::object();
  for (VertexIndex v = 0; v < h.order(); ++v) j[h.vertex(v)] = f.at(v);
  return j;
}

VectorFunction vector_function_from_json(const Hypergraph& h, const Json& j) {
  if (!j.is_object()) throw ConstructionError("vector function must be a JSON object");
  std::vector<std::vector<unsigned>> values(h.order());
  std::size_t p = 0;
  for (const auto& [id, tuple] : j.items()) {
    auto v = h.find(id);
    if (!v) throw ConstructionError("vector function mentions unknown vertex '" + id + "'");
    if (!tuple.is_array() || tuple.empty()) throw ConstructionError("vector function values must be non-empty arrays");
    for (const auto& x : tuple) {
      if (!x.is_number_integer() || x.get<long long>() < 0) {
        throw ConstructionError("vector function entries must be non-negative integers");
      }
      values[*v].push_back(x.get<unsigned>());
    }
    if (p == 0) p = values[*v].size();
    if (values[*v].size() != p) throw ConstructionError("vector function tuples differ in length");
  }
  for (VertexIndex v = 0; v < h.order(); ++v) {
    if (values[v].empty()) throw ConstructionError("vector function misses vertex '" + h.vertex(v) + "'");
  }
  return VectorFunction(p, std::move(values));
}

Json to_json(const Hypergraph& h, const Partition& p) {
  Json parts = Json::array();
  for (VertexMask part : p.parts) parts.push_back(h.names(part));
  return parts;
}

Json to_json(const Hypergraph& h, const HardPairCertificate& c) {
  Json j;
  switch (c.kind) {
    case HardPairCertificate::Kind::Monoblock:
      j["type"] = "M";
      j["coordinate"] = c.coordinate + 1;
      break;
    case HardPairCertificate::Kind::Complete:
      j["type"] = "K";
      j["t"] = c.t;
      j["n"] = c.n;
      j["split"] = c.split;
      break;
    case HardPairCertificate::Kind::OddCycle:
      j["type"] = "C";
      j["t"] = c.t;
      j["n"] = c.n;
      j["pair"] = {c.first + 1, c.second + 1};
      break;
    case HardPairCertificate::Kind::Merge:
      j["type"] = "Merge";
      j["vertex"] = h.vertex(c.merge_vertex);
      j["left"] = to_json(h, c.parts.at(0));
      j["right"] = to_json(h, c.parts.at(1));
      break;
  }
  j["vertices"] = h.names(c.vertices);
  return j;
}

}  // namespace hgc
