#include "hgc/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "hgc/errors.hpp"
#include "hgc/io.hpp"
#include "hgc/structure.hpp"

namespace hgc {

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
  std::size_t seed = f.order * 0x9e3779b97f4a7c15ULL;
  for (VertexMask e : f.edges) seed ^= std::hash<VertexMask>{}(e) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

namespace {

using Cells = std::vector<std::size_t>;  // color rank per vertex

// Iterated refinement by the colors seen through incident edges. Colors are
// re-ranked by (old color, signature) so refinement only splits cells and
// keeps their relative order.
Cells refine(const Hypergraph& h, Cells colors) {
  const std::size_t n = h.order();
  std::size_t classes = std::set<std::size_t>(colors.begin(), colors.end()).size();
  while (true) {
    std::vector<std::vector<std::size_t>> sig(n);
    for (VertexIndex v = 0; v < n; ++v) {
      std::vector<std::vector<std::size_t>> around;
      for (VertexMask e : h.edges()) {
        if (!contains(e, v)) continue;
        std::vector<std::size_t> seen{popcount(e)};
        for_each_vertex(e & ~bit(v), [&](VertexIndex u) { seen.push_back(colors[u]); });
        std::sort(seen.begin() + 1, seen.end());
        around.push_back(std::move(seen));
      }
      std::sort(around.begin(), around.end());
      sig[v].push_back(colors[v]);
      for (auto& a : around) {
        sig[v].push_back(a.size());
        sig[v].insert(sig[v].end(), a.begin(), a.end());
      }
    }
    std::map<std::vector<std::size_t>, std::size_t> rank;
    for (auto& s : sig) rank.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [s, r] : rank) r = next++;
    for (VertexIndex v = 0; v < n; ++v) colors[v] = rank[sig[v]];
    if (rank.size() == classes) return colors;
    classes = rank.size();
  }
}

struct CanonicalSearch {
  const Hypergraph& h;
  std::optional<CanonicalForm> best;
  std::vector<std::vector<VertexIndex>> best_labelings;
  bool want_automorphisms = false;

  void visit(Cells colors) {
    colors = refine(h, std::move(colors));
    const std::size_t n = h.order();
    std::vector<std::size_t> count(n, 0);
    for (std::size_t c : colors) ++count[c];
    auto target = std::find_if(count.begin(), count.end(), [](std::size_t k) { return k > 1; });
    if (target == count.end()) {
      leaf(colors);
      return;
    }
    const std::size_t cell = static_cast<std::size_t>(target - count.begin());
    for (VertexIndex v = 0; v < n; ++v) {
      if (colors[v] != cell) continue;
      Cells split = colors;
      for (VertexIndex u = 0; u < n; ++u) {
        if (split[u] > cell || (split[u] == cell && u != v)) ++split[u];
      }
      visit(std::move(split));
    }
  }

  void leaf(const Cells& label) {
    CanonicalForm f{h.order(), {}};
    f.edges.reserve(h.size());
    for (VertexMask e : h.edges()) {
      VertexMask m = 0;
      for_each_vertex(e, [&](VertexIndex v) { m |= bit(label[v]); });
      f.edges.push_back(m);
    }
    std::sort(f.edges.begin(), f.edges.end());
    if (!best || f < *best) {
      best = std::move(f);
      best_labelings.clear();
      best_labelings.push_back(label);
    } else if (want_automorphisms && f == *best) {
      best_labelings.push_back(label);
    }
  }
};

CanonicalSearch run_canonical(const Hypergraph& h, bool automorphisms) {
  if (h.order() > kMaxCanonicalOrder) {
    throw BudgetExceeded("canonical form is limited to " + std::to_string(kMaxCanonicalOrder) + " vertices");
  }
  CanonicalSearch s{h, std::nullopt, {}, automorphisms};
  s.visit(Cells(h.order(), 0));
  return s;
}

VertexMask permute(VertexMask m, const std::vector<VertexIndex>& perm) {
  VertexMask out = 0;
  for_each_vertex(m, [&](VertexIndex v) { out |= bit(perm[v]); });
  return out;
}

bool connected_masks(std::size_t n, const std::vector<VertexMask>& edges) {
  if (n == 0) return false;
  VertexMask reached = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (VertexMask e : edges) {
      if ((e & reached) && !is_subset(e, reached)) {
        reached |= e;
        grew = true;
      }
    }
  }
  return reached == full_mask(n);
}

void validate(const EnumerationBounds& b) {
  if (b.max_edge_size < 2) throw DomainError("max_edge_size must be at least 2");
  if (b.max_multiplicity == 0) throw DomainError("max_multiplicity must be at least 1");
  if (b.min_order > b.max_order) throw DomainError("min_order exceeds max_order");
  if (b.max_order > kMaxEnumerationOrder) {
    throw BudgetExceeded("enumeration is limited to order " + std::to_string(kMaxEnumerationOrder));
  }
}

}  // namespace

CanonicalForm canonical_form(const Hypergraph& h) { return *run_canonical(h, false).best; }

Hypergraph canonical_hypergraph(const CanonicalForm& f) {
  return Hypergraph::from_masks(default_vertex_names(f.order), f.edges);
}

std::string canonical_string(const Hypergraph& h) { return to_canonical_string(canonical_hypergraph(canonical_form(h))); }

std::vector<std::vector<VertexIndex>> automorphisms(const Hypergraph& h) {
  CanonicalSearch s = run_canonical(h, true);
  const std::size_t n = h.order();
  std::vector<VertexIndex> inverse0(n);
  for (VertexIndex v = 0; v < n; ++v) inverse0[s.best_labelings[0][v]] = v;
  std::vector<std::vector<VertexIndex>> out;
  for (const auto& label : s.best_labelings) {
    std::vector<VertexIndex> g(n);
    for (VertexIndex v = 0; v < n; ++v) g[v] = inverse0[label[v]];
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_hypergraph(const EnumerationBounds& b, const std::function<void(const Hypergraph&)>& fn) {
  validate(b);
  const std::size_t mult = b.simple_only ? 1 : b.max_multiplicity;
  for (std::size_t n = b.min_order; n <= b.max_order; ++n) {
    if (n == 0) {
      if (!b.connected_only) fn(Hypergraph{});
      continue;
    }
    std::vector<VertexMask> types;
    for (VertexMask m = 1; m <= full_mask(n); ++m) {
      std::size_t k = popcount(m);
      if (k >= 2 && k <= b.max_edge_size) types.push_back(m);
    }
    std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
    std::vector<VertexMask> edges;
    std::vector<std::size_t> deg(n, 0);

    auto leaf = [&] {
      // Every class has a labeling with non-increasing degrees.
      for (std::size_t v = 1; v < n; ++v) {
        if (deg[v] > deg[v - 1]) return;
      }
      if (deg[n - 1] < b.min_degree) return;
      if (b.connected_only && !connected_masks(n, edges)) return;
      seen.insert(canonical_form(Hypergraph::from_masks(default_vertex_names(n), edges)));
    };
    auto rec = [&](auto&& self, std::size_t t) -> void {
      if (t == types.size()) {
        leaf();
        return;
      }
      self(self, t + 1);
      std::size_t added = 0;
      while (added < mult && edges.size() < b.max_edges) {
        edges.push_back(types[t]);
        for_each_vertex(types[t], [&](VertexIndex v) { ++deg[v]; });
        ++added;
        self(self, t + 1);
      }
      for (; added > 0; --added) {
        edges.pop_back();
        for_each_vertex(types[t], [&](VertexIndex v) { --deg[v]; });
      }
    };
    rec(rec, 0);

    std::vector<CanonicalForm> forms(seen.begin(), seen.end());
    std::sort(forms.begin(), forms.end(), [](const CanonicalForm& x, const CanonicalForm& y) {
      if (x.edges.size() != y.edges.size()) return x.edges.size() < y.edges.size();
      return x.edges < y.edges;
    });
    for (const auto& f : forms) fn(canonical_hypergraph(f));
  }
}

std::vector<Hypergraph> enum_hypergraphs(const EnumerationBounds& b) {
  std::vector<Hypergraph> out;
  for_each_hypergraph(b, [&](const Hypergraph& h) { out.push_back(h); });
  return out;
}

bool for_each_list_support(std::size_t n, VertexMask active, const std::vector<std::size_t>& sizes,
                           const std::function<bool(const std::vector<VertexMask>&)>& fn) {
  if (sizes.size() != n) throw DomainError("one list size per vertex is required");
  active &= full_mask(n);
  std::vector<std::size_t> deficit(n, 0);
  for_each_vertex(active, [&](VertexIndex v) { deficit[v] = sizes[v]; });
  std::vector<VertexMask> supports;

  // The lowest vertex u that still misses colors must get all of them from
  // supports whose lowest vertex is u, chosen as a non-decreasing run.
  auto outer = [&](auto&& self) -> bool {
    VertexIndex u = 0;
    while (u < n && deficit[u] == 0) ++u;
    if (u == n) return fn(supports);
    VertexMask avail = 0;
    for (VertexIndex w = u + 1; w < n; ++w) {
      if (deficit[w] > 0) avail |= bit(w);
    }
    std::vector<VertexMask> candidates;
    for (VertexMask s = avail;; s = (s - 1) & avail) {
      candidates.push_back(bit(u) | s);
      if (s == 0) break;
    }
    std::sort(candidates.begin(), candidates.end());

    auto inner = [&](auto&& again, std::size_t remaining, std::size_t from) -> bool {
      if (remaining == 0) return self(self);
      for (std::size_t j = from; j < candidates.size(); ++j) {
        VertexMask m = candidates[j];
        bool fits = true;
        for_each_vertex(m, [&](VertexIndex w) { fits = fits && deficit[w] > 0; });
        if (!fits) continue;
        for_each_vertex(m, [&](VertexIndex w) { --deficit[w]; });
        supports.push_back(m);
        bool go_on = again(again, remaining - 1, j);
        supports.pop_back();
        for_each_vertex(m, [&](VertexIndex w) { ++deficit[w]; });
        if (!go_on) return false;
      }
      return true;
    };
    return inner(inner, deficit[u], 0);
  };
  return outer(outer);
}

std::vector<ListAssignment> enum_list_assignments(const Hypergraph& h, std::size_t k, const ChoosabilityGuard& guard) {
  if (h.order() > guard.max_order || k > guard.max_k) {
    throw BudgetExceeded("list assignment enumeration beyond the guard");
  }
  std::vector<ListAssignment> out;
  for_each_list_support(h.order(), h.all(), std::vector<std::size_t>(h.order(), k),
                        [&](const std::vector<VertexMask>& s) {
                          out.push_back(ListAssignment::from_supports(h.order(), s));
                          return true;
                        });
  return out;
}

std::vector<CriticalInstance> search_critical(const Property& p, std::size_t k, EnumerationBounds b,
                                              const ChoosabilityGuard& guard) {
  if (k == 0) throw DomainError("list size must be at least 1");
  if (b.max_order > guard.max_order || k > guard.max_k) {
    throw BudgetExceeded("critical search beyond the guard");
  }
  b.connected_only = true;
  std::vector<CriticalInstance> out;
  for_each_hypergraph(b, [&](const Hypergraph& h) {
    const std::size_t n = h.order();
    auto aut = automorphisms(h);
    ListColoringSearch search(h, p);
    for_each_list_support(n, h.all(), std::vector<std::size_t>(n, k), [&](const std::vector<VertexMask>& s) {
      std::vector<VertexMask> key = s;
      std::sort(key.begin(), key.end());
      for (const auto& g : aut) {
        std::vector<VertexMask> image;
        image.reserve(s.size());
        for (VertexMask m : s) image.push_back(permute(m, g));
        std::sort(image.begin(), image.end());
        if (image < key) return true;
      }
      ListAssignment l = ListAssignment::from_supports(n, s);
      if (search.colorable(l)) return true;
      for (VertexIndex v = 0; v < n; ++v) {
        if (!search.colorable(l, h.all() & ~bit(v))) return true;
      }
      out.push_back({h, std::move(l)});
      return true;
    });
  });
  return out;
}

void for_each_vector_function(const Hypergraph& h, std::size_t p, unsigned max_entry, bool degree_feasible_only,
                              const std::function<void(const VectorFunction&)>& fn) {
  if (p == 0) throw DomainError("vector functions need p >= 1");
  const std::size_t n = h.order();
  std::vector<std::vector<unsigned>> tuples;
  std::vector<unsigned> t(p, 0);
  while (true) {
    tuples.push_back(t);
    std::size_t i = 0;
    while (i < p && t[i] == max_entry) t[i++] = 0;
    if (i == p) break;
    ++t[i];
  }
  std::vector<std::vector<std::size_t>> allowed(n);
  for (VertexIndex v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < tuples.size(); ++j) {
      unsigned sum = std::accumulate(tuples[j].begin(), tuples[j].end(), 0U);
      if (!degree_feasible_only || sum >= h.degree(v)) allowed[v].push_back(j);
    }
    if (allowed[v].empty()) return;
  }
  std::vector<std::size_t> pos(n, 0);
  std::vector<std::vector<unsigned>> values(n);
  while (true) {
    for (VertexIndex v = 0; v < n; ++v) values[v] = tuples[allowed[v][pos[v]]];
    fn(VectorFunction(p, values));
    std::size_t v = 0;
    while (v < n && pos[v] + 1 == allowed[v].size()) pos[v++] = 0;
    if (v == n) break;
    ++pos[v];
  }
}

std::vector<Hypergraph> enum_block_trees(const std::vector<Hypergraph>& menu, std::size_t max_order,
                                         std::size_t max_blocks, std::size_t max_degree) {
  std::set<CanonicalForm> found;
  std::vector<CanonicalForm> layer;
  auto admit = [&](const CanonicalForm& f, std::vector<CanonicalForm>& next) {
    if (f.order > max_order) return;
    std::vector<std::size_t> deg(f.order, 0);
    for (VertexMask e : f.edges) for_each_vertex(e, [&](VertexIndex v) { ++deg[v]; });
    if (!deg.empty() && *std::max_element(deg.begin(), deg.end()) > max_degree) return;
    if (found.insert(f).second) next.push_back(f);
  };
  if (max_order >= 1 && max_blocks >= 1) found.insert(CanonicalForm{1, {}});
  if (max_blocks >= 1) {
    for (const auto& b : menu) admit(canonical_form(b), layer);
  }
  for (std::size_t blocks = 1; blocks < max_blocks && !layer.empty(); ++blocks) {
    std::vector<CanonicalForm> next;
    for (const auto& t : layer) {
      for (const auto& b : menu) {
        const std::size_t n = t.order + b.order() - 1;
        if (b.order() < 2 || n > max_order) continue;
        for (VertexIndex x = 0; x < t.order; ++x) {
          for (VertexIndex y = 0; y < b.order(); ++y) {
            std::vector<VertexIndex> map(b.order());
            VertexIndex fresh = static_cast<VertexIndex>(t.order);
            for (VertexIndex u = 0; u < b.order(); ++u) map[u] = u == y ? x : fresh++;
            std::vector<VertexMask> edges = t.edges;
            for (VertexMask e : b.edges()) edges.push_back(permute(e, map));
            admit(canonical_form(Hypergraph::from_masks(default_vertex_names(n), edges)), next);
          }
        }
      }
    }
    layer = std::move(next);
  }
  std::vector<Hypergraph> out;
  for (const auto& f : found) out.push_back(canonical_hypergraph(f));
  return out;
}

}  // namespace hgc
