#include "hgc/coloring.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hgc/degeneracy.hpp"
#include "hgc/enumerate.hpp"
#include "hgc/errors.hpp"

namespace hgc {

ListAssignment ListAssignment::constant(std::size_t n, std::vector<Color> colors) {
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  return ListAssignment{std::vector<std::vector<Color>>(n, colors)};
}

ListAssignment ListAssignment::from_supports(std::size_t n, const std::vector<VertexMask>& supports) {
  ListAssignment l{std::vector<std::vector<Color>>(n)};
  for (std::size_t c = 0; c < supports.size(); ++c) {
    for_each_vertex(supports[c] & full_mask(n), [&](VertexIndex v) { l.lists[v].push_back(static_cast<Color>(c + 1)); });
  }
  return l;
}

namespace {

void require_order(const Hypergraph& h, std::size_t n, const char* what) {
  if (n != h.order()) throw DomainError(std::string(what) + " does not cover exactly the vertices of H");
}

std::map<Color, VertexMask> color_classes(const Coloring& phi) {
  std::map<Color, VertexMask> classes;
  for (VertexIndex v = 0; v < phi.colors.size(); ++v) classes[phi.colors[v]] |= bit(v);
  return classes;
}

}  // namespace

bool is_P_coloring(const Hypergraph& h, const Property& p, const Coloring& phi) {
  require_order(h, phi.colors.size(), "coloring");
  for (const auto& [c, cls] : color_classes(phi)) {
    if (!p.contains(h, cls)) return false;
  }
  return true;
}

bool is_L_coloring(const ListAssignment& l, const Coloring& phi) {
  if (l.order() != phi.colors.size()) return false;
  for (VertexIndex v = 0; v < l.order(); ++v) {
    if (!std::binary_search(l.lists[v].begin(), l.lists[v].end(), phi.colors[v])) return false;
  }
  return true;
}

ListColoringSearch::ListColoringSearch(const Hypergraph& h, const Property& p) : h_(h), p_(p) {
  order_.resize(h.order());
  std::iota(order_.begin(), order_.end(), VertexIndex{0});
  std::stable_sort(order_.begin(), order_.end(),
                   [&](VertexIndex a, VertexIndex b) { return h.degree(a) > h.degree(b); });
}

namespace {

struct SearchState {
  const Hypergraph& h;
  const Property& p;
  std::vector<VertexIndex> seq;
  std::vector<std::vector<std::size_t>> options;  // dense color ids per position
  std::vector<VertexMask> classes;
  std::vector<std::size_t> chosen;

  bool run(std::size_t i) {
    if (i == seq.size()) return true;
    VertexIndex v = seq[i];
    for (std::size_t c : options[i]) {
      VertexMask grown = classes[c] | bit(v);
      if (!p.contains(h, grown)) continue;
      VertexMask saved = classes[c];
      classes[c] = grown;
      chosen[i] = c;
      if (run(i + 1)) return true;
      classes[c] = saved;
    }
    return false;
  }
};

}  // namespace

std::optional<PartialColoring> ListColoringSearch::solve(const ListAssignment& l, VertexMask active) const {
  require_order(h_, l.order(), "list assignment");
  active &= h_.all();
  std::vector<Color> palette;
  for_each_vertex(active, [&](VertexIndex v) { palette.insert(palette.end(), l.lists[v].begin(), l.lists[v].end()); });
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());

  SearchState s{h_, p_, {}, {}, std::vector<VertexMask>(palette.size(), 0), {}};
  for (VertexIndex v : order_) {
    if (!contains(active, v)) continue;
    s.seq.push_back(v);
    std::vector<std::size_t> opts;
    for (Color c : l.lists[v]) {
      opts.push_back(static_cast<std::size_t>(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin()));
    }
    std::sort(opts.begin(), opts.end());
    opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
    s.options.push_back(std::move(opts));
  }
  s.chosen.resize(s.seq.size());
  if (!s.run(0)) return std::nullopt;

  PartialColoring phi(h_.order());
  for (std::size_t i = 0; i < s.seq.size(); ++i) phi[s.seq[i]] = palette[s.chosen[i]];
  return phi;
}

std::optional<Coloring> find_PL_coloring(const Hypergraph& h, const Property& p, const ListAssignment& l) {
  auto phi = ListColoringSearch(h, p).solve(l);
  if (!phi) return std::nullopt;
  Coloring out;
  out.colors.reserve(h.order());
  for (const auto& c : *phi) out.colors.push_back(*c);
  return out;
}

std::size_t chi_P(const Hypergraph& h, const Property& p) {
  ListColoringSearch search(h, p);
  for (std::size_t k = 0;; ++k) {
    std::vector<Color> colors(k);
    std::iota(colors.begin(), colors.end(), Color{1});
    if (search.colorable(ListAssignment::constant(h.order(), colors))) return k;
  }
}

namespace {

// Every orbit representative of size-k lists on `active` is colorable.
bool all_lists_colorable(const ListColoringSearch& search, std::size_t n, VertexMask active, std::size_t k) {
  std::vector<std::size_t> sizes(n, 0);
  for_each_vertex(active, [&](VertexIndex v) { sizes[v] = k; });
  return for_each_list_support(n, active, sizes, [&](const std::vector<VertexMask>& supports) {
    return search.colorable(ListAssignment::from_supports(n, supports), active);
  });
}

std::size_t chi_list_within(const Hypergraph& h, const Property& p, VertexMask active, const ChoosabilityGuard& guard) {
  std::size_t n = popcount(active);
  if (n == 0) return 0;
  ListColoringSearch search(h, p);
  std::size_t k = 1;
  // Constant lists are one particular assignment, so χ is a lower bound.
  for (;; ++k) {
    std::vector<Color> colors(k);
    std::iota(colors.begin(), colors.end(), Color{1});
    if (search.colorable(ListAssignment::constant(h.order(), colors), active)) break;
  }
  // For additive P every edgeless hypergraph is a member, so greedy list
  // coloring along a degeneracy order succeeds with lists of size k whenever
  // H is strictly k-degenerate.
  std::size_t upper = n;
  if (p.additive()) {
    for (unsigned d = 1; d < upper; ++d) {
      if (is_strictly_h_degenerate(h, active, std::vector<unsigned>(h.order(), d))) upper = d;
    }
  }
  for (; k < upper; ++k) {
    if (n > guard.max_order || k > guard.max_k) {
      throw BudgetExceeded("list-chromatic search needs order " + std::to_string(n) + " with lists of size " +
                           std::to_string(k) + ", beyond the guard");
    }
    if (all_lists_colorable(search, h.order(), active, k)) return k;
  }
  return std::max(k, upper);
}

}  // namespace

std::size_t chi_list_P(const Hypergraph& h, const Property& p, const ChoosabilityGuard& guard) {
  return chi_list_within(h, p, h.all(), guard);
}

CriticalityReport is_PL_critical(const Hypergraph& h, const Property& p, const ListAssignment& l) {
  if (h.empty()) throw DomainError("criticality is undefined for the empty hypergraph");
  require_order(h, l.order(), "list assignment");
  ListColoringSearch search(h, p);
  CriticalityReport r;
  r.colorable = search.colorable(l);
  r.witnesses.resize(h.order());
  bool all_minus_v = true;
  for (VertexIndex v = 0; v < h.order(); ++v) {
    r.witnesses[v] = search.solve(l, h.all() & ~bit(v));
    all_minus_v = all_minus_v && r.witnesses[v].has_value();
  }
  r.is_critical = !r.colorable && all_minus_v;
  if (!r.is_critical) return r;

  const std::size_t rr = p.r();
  for (VertexIndex v = 0; v < h.order(); ++v) {
    std::size_t need = rr * l.size(v);
    if (h.degree(v) < need) {
      r.degree_bound_holds = false;
      r.degree_bound_violations.push_back(v);
    }
    if (h.degree(v) != need) continue;
    r.low_vertices |= bit(v);

    const PartialColoring& phi = *r.witnesses[v];
    LowVertexCheck check;
    check.vertex = v;
    check.all_equal_r = true;
    std::vector<bool> covered(h.size(), false);
    for (Color c : l.lists[v]) {
      VertexMask cls = bit(v);
      for (VertexIndex u = 0; u < h.order(); ++u) {
        if (u != v && phi[u] == c) cls |= bit(u);
      }
      std::size_t dc = 0;
      for (EdgeIndex e = 0; e < h.size(); ++e) {
        if (contains(h.edge(e), v) && is_subset(h.edge(e), cls)) {
          ++dc;
          covered[e] = true;
        }
      }
      check.class_degrees.emplace_back(c, dc);
      check.all_equal_r = check.all_equal_r && dc == rr;
    }
    check.edges_covered = true;
    for (EdgeIndex e = 0; e < h.size(); ++e) {
      if (contains(h.edge(e), v) && !covered[e]) check.edges_covered = false;
    }
    r.low_vertex_checks.push_back(std::move(check));
  }
  return r;
}

Hypergraph low_vertex_hypergraph(const Hypergraph& h, const Property& p, const ListAssignment& l) {
  CriticalityReport r = is_PL_critical(h, p, l);
  if (!r.is_critical) throw DomainError("H is not (P,L)-critical");
  return shrink(h, r.low_vertices);
}

Hypergraph critical_core(const Hypergraph& h, const Property& p, const ChoosabilityGuard& guard) {
  std::size_t target = chi_list_P(h, p, guard);
  if (h.empty()) return h;
  for (std::size_t size = 1; size <= h.order(); ++size) {
    std::optional<std::pair<CanonicalForm, VertexMask>> best;
    for (VertexMask s = 1; s <= h.all(); ++s) {
      if (popcount(s) != size) continue;
      if (chi_list_within(h, p, s, guard) != target) continue;
      std::pair<CanonicalForm, VertexMask> key{canonical_form(induced(h, s)), s};
      if (!best || key < *best) best = std::move(key);
    }
    if (best) return induced(h, best->second);
  }
  return h;
}

Json to_json(const Hypergraph& h, const ListAssignment& l) {
  require_order(h, l.order(), "list assignment");
  Json j = Json::object();
  for (VertexIndex v = 0; v < h.order(); ++v) j[h.vertex(v)] = l.lists[v];
  return j;
}

ListAssignment list_assignment_from_json(const Hypergraph& h, const Json& j) {
  if (!j.is_object()) throw ConstructionError("list assignment must be a JSON object");
  ListAssignment l{std::vector<std::vector<Color>>(h.order())};
  std::vector<bool> seen(h.order(), false);
  for (const auto& [id, colors] : j.items()) {
    auto v = h.find(id);
    if (!v) throw ConstructionError("list assignment mentions unknown vertex '" + id + "'");
    if (!colors.is_array()) throw ConstructionError("lists must be arrays of colors");
    for (const auto& c : colors) {
      if (!c.is_number_integer() || c.get<long long>() < 0) {
        throw ConstructionError("colors must be non-negative integers");
      }
      l.lists[*v].push_back(c.get<Color>());
    }
    std::sort(l.lists[*v].begin(), l.lists[*v].end());
    l.lists[*v].erase(std::unique(l.lists[*v].begin(), l.lists[*v].end()), l.lists[*v].end());
    seen[*v] = true;
  }
  for (VertexIndex v = 0; v < h.order(); ++v) {
    if (!seen[v]) throw ConstructionError("list assignment misses vertex '" + h.vertex(v) + "'");
  }
  return l;
}

Json to_json(const Hypergraph& h, const Coloring& phi) {
  require_order(h, phi.colors.size(), "coloring");
  Json j = Json::object();
  for (VertexIndex v = 0; v < h.order(); ++v) j[h.vertex(v)] = phi.colors[v];
  return j;
}

Json to_json(const Hypergraph& h, const PartialColoring& phi) {
  require_order(h, phi.size(), "coloring");
  Json j = Json::object();
  for (VertexIndex v = 0; v < h.order(); ++v) {
    if (phi[v]) j[h.vertex(v)] = *phi[v];
  }
  return j;
}

Json to_json(const Hypergraph& h, const Property& p, const CriticalityReport& r) {
  Json j;
  j["property"] = p.name();
  j["critical"] = r.is_critical;
  j["colorable"] = r.colorable;
  Json witnesses = Json::object();
  for (VertexIndex v = 0; v < h.order(); ++v) {
    witnesses[h.vertex(v)] = r.witnesses[v] ? to_json(h, *r.witnesses[v]) : Json(nullptr);
  }
  j["witnesses"] = witnesses;
  if (r.is_critical) {
    j["low_vertices"] = h.names(r.low_vertices);
    j["degree_bound_holds"] = r.degree_bound_holds;
    Json violations = Json::array();
    for (VertexIndex v : r.degree_bound_violations) violations.push_back(h.vertex(v));
    j["degree_bound_violations"] = violations;
    Json checks = Json::array();
    for (const auto& c : r.low_vertex_checks) {
      Json degrees = Json::array();
      for (const auto& [color, d] : c.class_degrees) degrees.push_back({{"color", color}, {"d", d}});
      checks.push_back({{"vertex", h.vertex(c.vertex)},
                        {"class_degrees", degrees},
                        {"all_equal_r", c.all_equal_r},
                        {"edges_covered", c.edges_covered}});
    }
    j["low_vertex_checks"] = checks;
  }
  return j;
}

}  // namespace hgc
