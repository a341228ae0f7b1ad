#include "hgc/theorems.hpp"

#include <algorithm>

#include "hgc/errors.hpp"

namespace hgc {

namespace {

void require_delta(std::size_t delta) {
  if (delta < 2) throw DomainError("delta must be at least 2");
}

Rational count(std::size_t x) { return Rational(static_cast<std::int64_t>(x)); }

bool complete_of_order(const Hypergraph& h, std::size_t n) { return h.order() == n && is_complete_graph(h); }

}  // namespace

GallaiQuantities gallai_quantities(std::size_t delta) {
  require_delta(delta);
  const auto d = static_cast<std::int64_t>(delta);
  return {delta, r_delta(delta), Rational(d - 2, d * d + 2 * d - 2)};
}

Rational r_delta(std::size_t delta) {
  require_delta(delta);
  const auto d = static_cast<std::int64_t>(delta);
  return Rational(d - 1) + Rational(2, d);
}

Rational a_bound(std::size_t delta, std::size_t n) {
  GallaiQuantities q = gallai_quantities(delta);
  return count(delta) * count(n) + q.a_coefficient * count(n);
}

Rational sigma(const Hypergraph& f, std::size_t delta) {
  return count(f.order()) * r_delta(delta) - count(degree_sum(f));
}

bool is_complete_graph(const Hypergraph& h) {
  const std::size_t n = h.order();
  return n > 0 && is_graph(h) && is_simple(h) && h.size() == n * (n - 1) / 2;
}

bool is_odd_cycle(const Hypergraph& h) {
  const std::size_t n = h.order();
  return n >= 3 && n % 2 == 1 && is_graph(h) && is_simple(h) && is_regular(h, 2) && is_connected(h);
}

bool is_gallai_tree(const Hypergraph& h, const Property& p) {
  if (!is_connected(h)) throw DomainError("Gallai tree test needs a connected hypergraph");
  if (!is_simple(h)) throw DomainError("Gallai tree test needs a simple hypergraph");
  const BlockDecomposition d = blocks(h);
  for (const Block& b : d.blocks) {
    Hypergraph bh = block_hypergraph(h, b);
    if (is_complete_graph(bh) || is_odd_cycle(bh)) continue;
    if (in_F(p, bh) && is_regular(bh, p.r())) continue;
    if (p.contains(bh) && max_degree(bh) <= p.r()) continue;
    return false;
  }
  return true;
}

bool is_epsilon_delta(const Hypergraph& h, std::size_t delta) {
  if (!is_connected(h)) throw DomainError("epsilon-delta test needs a connected hypergraph");
  const BlockDecomposition d = blocks(h);
  std::vector<bool> is_k_delta(d.blocks.size()), single_edge(d.blocks.size());
  VertexMask in_k_delta = 0;
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    is_k_delta[i] = complete_of_order(block_hypergraph(h, d.blocks[i]), delta);
    single_edge[i] = d.blocks[i].edges.size() == 1;
    if (is_k_delta[i]) in_k_delta |= d.blocks[i].vertices;
  }
  for (const auto& [v, around] : d.block_adjacency) {
    if (around.size() != 2) return false;
    const std::size_t a = around[0], b = around[1];
    if (!((is_k_delta[a] && single_edge[b]) || (is_k_delta[b] && single_edge[a]))) return false;
  }
  return is_subset(h.all() & ~d.separating, in_k_delta);
}

bool in_gallai_family(const Hypergraph& t, const Property& p, std::size_t delta) {
  if (t.empty() || !is_simple(t) || !is_connected(t)) return false;
  if (max_degree(t) > delta || complete_of_order(t, delta + 1)) return false;
  return is_gallai_tree(t, p);
}

std::string to_string(BlockVerdict v) {
  switch (v) {
    case BlockVerdict::Brick:
      return "Brick";
    case BlockVerdict::FPRegular:
      return "F(P)-regular";
    case BlockVerdict::SmallInP:
      return "SmallInP";
    case BlockVerdict::Violation:
      break;
  }
  return "Violation";
}

BlockStructureReport classify_blocks(const Hypergraph& h, const Property& p) {
  BlockStructureReport report;
  for (const Block& b : blocks(h).blocks) {
    Hypergraph bh = block_hypergraph(h, b);
    BlockCheck c;
    c.vertices = b.vertices;
    c.brick = classify_brick(bh);
    c.fp_regular = in_F(p, bh) && is_regular(bh, p.r());
    c.small_in_p = p.contains(bh) && max_degree(bh) <= p.r();
    if (c.fp_regular) {
      c.verdict = BlockVerdict::FPRegular;
    } else if (c.brick.kind != BrickKind::NotBrick) {
      c.verdict = BlockVerdict::Brick;
    } else if (c.small_in_p) {
      c.verdict = BlockVerdict::SmallInP;
    } else {
      c.verdict = BlockVerdict::Violation;
      report.pass = false;
    }
    report.blocks.push_back(c);
  }
  return report;
}

Theorem3Report verify_theorem3(const Hypergraph& h, const Property& p, const ListAssignment& l) {
  CriticalityReport crit = is_PL_critical(h, p, l);
  if (!crit.is_critical) throw DomainError("H is not (P,L)-critical");
  if (crit.low_vertices == 0) throw DomainError("the low-vertex hypergraph is empty");
  Theorem3Report r;
  r.low_vertex_hypergraph = shrink(h, crit.low_vertices);
  r.structure = classify_blocks(r.low_vertex_hypergraph, p);
  r.pass = r.structure.pass;
  return r;
}

Theorem4Report verify_theorem4(const Hypergraph& h, const VectorFunction& f) {
  if (!is_connected(h)) throw DomainError("H must be connected");
  if (!degree_feasible(h, f)) throw DomainError("f is not degree-feasible");
  Theorem4Report r;
  r.partition = find_f_partition(h, f);
  r.partitionable = r.partition.has_value();
  r.certificate = classify_hard_pair(h, f);
  r.certificate_valid = r.certificate && validate_certificate(h, f, *r.certificate);
  bool partition_ok = true;
  if (r.partition) {
    partition_ok = is_partition_of(h, *r.partition);
    for (std::size_t i = 0; partition_ok && i < f.p(); ++i) {
      partition_ok = is_strictly_h_degenerate(h, r.partition->parts[i], f.component(i));
    }
  }
  r.pass = partition_ok && r.partitionable != r.certificate_valid && (r.partitionable || r.certificate.has_value());
  return r;
}

BrooksReport verify_brooks(const Hypergraph& h, const Property& p, const ChoosabilityGuard& guard) {
  if (!p.additive()) throw DomainError("the Brooks-type bound needs an additive property");
  if (!is_connected(h)) throw DomainError("H must be connected");
  BrooksReport r;
  r.r = p.r();
  r.chi_list = chi_list_P(h, p, guard);
  r.max_degree = max_degree(h);
  r.bound = (r.max_degree + r.r - 1) / r.r + 1;
  r.bound_holds = r.chi_list <= r.bound;
  r.degree_ratio_holds = (r.chi_list - 1) * r.r <= r.max_degree;
  r.equality = r.chi_list == r.bound;
  if (r.equality) {
    const BrickClassification b = classify_brick(h);
    if (b.kind == BrickKind::CompleteMultiple && (b.t * (b.n - 1)) % r.r == 0) {
      r.clause = "tK";
    } else if (((b.kind == BrickKind::CompleteMultiple && b.n == 3) || b.kind == BrickKind::OddCycleMultiple) &&
               b.t == r.r && r.chi_list == 3) {
      r.clause = "tC";
    } else if (is_regular(h, r.r) && in_F(p, h)) {
      r.clause = "F(P)";
    }
  }
  r.pass = r.bound_holds && r.degree_ratio_holds && (!r.equality || !r.clause.empty());
  return r;
}

Theorem6Report verify_theorem6(const Hypergraph& h, const Property& p, const ListAssignment& l) {
  if (!p.additive()) throw DomainError("the degree version needs an additive property");
  if (!is_connected(h)) throw DomainError("H must be connected");
  if (l.order() != h.order()) throw DomainError("list assignment does not cover exactly the vertices of H");
  for (VertexIndex v = 0; v < h.order(); ++v) {
    if (p.r() * l.size(v) < h.degree(v)) throw DomainError("r|L(v)| >= d_H(v) fails at '" + h.vertex(v) + "'");
  }
  Theorem6Report r;
  r.colorable = find_PL_coloring(h, p, l).has_value();
  if (r.colorable) {
    r.pass = true;
    return r;
  }
  r.structure = classify_blocks(h, p);
  r.pass = r.structure->pass;
  return r;
}

GallaiBoundReport verify_gallai_bound(const Hypergraph& h, const Property& p, const ListAssignment& l) {
  if (!p.additive()) throw PreconditionError("additive", "P must be additive");
  if (p.r() < 1) throw PreconditionError("r", "d(P) must be at least 1");
  if (l.order() != h.order() || h.empty()) throw PreconditionError("lists", "one list per vertex is required");
  const std::size_t k = l.size(0);
  for (VertexIndex v = 0; v < h.order(); ++v) {
    if (l.size(v) != k) throw PreconditionError("lists", "all lists must have the same size");
  }
  if (k < 2) throw PreconditionError("k", "lists must have size at least 2");
  const std::size_t delta = k * p.r();
  if (delta < 3) throw PreconditionError("delta", "delta = k r must be at least 3");
  if (complete_of_order(h, delta + 1)) throw PreconditionError("complete", "H is K_{delta+1}");
  CriticalityReport crit = is_PL_critical(h, p, l);
  if (!crit.is_critical) throw PreconditionError("critical", "H is not (P,L)-critical");
  if (!is_simple(shrink(h, crit.low_vertices))) {
    throw PreconditionError("locally-linear", "the low-vertex hypergraph is not simple");
  }

  GallaiBoundReport r;
  r.n = h.order();
  r.k = k;
  r.delta = delta;
  for (VertexIndex v = 0; v < h.order(); ++v) {
    if (h.degree(v) == delta) r.low |= bit(v);
  }
  const Hypergraph low = shrink(h, r.low);
  r.degree_sum = degree_sum(h);
  r.degree_sum_outside = degree_sum(remove(h, r.low));
  r.degree_sum_low = degree_sum(low);
  const Rational rd = r_delta(delta);
  const Rational u = count(popcount(r.low));
  r.sigma = u * rd - count(r.degree_sum_low);
  r.components_at_least_two = true;
  for (VertexMask c : components(low)) {
    r.component_sigma.push_back(sigma(induced(low, c), delta));
    r.components_at_least_two = r.components_at_least_two && r.component_sigma.back() >= 2;
  }
  r.a = a_bound(delta, r.n);
  r.sigma_nonnegative = r.sigma >= 0;
  const Rational d = count(r.degree_sum);
  r.chain_sigma = d >= count(r.degree_sum_outside) + r.sigma + (count(delta) + 1 - Rational(2) / count(delta)) * u;
  r.chain_low = d >= count((delta + 1) * r.n) - u;
  r.bound_holds = d >= r.a;
  r.sigma_asserted = delta >= 4;
  r.pass = r.chain_sigma && r.chain_low && r.bound_holds &&
           (!r.sigma_asserted || (r.sigma_nonnegative && r.components_at_least_two));
  return r;
}

SigmaLemmaReport verify_sigma_lemmas(const Hypergraph& t, const Property& p, std::size_t delta) {
  if (delta < 3) throw DomainError("the sigma lemmas need delta >= 3");
  if (!in_gallai_family(t, p, delta)) throw DomainError("T is not a Gallai tree with maximum degree at most delta");
  SigmaLemmaReport r;
  r.delta = delta;
  r.r_delta = r_delta(delta);
  r.sigma = sigma(t, delta);
  r.epsilon_delta = is_epsilon_delta(t, delta);
  const BlockDecomposition d = blocks(t);
  r.block_bounds_hold = true;
  r.end_blocks_hold = true;
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const Hypergraph b = block_hypergraph(t, d.blocks[i]);
    const Rational sb = sigma(b, delta);
    r.block_sigma.push_back(sb);
    const bool ok = complete_of_order(b, delta) ? sb == Rational(2) : sb >= r.r_delta;
    r.block_bounds_hold = r.block_bounds_hold && ok;
    if (!d.is_end_block(i)) continue;
    EndBlockIdentity e;
    e.block = d.blocks[i].vertices;
    e.sigma_tree = r.sigma;
    e.sigma_trimmed = sigma(trim_end_block(t, d, i), delta);
    e.sigma_block = sb;
    e.holds = e.sigma_tree == e.sigma_trimmed + e.sigma_block - r.r_delta;
    r.end_blocks_hold = r.end_blocks_hold && e.holds;
    r.end_blocks.push_back(e);
  }
  if (delta >= 4) r.tree_bound_holds = r.epsilon_delta ? r.sigma >= 2 : r.sigma >= r.r_delta;
  r.pass = r.block_bounds_hold && r.end_blocks_hold && r.tree_bound_holds.value_or(true);
  return r;
}

namespace {

Json brick_json(const BrickClassification& b) {
  switch (b.kind) {
    case BrickKind::CompleteMultiple:
      return {{"type", "tKn"}, {"t", b.t}, {"n", b.n}};
    case BrickKind::OddCycleMultiple:
      return {{"type", "tCn"}, {"t", b.t}, {"n", b.n}};
    case BrickKind::NotBrick:
      break;
  }
  return nullptr;
}

Json rationals(const std::vector<Rational>& xs) {
  Json j = Json::array();
  for (const auto& x : xs) j.push_back(to_json(x));
  return j;
}

}  // namespace

Json to_json(const Hypergraph& h, const BlockStructureReport& r) {
  Json blocks_json = Json::array();
  for (const auto& b : r.blocks) {
    blocks_json.push_back({{"vertices", h.names(b.vertices)},
                           {"verdict", to_string(b.verdict)},
                           {"brick", brick_json(b.brick)},
                           {"fp_regular", b.fp_regular},
                           {"small_in_p", b.small_in_p}});
  }
  return {{"blocks", blocks_json}, {"pass", r.pass}};
}

Json to_json(const Hypergraph& h, const Theorem3Report& r) {
  (void)h;
  return {{"low_vertex_hypergraph", to_json(r.low_vertex_hypergraph)},
          {"structure", to_json(r.low_vertex_hypergraph, r.structure)},
          {"pass", r.pass}};
}

Json to_json(const Hypergraph& h, const Theorem4Report& r) {
  Json j;
  j["partitionable"] = r.partitionable;
  j["partition"] = r.partition ? to_json(h, *r.partition) : Json(nullptr);
  j["certificate"] = r.certificate ? to_json(h, *r.certificate) : Json(nullptr);
  j["certificate_valid"] = r.certificate_valid;
  j["pass"] = r.pass;
  return j;
}

Json to_json(const BrooksReport& r) {
  return {{"chi_list", r.chi_list},
          {"max_degree", r.max_degree},
          {"r", r.r},
          {"bound", r.bound},
          {"bound_holds", r.bound_holds},
          {"degree_ratio_holds", r.degree_ratio_holds},
          {"equality", r.equality},
          {"clause", r.clause.empty() ? Json(nullptr) : Json(r.clause)},
          {"pass", r.pass}};
}

Json to_json(const Hypergraph& h, const Theorem6Report& r) {
  return {{"colorable", r.colorable},
          {"structure", r.structure ? to_json(h, *r.structure) : Json(nullptr)},
          {"pass", r.pass}};
}

Json to_json(const Hypergraph& h, const GallaiBoundReport& r) {
  return {{"n", r.n},
          {"k", r.k},
          {"delta", r.delta},
          {"low_vertices", h.names(r.low)},
          {"degree_sum", r.degree_sum},
          {"degree_sum_outside_low", r.degree_sum_outside},
          {"degree_sum_low", r.degree_sum_low},
          {"sigma", to_json(r.sigma)},
          {"component_sigma", rationals(r.component_sigma)},
          {"a", to_json(r.a)},
          {"sigma_nonnegative", r.sigma_nonnegative},
          {"components_at_least_two", r.components_at_least_two},
          {"chain_sigma", r.chain_sigma},
          {"chain_low", r.chain_low},
          {"bound_holds", r.bound_holds},
          {"sigma_asserted", r.sigma_asserted},
          {"pass", r.pass}};
}

Json to_json(const Hypergraph& h, const SigmaLemmaReport& r) {
  Json ends = Json::array();
  for (const auto& e : r.end_blocks) {
    ends.push_back({{"block", h.names(e.block)},
                    {"sigma_tree", to_json(e.sigma_tree)},
                    {"sigma_trimmed", to_json(e.sigma_trimmed)},
                    {"sigma_block", to_json(e.sigma_block)},
                    {"holds", e.holds}});
  }
  return {{"delta", r.delta},
          {"sigma", to_json(r.sigma)},
          {"r_delta", to_json(r.r_delta)},
          {"epsilon_delta", r.epsilon_delta},
          {"block_sigma", rationals(r.block_sigma)},
          {"block_bounds_hold", r.block_bounds_hold},
          {"end_blocks", ends},
          {"end_blocks_hold", r.end_blocks_hold},
          {"tree_bound_holds", r.tree_bound_holds ? Json(*r.tree_bound_holds) : Json(nullptr)},
          {"pass", r.pass}};
}

}  // namespace hgc
