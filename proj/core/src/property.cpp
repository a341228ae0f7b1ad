#include "hgc/property.hpp"

#include <algorithm>
#include <charconv>

#include "hgc/degeneracy.hpp"
#include "hgc/enumerate.hpp"
#include "hgc/errors.hpp"
#include "hgc/structure.hpp"

namespace hgc {

Property::Property(std::string name, Predicate member, bool additive, unsigned r)
    : name_(std::move(name)), member_(std::move(member)), additive_(additive), r_(r) {}

Property Property::from_hypergraph_predicate(std::string name, std::function<bool(const Hypergraph&)> member,
                                             bool additive, unsigned r) {
  return Property(
      std::move(name),
      [member = std::move(member)](const Hypergraph& h, VertexMask within) {
        return within == h.all() ? member(h) : member(induced(h, within));
      },
      additive, r);
}

namespace properties {

Property edgeless() {
  return Property(
      "O",
      [](const Hypergraph& h, VertexMask s) {
        return std::none_of(h.edges().begin(), h.edges().end(), [s](VertexMask e) { return is_subset(e, s); });
      },
      true, 1);
}

Property max_degree(unsigned k) {
  return Property(
      "S:" + std::to_string(k),
      [k](const Hypergraph& h, VertexMask s) {
        bool ok = true;
        for_each_vertex(s, [&](VertexIndex v) { ok = ok && h.degree_within(v, s) <= k; });
        return ok;
      },
      true, 1);
}

Property degenerate(unsigned k) {
  return Property(
      "D:" + std::to_string(k),
      [k](const Hypergraph& h, VertexMask s) {
        const std::vector<unsigned> bound(h.order(), k + 1);
        return is_strictly_h_degenerate(h, s, bound);
      },
      true, k + 1);
}

}  // namespace properties

Property builtin(std::string_view spec) {
  if (spec == "O") return properties::edgeless();
  if (spec.size() >= 3 && spec[1] == ':' && (spec[0] == 'S' || spec[0] == 'D')) {
    unsigned k = 0;
    const char* first = spec.data() + 2;
    const char* last = spec.data() + spec.size();
    auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec == std::errc{} && ptr == last) {
      return spec[0] == 'S' ? properties::max_degree(k) : properties::degenerate(k);
    }
  }
  throw DomainError("unknown property '" + std::string(spec) + "' (expected O, S:k or D:k)");
}

bool in_F(const Property& p, const Hypergraph& h, VertexMask within) {
  within &= h.all();
  if (p.contains(h, within)) return false;
  bool all_in = true;
  for_each_vertex(within, [&](VertexIndex v) { all_in = all_in && p.contains(h, within & ~bit(v)); });
  return all_in;
}

bool in_F(const Property& p, const Hypergraph& h) { return in_F(p, h, h.all()); }

std::optional<std::size_t> d_P_bounded(const Property& p, const EnumerationBounds& bounds) {
  std::optional<std::size_t> best;
  for_each_hypergraph(bounds, [&](const Hypergraph& h) {
    if (in_F(p, h)) {
      const std::size_t d = min_degree(h);
      if (!best || d < *best) best = d;
    }
  });
  return best;
}

SmoothnessReport verify_smooth(const Property& p, const std::vector<Hypergraph>& stream) {
  SmoothnessReport report;
  auto violate = [&](std::string clause, const Hypergraph& h, std::string detail) {
    report.violations.push_back({std::move(clause), to_canonical_string(h), std::move(detail)});
  };

  const Hypergraph k0;
  const Hypergraph k1 = families::edgeless(1);
  if (!p.contains(k0)) violate("a", k0, "K_0 is not a member");
  if (!p.contains(k1)) violate("a", k1, "K_1 is not a member");

  bool saw_nonmember = false;
  std::vector<const Hypergraph*> small_members;
  for (const Hypergraph& h : stream) {
    if (h.order() > 16) throw BudgetExceeded("verify_smooth is limited to hypergraphs of order 16");
    ++report.instances;
    const VertexMask all = h.all();
    const bool member = p.contains(h);
    report.members += member ? 1 : 0;
    saw_nonmember = saw_nonmember || !member;

    // Membership of every induced subhypergraph, indexed by vertex mask.
    std::vector<bool> in(std::size_t{1} << h.order());
    for (VertexMask s = 0; s <= all; ++s) in[s] = p.contains(h, s);

    bool hereditary_ok = true;
    if (member) {
      for (VertexMask s = 0; s < all && hereditary_ok; ++s) {
        if (!in[s]) {
          hereditary_ok = false;
          violate("P1", h, "member has the non-member induced subhypergraph " + to_canonical_string(induced(h, s)));
        }
      }
    }

    auto forbidden = [&](VertexMask s) {
      if (in[s]) return false;
      bool minimal = true;
      for_each_vertex(s, [&](VertexIndex v) { minimal = minimal && in[s & ~bit(v)]; });
      return minimal;
    };

    const bool f_member = forbidden(all);
    if (f_member) {
      ++report.forbidden;
      const std::size_t d = min_degree(h);
      if (!report.min_forbidden_degree || d < *report.min_forbidden_degree) report.min_forbidden_degree = d;
    }

    // (b): F(P) membership iff all proper induced subhypergraphs are members and H is not.
    bool proper_all_in = true;
    for (VertexMask s = 0; s < all; ++s) proper_all_in = proper_all_in && in[s];
    if (f_member != (proper_all_in && !member)) violate("b", h, "F(P) membership disagrees with the proper-subhypergraph test");

    // (c): non-member iff some induced subhypergraph lies in F(P).
    bool has_forbidden = false;
    for (VertexMask s = 0; s <= all && !has_forbidden; ++s) has_forbidden = is_subset(s, all) && forbidden(s);
    if (member == has_forbidden) violate("c", h, "non-membership disagrees with containing an F(P) member");

    // (e): H ∉ P, H - v ∈ P  =>  d_H(v) >= r.
    if (!member) {
      for_each_vertex(all, [&](VertexIndex v) {
        if (in[all & ~bit(v)] && h.degree(v) < p.r()) {
          violate("e", h, "vertex " + h.vertex(v) + " has degree " + std::to_string(h.degree(v)) + " < r");
        }
      });
    }

    if (p.additive() && !h.empty()) {
      bool parts_in = true;
      for (VertexMask c : components(h)) parts_in = parts_in && in[c];
      if (parts_in != member) violate("additive", h, "membership differs from membership of all components");
      if (member && h.order() <= 3) small_members.push_back(&h);
    }
  }
  if (!saw_nonmember && report.instances > 0) {
    violate("P2", k0, "every hypergraph in the stream is a member");
  }

  // Pairwise disjoint unions of small members must stay members.
  for (std::size_t i = 0; i < small_members.size(); ++i) {
    for (std::size_t j = i; j < small_members.size(); ++j) {
      const Hypergraph& a = *small_members[i];
      const Hypergraph& b = *small_members[j];
      std::vector<VertexId> names;
      for (const auto& id : b.vertices()) names.push_back("~" + id);
      const Hypergraph u = disjoint_union(a, relabel(b, names));
      if (!p.contains(u)) violate("additive", u, "disjoint union of two members is not a member");
    }
  }
  return report;
}

Json to_json(const SmoothnessReport& r) {
  Json j;
  j["instances"] = r.instances;
  j["members"] = r.members;
  j["forbidden"] = r.forbidden;
  j["min_forbidden_degree"] = r.min_forbidden_degree ? Json(*r.min_forbidden_degree) : Json(nullptr);
  j["violations"] = Json::array();
  for (const auto& v : r.violations) {
    j["violations"].push_back({{"clause", v.clause}, {"witness", Json::parse(v.witness)}, {"detail", v.detail}});
  }
  j["ok"] = r.ok();
  return j;
}

}  // namespace hgc
