#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "hgc/enumerate.hpp"
#include "hgc/errors.hpp"
#include "hgc/io.hpp"

using namespace hgc;
using fx::H;

namespace {

std::vector<VertexId> shuffled_names(std::size_t n, unsigned seed) {
  std::vector<VertexId> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("q" + std::to_string((i * 7 + seed) % n));
  return names;
}

std::size_t count(const EnumerationBounds& b) { return enum_hypergraphs(b).size(); }

}  // namespace

TEST_CASE("enum_hypergraphs examples") {
  auto simple = enum_hypergraphs({.max_order = 3, .max_edges = 3, .max_edge_size = 2, .connected_only = true,
                                  .simple_only = true});
  REQUIRE(simple.size() == 4);
  CHECK(simple[0] == families::edgeless(1));
  CHECK(canonical_form(simple[1]) == canonical_form(families::complete(2)));
  CHECK(canonical_form(simple[2]) == canonical_form(families::path(3)));
  CHECK(canonical_form(simple[3]) == canonical_form(families::complete(3)));

  auto multi = enum_hypergraphs({.max_order = 2, .max_edges = 4, .max_edge_size = 2, .max_multiplicity = 2,
                                 .connected_only = true});
  CHECK(multi.size() == 3);

  auto none = enum_hypergraphs({.max_order = 0});
  REQUIRE(none.size() == 1);
  CHECK(none[0].empty());
}

TEST_CASE("known class counts") {
  // Simple graphs on exactly n vertices: 1, 2, 4, 11, 34; connected: 1, 1, 2, 6, 21.
  const std::size_t all[] = {1, 2, 4, 11, 34};
  const std::size_t connected[] = {1, 1, 2, 6, 21};
  for (std::size_t n = 1; n <= 5; ++n) {
    EnumerationBounds b{.min_order = n, .max_order = n, .max_edges = 10, .max_edge_size = 2, .simple_only = true};
    CHECK(count(b) == all[n - 1]);
    b.connected_only = true;
    CHECK(count(b) == connected[n - 1]);
  }
  EnumerationBounds six{.min_order = 6, .max_order = 6, .max_edges = 15, .max_edge_size = 2, .connected_only = true,
                        .simple_only = true};
  CHECK(count(six) == 112);
  // 3-uniform hypergraphs on 4 vertices: one class per number of triples.
  EnumerationBounds triples{.min_order = 4, .max_order = 4, .max_edges = 4, .max_edge_size = 3};
  std::size_t uniform = 0;
  for (const auto& h : enum_hypergraphs(triples)) {
    bool all3 = true;
    for (EdgeIndex e = 0; e < h.size(); ++e) all3 = all3 && h.edge_size(e) == 3;
    uniform += all3 ? 1 : 0;
  }
  CHECK(uniform == 5);
}

TEST_CASE("bounds validation") {
  CHECK_THROWS_AS(enum_hypergraphs({.max_order = 3, .max_edge_size = 1}), DomainError);
  CHECK_THROWS_AS(enum_hypergraphs({.max_order = 3, .max_multiplicity = 0}), DomainError);
  CHECK_THROWS_AS(enum_hypergraphs({.min_order = 4, .max_order = 3}), DomainError);
  CHECK_THROWS_AS(enum_hypergraphs({.max_order = 9}), BudgetExceeded);
}

TEST_CASE("canonical_form") {
  Hypergraph c5 = families::cycle(5);
  for (unsigned seed = 0; seed < 5; ++seed) {
    CHECK(canonical_form(relabel(c5, shuffled_names(5, seed))) == canonical_form(c5));
  }
  CHECK(canonical_form(families::complete(3)) != canonical_form(families::path(3)));
  CHECK(canonical_form(H("ab ab")) != canonical_form(H("ab")));
  CHECK(canonical_string(H("xy yz")) == canonical_string(H("pq pr")));
  Hypergraph big = families::edgeless(kMaxCanonicalOrder + 1);
  CHECK_THROWS_AS(canonical_form(big), BudgetExceeded);
}

TEST_CASE("canonical_form is the permutation minimum on small hypergraphs") {
  EnumerationBounds b{.max_order = 5, .max_edges = 4, .max_edge_size = 3, .max_multiplicity = 2};
  for_each_hypergraph(b, [&](const Hypergraph& h) {
    std::vector<VertexIndex> perm(h.order());
    std::iota(perm.begin(), perm.end(), VertexIndex{0});
    std::set<CanonicalForm> images;
    do {
      CanonicalForm f{h.order(), {}};
      for (VertexMask e : h.edges()) {
        VertexMask m = 0;
        for_each_vertex(e, [&](VertexIndex v) { m |= bit(perm[v]); });
        f.edges.push_back(m);
      }
      std::sort(f.edges.begin(), f.edges.end());
      images.insert(f);
    } while (std::next_permutation(perm.begin(), perm.end()));
    // Every relabeling has the same form, and the form is one of the relabelings.
    CHECK(images.count(canonical_form(h)) == 1);
    for (const auto& f : images) CHECK(canonical_form(canonical_hypergraph(f)) == canonical_form(h));
  });
}

TEST_CASE("automorphisms") {
  CHECK(automorphisms(families::cycle(5)).size() == 10);
  CHECK(automorphisms(families::complete(4)).size() == 24);
  CHECK(automorphisms(families::path(4)).size() == 2);
  CHECK(automorphisms(H("ab ab bc")).size() == 1);
  CHECK(automorphisms(Hypergraph{}).size() == 1);
  for (const auto& g : automorphisms(fx::bowtie())) {
    Hypergraph bow = fx::bowtie();
    std::vector<VertexMask> mapped;
    for (VertexMask e : bow.edges()) {
      VertexMask m = 0;
      for_each_vertex(e, [&](VertexIndex v) { m |= bit(g[v]); });
      mapped.push_back(m);
    }
    std::vector<VertexMask> orig = bow.edges();
    std::sort(mapped.begin(), mapped.end());
    std::sort(orig.begin(), orig.end());
    CHECK(mapped == orig);
  }
  CHECK(automorphisms(fx::bowtie()).size() == 8);
}

TEST_CASE("enum_list_assignments") {
  CHECK(enum_list_assignments(families::complete(2), 1).size() == 2);
  CHECK(enum_list_assignments(families::edgeless(1), 2).size() == 1);
  auto k2 = enum_list_assignments(families::complete(2), 2);
  REQUIRE(k2.size() == 3);
  std::set<std::size_t> overlaps;
  for (const auto& l : k2) {
    std::vector<Color> common;
    std::set_intersection(l.lists[0].begin(), l.lists[0].end(), l.lists[1].begin(), l.lists[1].end(),
                          std::back_inserter(common));
    overlaps.insert(common.size());
    CHECK(l.size(0) == 2);
    CHECK(l.size(1) == 2);
  }
  CHECK(overlaps == std::set<std::size_t>{0, 1, 2});
  CHECK_THROWS_AS(enum_list_assignments(families::edgeless(7), 1), BudgetExceeded);
  CHECK_THROWS_AS(enum_list_assignments(families::edgeless(2), 4), BudgetExceeded);
}

TEST_CASE("list orbits match an independent count") {
  // Orbits of k-lists on n vertices under color permutation.
  const std::size_t expected[4][3] = {{2, 3, 4}, {5, 16, 39}, {15, 139, 862}, {52, 1750, 35775}};
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      std::size_t c = 0;
      for_each_list_support(n, full_mask(n), std::vector<std::size_t>(n, k), [&](const std::vector<VertexMask>&) {
        ++c;
        return true;
      });
      CHECK(c == expected[n - 2][k - 1]);
    }
  }
}

TEST_CASE("list orbits by brute force over small color universes") {
  // n = 3, k = 2: all assignments over {1..6}, reduced by relabeling colors in
  // order of first appearance.
  const std::size_t n = 3, k = 2, universe = 6;
  std::vector<std::vector<Color>> subsets;
  for (unsigned m = 0; m < (1U << universe); ++m) {
    if (std::popcount(m) != static_cast<int>(k)) continue;
    std::vector<Color> s;
    for (unsigned c = 0; c < universe; ++c) {
      if (m & (1U << c)) s.push_back(c + 1);
    }
    subsets.push_back(s);
  }
  std::set<std::vector<VertexMask>> orbits;
  for (const auto& a : subsets) {
    for (const auto& b : subsets) {
      for (const auto& c : subsets) {
        std::vector<std::vector<Color>> l{a, b, c};
        std::vector<VertexMask> support(universe + 1, 0);
        for (std::size_t v = 0; v < n; ++v) {
          for (Color col : l[v]) support[col] |= bit(v);
        }
        std::vector<VertexMask> key;
        for (VertexMask s : support) {
          if (s) key.push_back(s);
        }
        std::sort(key.begin(), key.end());
        orbits.insert(key);
      }
    }
  }
  CHECK(orbits.size() == 16);
}

TEST_CASE("search_critical examples") {
  const Property O = builtin("O");
  const Property D1 = builtin("D:1");
  EnumerationBounds b{.max_order = 5, .max_edges = 6, .max_edge_size = 2, .simple_only = true};

  auto has = [](const std::vector<CriticalInstance>& found, const Hypergraph& h) {
    return std::any_of(found.begin(), found.end(),
                       [&](const CriticalInstance& c) { return canonical_form(c.hypergraph) == canonical_form(h); });
  };
  auto o2 = search_critical(O, 2, b);
  CHECK(has(o2, families::complete(3)));
  CHECK(has(o2, families::cycle(5)));
  for (const auto& c : o2) CHECK(is_PL_critical(c.hypergraph, O, c.lists).is_critical);

  auto d1 = search_critical(D1, 1, b);
  for (std::size_t n = 3; n <= 5; ++n) CHECK(has(d1, families::cycle(n)));

  auto o1 = search_critical(O, 1, {.max_order = 2, .max_edges = 1, .max_edge_size = 2});
  REQUIRE(o1.size() == 1);
  CHECK(o1[0].hypergraph.size() == 1);
  CHECK(o1[0].lists.lists[0] == o1[0].lists.lists[1]);
}

TEST_CASE("search_critical has no duplicates under joint symmetry") {
  const Property O = builtin("O");
  auto found = search_critical(O, 2, {.max_order = 4, .max_edges = 5, .max_edge_size = 3});
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = i + 1; j < found.size(); ++j) {
      if (!(canonical_form(found[i].hypergraph) == canonical_form(found[j].hypergraph))) continue;
      const auto& h = found[i].hypergraph;
      auto key = [&](const ListAssignment& l, const std::vector<VertexIndex>& g) {
        std::map<Color, VertexMask> s;
        for (VertexIndex v = 0; v < h.order(); ++v) {
          for (Color c : l.lists[v]) s[c] |= bit(g[v]);
        }
        std::vector<VertexMask> out;
        for (auto& [c, m] : s) out.push_back(m);
        std::sort(out.begin(), out.end());
        return out;
      };
      std::vector<VertexIndex> id(h.order());
      std::iota(id.begin(), id.end(), VertexIndex{0});
      for (const auto& g : automorphisms(h)) CHECK(key(found[i].lists, g) != key(found[j].lists, id));
    }
  }
}

TEST_CASE("vector functions") {
  Hypergraph p = families::path(3);
  std::size_t all = 0, feasible = 0;
  for_each_vector_function(p, 2, 1, false, [&](const VectorFunction&) { ++all; });
  for_each_vector_function(p, 2, 1, true, [&](const VectorFunction& f) {
    CHECK(degree_feasible(p, f));
    ++feasible;
  });
  CHECK(all == 64);
  CHECK(feasible == 3 * 1 * 3);
}

TEST_CASE("block trees") {
  std::vector<Hypergraph> menu{families::complete(2), families::complete(3)};
  auto trees = enum_block_trees(menu, 5, 3, 4);
  std::set<CanonicalForm> forms;
  for (const auto& t : trees) {
    CHECK(is_connected(t));
    CHECK(max_degree(t) <= 4);
    CHECK(blocks(t).blocks.size() <= 3);
    forms.insert(canonical_form(t));
  }
  CHECK(forms.size() == trees.size());
  CHECK(forms.count(canonical_form(fx::bowtie())) == 1);
  CHECK(forms.count(canonical_form(families::path(4))) == 1);
  CHECK(forms.count(canonical_form(families::edgeless(1))) == 1);
  CHECK(forms.count(canonical_form(families::path(5))) == 0);
}
