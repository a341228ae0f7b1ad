#include <doctest.h>

#include "fixtures.hpp"
#include "hgc/enumerate.hpp"
#include "hgc/errors.hpp"
#include "hgc/io.hpp"

using namespace hgc;
using fx::H;

TEST_CASE("build") {
  Hypergraph empty = Hypergraph::build({}, {});
  CHECK(empty.empty());
  CHECK(empty.size() == 0);

  Hypergraph e = Hypergraph::build({"a", "b", "c"}, {{"a", "b", "c"}});
  CHECK(e.order() == 3);
  CHECK(e.size() == 1);
  CHECK(e.edge_size(0) == 3);

  CHECK_THROWS_AS(Hypergraph::build({"a", "b"}, {{"a"}}), ConstructionError);
  CHECK_THROWS_AS(Hypergraph::build({"a", "b"}, {{"a", "z"}}), ConstructionError);
  CHECK_THROWS_AS(Hypergraph::build({"a", "a"}, {}), ConstructionError);
  CHECK_THROWS_AS(Hypergraph::build({"a", "b"}, {{"a", "a"}}), ConstructionError);
}

TEST_CASE("edges keep input order and parallel edges") {
  Hypergraph h = Hypergraph::build({"c", "a", "b"}, {{"b", "c"}, {"a", "b"}, {"c", "b"}});
  CHECK(h.vertices() == std::vector<VertexId>{"a", "b", "c"});
  CHECK(h.edge(0) == h.edge(2));
  CHECK(h.edge(1) == (bit(0) | bit(1)));
}

TEST_CASE("degree") {
  Hypergraph k3 = families::complete(3);
  for (const auto& v : k3.vertices()) CHECK(degree(k3, v) == 2);
  CHECK(degree(H("abc"), "a") == 1);
  CHECK(degree(H("ab ab"), "a") == 2);
  CHECK_THROWS_AS(degree(k3, "zz"), DomainError);

  DegreeProfile empty = degree_profile(Hypergraph{});
  CHECK(empty.min_degree == 0);
  CHECK(empty.max_degree == 0);
  CHECK(empty.degree_sum == 0);
}

TEST_CASE("multiplicity") {
  CHECK(multiplicity(H("ab ab"), "a", "b") == 2);
  CHECK(multiplicity(H("abc"), "a", "b") == 0);
  CHECK(multiplicity(H("ab bc"), "a", "c") == 0);
  CHECK_THROWS_AS(multiplicity(H("ab"), "a", "a"), DomainError);
}

TEST_CASE("induced") {
  Hypergraph k3 = H("ab bc ca");
  Hypergraph sub = induced(k3, std::vector<VertexId>{"a", "b"});
  CHECK(sub == H("ab"));
  Hypergraph hyper = induced(H("abc"), std::vector<VertexId>{"a", "b"});
  CHECK(hyper.order() == 2);
  CHECK(hyper.size() == 0);
  CHECK(induced(k3, k3.all()) == k3);
  CHECK_THROWS_AS(induced(k3, std::vector<VertexId>{"a", "q"}), DomainError);
  CHECK(remove(k3, std::vector<VertexId>{"c"}) == sub);
}

TEST_CASE("shrink") {
  CHECK(shrink(H("abc"), std::vector<VertexId>{"a", "b"}) == H("ab"));

  Hypergraph k3 = H("ab bc ca");
  Hypergraph minus_c = shrink_remove(k3, std::vector<VertexId>{"c"});
  CHECK(degree(minus_c, "a") == 1);
  CHECK(degree(minus_c, "b") == 1);
  CHECK(degree(minus_c, "a") == degree(k3, "a") - multiplicity(k3, "a", "c"));

  Hypergraph two = shrink(H("abc abd"), std::vector<VertexId>{"a", "b"});
  CHECK(two == H("ab ab"));
  CHECK_FALSE(is_simple(two));
  CHECK_THROWS_AS(shrink(k3, std::vector<VertexId>{"x"}), DomainError);
}

TEST_CASE("merge") {
  Hypergraph p3 = merge(H("ab"), "b", H("cd"), "c", "m");
  CHECK(p3.order() == 3);
  CHECK(degree(p3, "m") == 2);
  CHECK(is_connected(p3));

  Hypergraph bow = merge(H("ab bc ca"), "c", H("de ef fd"), "d", "v");
  CHECK(bow.order() == 5);
  CHECK(degree(bow, "v") == 4);
  CHECK(separating_vertices(bow) == bit(bow.index_of("v")));

  Hypergraph k1 = merge(H("a|"), "a", H("b|"), "b", "s");
  CHECK(k1.vertices() == std::vector<VertexId>{"s"});

  CHECK_THROWS_AS(merge(H("ab"), "a", H("ab"), "a", "x"), DomainError);
  CHECK_THROWS_AS(merge(H("ab"), "a", H("cd"), "c", "b"), DomainError);
}

TEST_CASE("replicate") {
  Hypergraph c5 = families::cycle(5);
  Hypergraph twice = replicate(c5, 2);
  CHECK(is_regular(twice, 4));
  CHECK(replicate(c5, 1) == c5);
  CHECK(replicate(families::complete(3), 3).size() == 9);
  CHECK_THROWS_AS(replicate(twice, 2), DomainError);
  CHECK_THROWS_AS(replicate(c5, 0), DomainError);
}

TEST_CASE("remove_edge keeps vertices") {
  Hypergraph h = remove_edge(H("ab bc"), 0);
  CHECK(h.order() == 3);
  CHECK(h.size() == 1);
  CHECK_THROWS_AS(remove_edge(h, 3), DomainError);
}

TEST_CASE("json round trip is canonical") {
  Hypergraph h = Hypergraph::build({"b", "a", "c"}, {{"c", "a"}, {"b", "a"}, {"a", "b"}});
  Json j = to_json(h);
  CHECK(j.dump() == R"({"edges":[["a","b"],["a","b"],["a","c"]],"vertices":["a","b","c"]})");
  Hypergraph back = hypergraph_from_json(j);
  CHECK(to_json(back) == j);
  CHECK_THROWS_AS(hypergraph_from_json(Json::parse(R"({"vertices":["a"],"edges":[["a"]]})")), ConstructionError);
  CHECK_THROWS_AS(hypergraph_from_json(Json::parse(R"({"edges":[]})")), ConstructionError);
}

TEST_CASE("rational json") {
  Json j = to_json(Rational(10, 3));
  CHECK(j["num"] == 10);
  CHECK(j["den"] == 3);
  CHECK(to_string(Rational(-4, 2)) == "-2");
}

TEST_CASE("shrink-degree identity and degree sum on all small hypergraphs") {
  EnumerationBounds b{.max_order = 5, .max_edges = 5, .max_edge_size = 3, .max_multiplicity = 2};
  std::size_t checked = 0;
  for_each_hypergraph(b, [&](const Hypergraph& h) {
    std::size_t by_edges = 0;
    for (EdgeIndex e = 0; e < h.size(); ++e) by_edges += h.edge_size(e);
    CHECK(degree_sum(h) == by_edges);
    for (VertexIndex v = 0; v < h.order(); ++v) {
      Hypergraph minus = shrink_remove(h, bit(v));
      for (VertexIndex u = 0; u < h.order(); ++u) {
        if (u == v) continue;
        CHECK(degree(minus, h.vertex(u)) == h.degree(u) - multiplicity(h, u, v));
        ++checked;
      }
    }
  });
  CHECK(checked > 1000);
}
