#include <doctest.h>

#include "fixtures.hpp"
#include "hgc/enumerate.hpp"
#include "hgc/errors.hpp"
#include "hgc/theorems.hpp"

using namespace hgc;
using fx::H;
using fx::lists;

namespace {

const Property O = builtin("O");
const Property D1 = builtin("D:1");

// Two K_n's joined by one ordinary edge.
Hypergraph joined_cliques(std::size_t n) {
  Hypergraph a = families::complete(n);
  std::vector<VertexId> names;
  for (const auto& v : a.vertices()) names.push_back("x" + v);
  Hypergraph u = disjoint_union(a, relabel(a, names));
  std::vector<std::vector<VertexId>> edges;
  for (VertexMask e : u.edges()) edges.push_back(u.names(e));
  edges.push_back({a.vertex(0), names[0]});
  return Hypergraph::build(u.vertices(), edges);
}

std::string clause_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const PreconditionError& e) {
    return e.clause();
  }
  return "";
}

}  // namespace

TEST_CASE("gallai quantities") {
  CHECK(r_delta(3) == Rational(8, 3));
  GallaiQuantities q = gallai_quantities(4);
  CHECK(q.r_delta == Rational(7, 2));
  CHECK(q.a_coefficient == Rational(2, 22));
  CHECK(a_bound(3, 13) == Rational(40));
  CHECK(a_bound(4, 11) == Rational(45));
  for (std::size_t n = 1; n < 10; ++n) CHECK(a_bound(2, n) == Rational(2 * static_cast<std::int64_t>(n)));
  CHECK_THROWS_AS(a_bound(1, 3), DomainError);
  CHECK_THROWS_AS(sigma(families::complete(3), 1), DomainError);
}

TEST_CASE("sigma") {
  CHECK(sigma(families::complete(3), 3) == Rational(2));
  CHECK(sigma(families::complete(2), 3) == Rational(10, 3));
  CHECK(sigma(families::cycle(5), 4) == Rational(15, 2));
  for (std::size_t delta = 3; delta <= 8; ++delta) {
    const Rational rd = r_delta(delta);
    for (std::size_t b = 1; b <= delta; ++b) {
      const Rational expected = Rational(static_cast<std::int64_t>(b)) * (rd - static_cast<std::int64_t>(b) + 1);
      CHECK(sigma(families::complete(b), delta) == expected);
    }
  }
}

TEST_CASE("is_gallai_tree") {
  CHECK(is_gallai_tree(families::cycle(5), O));
  CHECK(is_gallai_tree(fx::bowtie(), O));
  CHECK_FALSE(is_gallai_tree(families::cycle(4), O));
  CHECK(is_gallai_tree(families::cycle(4), D1));
  CHECK(is_gallai_tree(H("abc cd"), O));
  CHECK_THROWS_AS(is_gallai_tree(H("ab cd"), O), DomainError);
  CHECK_THROWS_AS(is_gallai_tree(H("ab ab"), O), DomainError);
  Hypergraph renamed = relabel(fx::bowtie(), {"e", "d", "c", "b", "a"});
  CHECK(is_gallai_tree(renamed, O));
}

TEST_CASE("is_epsilon_delta") {
  CHECK(is_epsilon_delta(families::complete(3), 3));
  CHECK(is_epsilon_delta(joined_cliques(3), 3));
  CHECK_FALSE(is_epsilon_delta(families::path(3), 3));
  CHECK_FALSE(is_epsilon_delta(fx::bowtie(), 3));
  CHECK_THROWS_AS(is_epsilon_delta(H("ab cd"), 3), DomainError);
}

TEST_CASE("verify_theorem3") {
  Theorem3Report c5 = verify_theorem3(families::cycle(5), O, lists(5, {1, 2}));
  CHECK(c5.pass);
  REQUIRE(c5.structure.blocks.size() == 1);
  CHECK(c5.structure.blocks[0].verdict == BlockVerdict::Brick);
  CHECK(c5.structure.blocks[0].brick == BrickClassification{BrickKind::OddCycleMultiple, 1, 5});

  Theorem3Report d = verify_theorem3(families::cycle(5), D1, lists(5, {1}));
  CHECK(d.pass);
  CHECK(d.structure.blocks[0].verdict == BlockVerdict::FPRegular);

  Theorem3Report k3 = verify_theorem3(families::complete(3), O, lists(3, {1, 2}));
  CHECK(k3.structure.blocks[0].brick == BrickClassification{BrickKind::CompleteMultiple, 1, 3});

  CHECK_THROWS_AS(verify_theorem3(families::path(3), O, lists(3, {1, 2})), DomainError);
}

TEST_CASE("verify_theorem4") {
  Hypergraph c5 = families::cycle(5);
  Theorem4Report r = verify_theorem4(c5, VectorFunction::constant(5, {1, 1}));
  CHECK(r.pass);
  CHECK_FALSE(r.partitionable);
  CHECK(r.certificate_valid);
  CHECK(verify_theorem4(families::cycle(4), VectorFunction::constant(4, {1, 1})).pass);
  CHECK_THROWS_AS(verify_theorem4(families::complete(4), VectorFunction::constant(4, {1, 1})), DomainError);
}

TEST_CASE("verify_brooks") {
  BrooksReport c5 = verify_brooks(families::cycle(5), O);
  CHECK(c5.bound == 3);
  CHECK(c5.chi_list == 3);
  CHECK(c5.equality);
  CHECK(c5.clause == "tC");
  CHECK(c5.pass);

  BrooksReport k4 = verify_brooks(families::complete(4), O);
  CHECK(k4.bound == 4);
  CHECK(k4.chi_list == 4);
  CHECK(k4.clause == "tK");
  CHECK(k4.pass);

  BrooksReport c4 = verify_brooks(families::cycle(4), O);
  CHECK(c4.bound == 3);
  CHECK(c4.chi_list == 2);
  CHECK_FALSE(c4.equality);
  CHECK(c4.pass);

  BrooksReport d = verify_brooks(families::cycle(4), D1);
  CHECK(d.equality);
  CHECK(d.clause == "F(P)");

  Property non_additive = Property::from_hypergraph_predicate(
      "connected", [](const Hypergraph& h) { return h.order() <= 1 || is_connected(h); }, false, 1);
  CHECK_THROWS_AS(verify_brooks(families::cycle(4), non_additive), DomainError);
}

TEST_CASE("verify_theorem6") {
  Theorem6Report c5 = verify_theorem6(families::cycle(5), O, lists(5, {1, 2}));
  CHECK_FALSE(c5.colorable);
  CHECK(c5.pass);
  CHECK(verify_theorem6(families::path(3), O, lists(3, {1, 2})).colorable);
  Theorem6Report k3 = verify_theorem6(families::complete(3), D1, lists(3, {1}));
  CHECK_FALSE(k3.colorable);
  CHECK(k3.pass);
  CHECK(k3.structure->blocks[0].fp_regular);
  CHECK(k3.structure->blocks[0].brick.kind == BrickKind::CompleteMultiple);
  CHECK_THROWS_AS(verify_theorem6(families::complete(4), O, lists(4, {1, 2})), DomainError);
}

TEST_CASE("verify_gallai_bound preconditions") {
  CHECK(clause_of([] { verify_gallai_bound(families::complete(4), O, lists(4, {1, 2, 3})); }) == "complete");
  CHECK(clause_of([] { verify_gallai_bound(families::cycle(5), D1, lists(5, {1})); }) == "k");
  CHECK(clause_of([] { verify_gallai_bound(families::cycle(5), O, lists(5, {1, 2})); }) == "delta");
  CHECK(clause_of([] { verify_gallai_bound(families::path(3), D1, lists(3, {1, 2})); }) == "critical");
  CHECK(clause_of([] { verify_gallai_bound(families::path(3), D1, ListAssignment{{{1, 2}, {1}, {1, 2}}}); }) ==
        "lists");
  Property non_additive = Property::from_hypergraph_predicate(
      "connected", [](const Hypergraph& h) { return h.order() <= 1 || is_connected(h); }, false, 1);
  CHECK(clause_of([&] { verify_gallai_bound(families::cycle(5), non_additive, lists(5, {1, 2, 3})); }) ==
        "additive");
}

TEST_CASE("complete graphs sit below the bound") {
  for (std::size_t delta = 3; delta <= 5; ++delta) {
    Hypergraph k = families::complete(delta + 1);
    CHECK(Rational(static_cast<std::int64_t>(degree_sum(k))) < a_bound(delta, k.order()));
  }
}

TEST_CASE("verify_sigma_lemmas") {
  SigmaLemmaReport k4 = verify_sigma_lemmas(families::complete(4), O, 4);
  CHECK(k4.sigma == Rational(2));
  CHECK(k4.epsilon_delta);
  CHECK(k4.pass);

  SigmaLemmaReport two = verify_sigma_lemmas(joined_cliques(4), O, 4);
  CHECK(two.epsilon_delta);
  CHECK(two.sigma >= 2);
  CHECK(two.pass);

  SigmaLemmaReport c5 = verify_sigma_lemmas(families::cycle(5), O, 4);
  CHECK_FALSE(c5.epsilon_delta);
  CHECK(c5.sigma == Rational(15, 2));
  CHECK(c5.pass);

  CHECK_THROWS_AS(verify_sigma_lemmas(families::complete(5), O, 4), DomainError);
  CHECK_THROWS_AS(verify_sigma_lemmas(families::cycle(4), O, 4), DomainError);
  CHECK_THROWS_AS(verify_sigma_lemmas(families::complete(3), O, 2), DomainError);
}

TEST_CASE("report json carries exact rationals") {
  Json j = to_json(families::cycle(5), verify_sigma_lemmas(families::cycle(5), O, 4));
  CHECK(j["sigma"]["num"] == 15);
  CHECK(j["sigma"]["den"] == 2);
  CHECK(to_json(verify_brooks(families::cycle(5), O))["clause"] == "tC");
}
