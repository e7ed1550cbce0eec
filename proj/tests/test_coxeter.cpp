#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "heaps/heaps.hpp"
#include "support.hpp"

using namespace heaps;
using namespace testsupport;

namespace {

// The battery of FC-finite groups used across the property tests.
std::vector<std::pair<std::string, CoxeterGraph>> fc_finite_battery() {
  std::vector<std::pair<std::string, CoxeterGraph>> battery;
  for (int n = 1; n <= 6; ++n) battery.emplace_back("A" + std::to_string(n), CoxeterGraph::family("A", n));
  for (int n = 2; n <= 5; ++n) battery.emplace_back("B" + std::to_string(n), CoxeterGraph::family("B", n));
  for (int n = 4; n <= 6; ++n) battery.emplace_back("D" + std::to_string(n), CoxeterGraph::family("D", n));
  for (int n = 6; n <= 8; ++n) battery.emplace_back("E" + std::to_string(n), CoxeterGraph::family("E", n));
  battery.emplace_back("F4", CoxeterGraph::family("F", 4));
  battery.emplace_back("H3", CoxeterGraph::family("H", 3));
  battery.emplace_back("H4", CoxeterGraph::family("H", 4));
  for (int m = 5; m <= 8; ++m) battery.emplace_back("I2(" + std::to_string(m) + ")",
                                                    CoxeterGraph::family("I2", m));
  return battery;
}

CoxeterGraph cycle_graph(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  CoxeterGraph g(std::move(names));
  for (int i = 0; i < n; ++i) g.set_bond(i, (i + 1) % n, 3);
  return g;
}

FamilyTag single_tag(const CoxeterGraph& g) {
  const FcClassification c = classify_fc_finite(g);
  REQUIRE(c.fc_finite);
  REQUIRE(c.components.size() == 1);
  return *c.components.front().tag;
}

}  // namespace

TEST_CASE("concurrency relation induced by a Coxeter graph") {
  const PieceAlphabet a2 = concurrency_from_coxeter(CoxeterGraph::family("A", 2));
  CHECK(a2.names() == std::vector<std::string>{"1", "2"});
  CHECK(a2.concurrent_pairs() == std::vector<std::pair<Piece, Piece>>{{0, 1}});

  const PieceAlphabet d5a = concurrency_from_coxeter(d5());
  CHECK(d5a.concurrent_pairs() ==
        std::vector<std::pair<Piece, Piece>>{{0, 2}, {1, 2}, {2, 3}, {3, 4}});

  // commuting generators induce no edge; their heaps split per label
  CoxeterGraph free2(std::vector<std::string>{"1", "2"});
  const PieceAlphabet loose = concurrency_from_coxeter(free2);
  CHECK(loose.concurrent_pairs().empty());
  const Heap h = heap_from_word(loose, std::vector<std::string>{"1", "2", "1", "2"});
  CHECK(connected_components(h).size() == 2);
}

TEST_CASE("fc heap condition 1: full-length alternating convex chains") {
  const CoxeterGraph a2 = CoxeterGraph::family("A", 2);
  const PieceAlphabet alphabet = concurrency_from_coxeter(a2);

  const auto violation =
      fc_violation(heap_from_word(alphabet, std::vector<std::string>{"1", "2", "1"}), a2);
  REQUIRE(violation.has_value());
  CHECK(violation->kind == FcViolation::Kind::AlternatingConvexChain);
  CHECK(violation->chain == std::vector<int>{0, 1, 2});

  CHECK(is_fc_heap(heap_from_word(alphabet, std::vector<std::string>{"1", "2"}), a2));
}

TEST_CASE("fc heap condition 2: equal-label covers") {
  const CoxeterGraph a1 = CoxeterGraph::family("A", 1);
  const PieceAlphabet alphabet = concurrency_from_coxeter(a1);
  const auto violation =
      fc_violation(heap_from_word(alphabet, std::vector<std::string>{"1", "1"}), a1);
  REQUIRE(violation.has_value());
  CHECK(violation->kind == FcViolation::Kind::EqualLabelCover);
  CHECK(violation->cover == std::pair<int, int>{0, 1});
}

TEST_CASE("the D5 heap is fully commutative") {
  // its (3,1,3) chain is not convex: the interval also contains the element
  // labelled 2
  const Heap h = d5_unranked_heap();
  CHECK(is_fc_heap(h, d5()));
  const Interval blocking = interval(h, 1, 5);
  CHECK(blocking.elements == std::vector<int>{1, 3, 4, 5});
}

TEST_CASE("infinite bonds are exempt from the chain condition") {
  const CoxeterGraph inf2 = CoxeterGraph::family("I2", CoxeterGraph::infinite_bond);
  const PieceAlphabet alphabet = concurrency_from_coxeter(inf2);
  CHECK(is_fc_heap(
      heap_from_word(alphabet, std::vector<std::string>{"1", "2", "1", "2", "1", "2"}), inf2));
  CHECK(!is_fc_heap(heap_from_word(alphabet, std::vector<std::string>{"1", "1"}), inf2));
}

TEST_CASE("fc heap check requires the induced alphabet") {
  CHECK_THROWS_AS(fc_violation(band3_heap(), d5()), AlphabetMismatchError);
}

TEST_CASE("classification battery: every family is recognized with its tag") {
  for (const auto& [name, graph] : fc_finite_battery()) {
    CAPTURE(name);
    CHECK(is_fc_finite(graph));
  }
  CHECK(single_tag(CoxeterGraph::family("A", 5)) == FamilyTag{"A", 5});
  CHECK(single_tag(CoxeterGraph::family("B", 2)) == FamilyTag{"B", 2});
  CHECK(single_tag(CoxeterGraph::family("B", 5)) == FamilyTag{"B", 5});
  CHECK(single_tag(d5()) == FamilyTag{"D", 5});
  CHECK(single_tag(CoxeterGraph::family("E", 6)) == FamilyTag{"E", 6});
  CHECK(single_tag(CoxeterGraph::family("E", 8)) == FamilyTag{"E", 8});
  CHECK(single_tag(CoxeterGraph::family("F", 4)) == FamilyTag{"F", 4});
  CHECK(single_tag(CoxeterGraph::family("H", 3)) == FamilyTag{"H", 3});
  CHECK(single_tag(CoxeterGraph::family("H", 4)) == FamilyTag{"H", 4});
  CHECK(single_tag(CoxeterGraph::family("I2", 7)) == FamilyTag{"I2", 7});
}

TEST_CASE("classification battery: graphs outside the list are rejected") {
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(!is_fc_finite(cycle_graph(n)));  // circuits never appear in the list
  }
  CHECK(!is_fc_finite(CoxeterGraph::family("I2", CoxeterGraph::infinite_bond)));

  // a degree-4 star
  CoxeterGraph star(std::vector<std::string>{"0", "1", "2", "3", "4"});
  for (int leaf = 1; leaf <= 4; ++leaf) star.set_bond(0, leaf, 3);
  CHECK(!is_fc_finite(star));

  // two branch vertices
  CoxeterGraph twin(std::vector<std::string>{"1", "2", "3", "4", "5", "6"});
  twin.set_bond(0, 1, 3);
  twin.set_bond(1, 2, 3);
  twin.set_bond(1, 3, 3);
  twin.set_bond(3, 4, 3);
  twin.set_bond(3, 5, 3);
  CHECK(!is_fc_finite(twin));

  // a 4-bond in the middle of a long path
  CoxeterGraph midfour(std::vector<std::string>{"1", "2", "3", "4", "5", "6"});
  midfour.set_bond(0, 1, 3);
  midfour.set_bond(1, 2, 3);
  midfour.set_bond(2, 3, 4);
  midfour.set_bond(3, 4, 3);
  midfour.set_bond(4, 5, 3);
  CHECK(!is_fc_finite(midfour));

  // two 4-bonds on a path
  CoxeterGraph affine_c(std::vector<std::string>{"1", "2", "3", "4"});
  affine_c.set_bond(0, 1, 4);
  affine_c.set_bond(1, 2, 3);
  affine_c.set_bond(2, 3, 4);
  CHECK(!is_fc_finite(affine_c));

  // a terminal bond of 6 on a path of three
  CoxeterGraph heavy(std::vector<std::string>{"1", "2", "3"});
  heavy.set_bond(0, 1, 6);
  heavy.set_bond(1, 2, 3);
  CHECK(!is_fc_finite(heavy));

  // arms (1,2,k) must carry only 3-bonds
  CoxeterGraph forked = CoxeterGraph::family("E", 6);
  forked.set_bond(4, 5, 4);
  CHECK(!is_fc_finite(forked));
}

TEST_CASE("multi-component graphs classify componentwise") {
  CoxeterGraph g(std::vector<std::string>{"1", "2", "3", "x", "y"});
  g.set_bond(0, 1, 3);
  g.set_bond(1, 2, 3);
  g.set_bond(3, 4, 4);
  const FcClassification c = classify_fc_finite(g);
  CHECK(c.fc_finite);
  REQUIRE(c.components.size() == 2);
  CHECK(*c.components[0].tag == FamilyTag{"A", 3});
  CHECK(*c.components[1].tag == FamilyTag{"B", 2});

  g.set_bond(2, 3, 3);  // joining end to end yields the path 1-2-3-x=y: a B5
  CHECK(single_tag(g) == FamilyTag{"B", 5});

  CoxeterGraph fork(std::vector<std::string>{"1", "2", "3", "x", "y"});
  fork.set_bond(0, 1, 3);
  fork.set_bond(1, 2, 3);
  fork.set_bond(3, 4, 4);
  fork.set_bond(1, 3, 3);  // fork at vertex 2 with a 4-bond on one arm: no family
  CHECK(!is_fc_finite(fork));
}

TEST_CASE("family constructor validation") {
  CHECK_THROWS_AS(CoxeterGraph::family("B", 1), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterGraph::family("D", 3), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterGraph::family("E", 5), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterGraph::family("Q", 3), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterGraph::family("I2", 2), std::invalid_argument);
}

TEST_CASE("branch surgery on E8 at the degree-3 vertex") {
  const CoxeterGraph e8 = CoxeterGraph::family("E", 8);
  const int s = e8.require("4");
  const int t = e8.require("5");

  const std::vector<CoxeterGraph> parts = gamma_delete(e8, s);
  REQUIRE(parts.size() == 3);
  std::multiset<std::pair<std::string, int>> tags;
  for (const CoxeterGraph& part : parts) {
    const FamilyTag tag = single_tag(part);
    tags.emplace(tag.family, tag.param);
  }
  CHECK(tags == std::multiset<std::pair<std::string, int>>{{"A", 1}, {"A", 2}, {"A", 4}});

  const CoxeterGraph component = gamma_component(e8, s, t);
  CHECK(single_tag(component) == FamilyTag{"A", 4});
  CHECK(component.generators() == std::vector<std::string>{"5", "6", "7", "8"});

  const CoxeterGraph arrow = gamma_arrow(e8, s, t);
  CHECK(single_tag(arrow) == FamilyTag{"A", 5});
  CHECK(arrow.generators() == std::vector<std::string>{"4", "5", "6", "7", "8"});
}

TEST_CASE("branch surgery on small graphs") {
  const CoxeterGraph a3 = CoxeterGraph::family("A", 3);
  const CoxeterGraph tail = gamma_arrow(a3, a3.require("2"), a3.require("3"));
  CHECK(tail.generators() == std::vector<std::string>{"2", "3"});
  CHECK(single_tag(tail) == FamilyTag{"A", 2});

  const CoxeterGraph d5g = d5();
  const std::vector<CoxeterGraph> parts = gamma_delete(d5g, d5g.require("3"));
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].generators() == std::vector<std::string>{"1"});
  CHECK(parts[1].generators() == std::vector<std::string>{"2"});
  CHECK(parts[2].generators() == std::vector<std::string>{"4", "5"});
  const CoxeterGraph arrow = gamma_arrow(d5g, d5g.require("3"), d5g.require("4"));
  CHECK(arrow.generators() == std::vector<std::string>{"3", "4", "5"});
  CHECK(single_tag(arrow) == FamilyTag{"A", 3});

  CHECK_THROWS_AS(gamma_component(d5g, d5g.require("1"), d5g.require("2")), NotAdjacentError);
  CHECK_THROWS_AS(gamma_arrow(d5g, d5g.require("1"), d5g.require("1")), NotAdjacentError);
}

TEST_CASE("non-A branches") {
  const CoxeterGraph d5g = d5();
  CHECK(non_a_branches(d5g, d5g.require("3")).empty());

  // path 1 = 2 - 3 - 4 with a 4-bond on the first edge: from vertex 3 the
  // branch towards 2 is of type B3
  const CoxeterGraph b4 = CoxeterGraph::family("B", 4);
  const std::vector<int> branches = non_a_branches(b4, b4.require("3"));
  REQUIRE(branches.size() == 1);
  CHECK(b4.generator(branches.front()) == "2");

  const CoxeterGraph e8 = CoxeterGraph::family("E", 8);
  CHECK(non_a_branches(e8, e8.require("4")).empty());

  CHECK_THROWS_AS(non_a_branches(d5g, d5g.require("1")), DegreeTooSmallError);
}

TEST_CASE("FC-finite graphs have at most one non-A branch at every vertex") {
  for (const auto& [name, graph] : fc_finite_battery()) {
    CAPTURE(name);
    for (int s = 0; s < graph.size(); ++s)
      if (graph.degree(s) >= 2) CHECK(non_a_branches(graph, s).size() <= 1);
  }
}

TEST_CASE("removing a maximal element of an FC heap leaves an FC heap") {
  const std::vector<std::pair<CoxeterGraph, std::optional<int>>> corpora = {
      {CoxeterGraph::family("A", 4), std::nullopt},
      {d5(), 10},
  };
  for (const auto& [group, bound] : corpora) {
    for (const Heap& h : enumerate_fc_heaps(group, bound)) {
      for (int top : h.maximal_elements()) {
        std::vector<int> rest;
        for (int e = 0; e < h.size(); ++e)
          if (e != top) rest.push_back(e);
        CHECK(is_fc_heap(subheap(h, rest), group));
      }
    }
  }
}

TEST_CASE("enumerated FC heaps have circuit-free concurrency subgraphs") {
  const std::vector<std::pair<CoxeterGraph, std::optional<int>>> corpora = {
      {CoxeterGraph::family("A", 4), std::nullopt},
      {CoxeterGraph::family("B", 3), std::nullopt},
      {CoxeterGraph::family("F", 4), std::nullopt},
      {d5(), 10},
  };
  for (const auto& [group, bound] : corpora)
    for (const Heap& h : enumerate_fc_heaps(group, bound))
      CHECK(!find_circuit(concurrency_subgraph(h)).has_value());
}
