// Graph normalization, DIMACS parsing, component decomposition, and the
// exhaustive colorer against hand-verifiable instances.

#include <cstdint>
#include <set>
#include <string>

#include "doctest.h"
#include "ehk/coloring.hpp"
#include "ehk/errors.hpp"
#include "ehk/graph.hpp"

using namespace ehk;

TEST_CASE("edge normalization: orientation, order, duplicates") {
  const Graph g = Graph::from_edges(4, {{3, 1}, {2, 1}, {1, 2}, {4, 3}});
  CHECK(g.n == 4);
  REQUIRE(g.edge_count() == 3);
  CHECK(g.edges[0] == std::make_pair(1u, 2u));
  CHECK(g.edges[1] == std::make_pair(1u, 3u));
  CHECK(g.edges[2] == std::make_pair(3u, 4u));
  CHECK(g.degree_of(1) == 2);
  CHECK(g.degree_of(4) == 1);
}

TEST_CASE("edge validation: loops and out-of-range labels") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{2, 2}}), ParseError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 4}}), ParseError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}}), ParseError);
}

TEST_CASE("DIMACS round trip") {
  const Graph g = Graph::complete(4);
  const Graph back = Graph::parse_dimacs(g.to_dimacs());
  CHECK(back.n == g.n);
  CHECK(back.edges == g.edges);
}

TEST_CASE("DIMACS parsing details") {
  const std::string text =
      "c a comment line\n"
      "p edge 5 4\n"
      "e 1 2\n"
      "e 2 1\n"
      "c another comment\n"
      "e 4 5\n"
      "\n"
      "e 3 4\n";
  const Graph g = Graph::parse_dimacs(text);
  CHECK(g.n == 5);
  CHECK(g.edge_count() == 3);  // e 2 1 duplicates e 1 2

  // "p col" is accepted as a problem line too.
  const Graph g2 = Graph::parse_dimacs("p col 2 1\ne 1 2\n");
  CHECK(g2.n == 2);
  CHECK(g2.edge_count() == 1);
}

TEST_CASE("DIMACS parse errors carry line numbers") {
  auto expect_error_with = [](const std::string& text, const std::string& frag) {
    try {
      Graph::parse_dimacs(text);
      FAIL("expected ParseError for: ", text);
    } catch (const ParseError& e) {
      const std::string what = e.what();
      CHECK_MESSAGE(what.find(frag) != std::string::npos,
                    "message '", what, "' lacks '", frag, "'");
    }
  };
  expect_error_with("e 1 2\n", "line 1");                  // edge before p
  expect_error_with("p edge 3 1\nq 1 2\n", "line 2");      // unknown record
  expect_error_with("p edge 3 1\ne 1\n", "line 2");        // short edge line
  expect_error_with("p edge x 1\n", "line 1");             // bad vertex count
  expect_error_with("p edge 3 1\np edge 3 1\n", "line 2"); // second p line
  expect_error_with("p edge 3 1\ne 1 9\n", "line 2");      // label out of range
  expect_error_with("c only comments\n", "problem line");  // no p line at all
}

TEST_CASE("components and induced subgraphs") {
  // Two components: a triangle {1,3,5} and an edge {2,6}; vertex 4 isolated.
  const Graph g =
      Graph::from_edges(6, {{1, 3}, {3, 5}, {1, 5}, {2, 6}});
  const auto comps = g.components();
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<std::uint32_t>{1, 3, 5});
  CHECK(comps[1] == std::vector<std::uint32_t>{2, 6});
  CHECK(comps[2] == std::vector<std::uint32_t>{4});
  CHECK_FALSE(g.connected());
  CHECK(Graph::complete(3).connected());
  CHECK(Graph::from_edges(1, {}).connected());

  const Graph tri = g.induced(comps[0]);
  CHECK(tri.n == 3);
  CHECK(tri.edge_count() == 3);  // relabeled K3
  const Graph pair = g.induced(comps[1]);
  CHECK(pair.n == 2);
  REQUIRE(pair.edge_count() == 1);
  CHECK(pair.edges[0] == std::make_pair(1u, 2u));
}

TEST_CASE("edge-bit encoding round trips over all 3-vertex graphs") {
  for (std::uint64_t bits = 0; bits < 8; ++bits) {
    const Graph g = Graph::from_edge_bits(3, bits);
    CHECK(g.to_edge_bits() == bits);
  }
  // The encoding enumerates pairs (1,2),(1,3),(2,3),...
  const Graph g = Graph::from_edge_bits(4, 0b1u);
  REQUIRE(g.edge_count() == 1);
  CHECK(g.edges[0] == std::make_pair(1u, 2u));
  CHECK(Graph::complete(4).to_edge_bits() == 0b111111u);
}

TEST_CASE("named graph constructors") {
  const Graph k4 = Graph::complete(4);
  CHECK(k4.edge_count() == 6);
  const Graph c5 = Graph::cycle(5);
  CHECK(c5.edge_count() == 5);
  CHECK(c5.degree_of(1) == 2);
  CHECK(c5.degree_of(5) == 2);
}

TEST_CASE("exhaustive colorer on decided instances") {
  // K_n is k-colorable iff k >= n.
  for (std::uint32_t n = 2; n <= 5; ++n) {
    for (std::uint32_t k = 2; k <= 5; ++k) {
      const ColoringResult r = find_coloring(Graph::complete(n), k);
      CHECK(r.colorable == (k >= n));
      if (r.colorable)
        CHECK(is_proper_coloring(Graph::complete(n), k, r.coloring));
    }
  }
  // Odd cycles need 3 colors, even cycles 2.
  CHECK_FALSE(find_coloring(Graph::cycle(5), 2).colorable);
  CHECK(find_coloring(Graph::cycle(5), 3).colorable);
  CHECK(find_coloring(Graph::cycle(6), 2).colorable);
  // The edgeless graph is 1-colorable.
  CHECK(find_coloring(Graph::from_edges(4, {}), 1).colorable);
}

TEST_CASE("exhaustive colorer on the Petersen graph") {
  // Outer cycle 1..5, inner pentagram 6..10, spokes i -- i+5.
  const Graph petersen = Graph::from_edges(
      10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5},
           {6, 8}, {8, 10}, {7, 10}, {7, 9}, {6, 9},
           {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}});
  CHECK_FALSE(find_coloring(petersen, 2).colorable);
  const ColoringResult r = find_coloring(petersen, 3);
  REQUIRE(r.colorable);
  CHECK(is_proper_coloring(petersen, 3, r.coloring));
  // A wrong assignment is rejected.
  std::vector<std::uint32_t> bad(10, 0);
  CHECK_FALSE(is_proper_coloring(petersen, 3, bad));
}

TEST_CASE("is_proper_coloring validates shape") {
  const Graph g = Graph::complete(3);
  CHECK_FALSE(is_proper_coloring(g, 3, {0, 1}));        // too short
  CHECK_FALSE(is_proper_coloring(g, 2, {0, 1, 2}));     // color out of range
  CHECK(is_proper_coloring(g, 3, {0, 1, 2}));
}
