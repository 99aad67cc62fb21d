#include <catch2/catch_amalgamated.hpp>

#include "heawood/enumerate.hpp"
#include "heawood/graph.hpp"
#include "oracles.hpp"

using namespace heawood;

TEST_CASE("build normalizes and validates") {
  Graph t = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(t.vertex_count() == 3);
  CHECK(t.edge_count() == 3);

  Graph dedup = Graph::build(4, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(dedup.edge_count() == 1);

  CHECK_THROWS_AS(Graph::build(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::build(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::build(0, {}), std::invalid_argument);
}

TEST_CASE("degree bookkeeping") {
  Graph g = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(1) == 1);
  CHECK(g.min_degree() == 1);
  CHECK(g.max_degree() == 3);
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(1, 2));
}

TEST_CASE("families match their counts") {
  Graph octa = octahedron();
  CHECK(octa.vertex_count() == 6);
  CHECK(octa.edge_count() == 12);
  CHECK(regular_degree(octa) == std::optional<int>(4));

  CHECK(complete_graph(4).edge_count() == 6);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(path_graph(6).edge_count() == 5);
  CHECK(empty_graph(3).edge_count() == 0);
  CHECK(complete_bipartite(2, 3).edge_count() == 6);
  CHECK(cube_q3().vertex_count() == 8);
  CHECK(cube_q3().edge_count() == 12);
  CHECK(prism_3().edge_count() == 9);
  CHECK(petersen().edge_count() == 15);

  // double wheel on cycle n: n + 2 vertices, 3n edges
  for (int n = 3; n <= 9; ++n) {
    Graph dw = double_wheel(n);
    CHECK(dw.vertex_count() == n + 2);
    CHECK(dw.edge_count() == 3 * n);
  }

  // near complete on parameter n: n+1 vertices, spectrum checked elsewhere
  Graph nc = near_complete(5);
  CHECK(nc.vertex_count() == 6);
  CHECK(nc.edge_count() == 5 * 4 / 2 + 1);

  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(family("nonesuch"), std::invalid_argument);
  CHECK_THROWS_AS(family("cycle", {}), std::invalid_argument);
  CHECK_THROWS_AS(family("octahedron", {3}), std::invalid_argument);
}

TEST_CASE("family dispatcher reaches every constructor") {
  for (const auto& name : family_names()) {
    std::vector<int> params;
    if (name == "complete_bipartite") params = {2, 3};
    else if (name == "cycle" || name == "double_wheel") params = {4};
    else if (name == "complete" || name == "path" || name == "empty" || name == "near_complete")
      params = {3};
    Graph g = family(name, params);
    CHECK(g.vertex_count() >= 1);
  }
}

TEST_CASE("join builds the right edge counts") {
  CHECK(join(empty_graph(2), cycle_graph(4)) == octahedron());
  CHECK(join(complete_graph(1), complete_graph(1)) == complete_graph(2));

  for (int n = 3; n <= 7; ++n) {
    Graph dw = join(cycle_graph(n), empty_graph(2));
    CHECK(dw.edge_count() == n + 2 * n);
  }

  // |E(join)| = e1 + e2 + n1*n2 over assorted pairs
  const std::vector<Graph> parts = {complete_graph(3), cycle_graph(5), path_graph(4),
                                    empty_graph(2),    petersen(),     complete_bipartite(2, 2)};
  for (const auto& g1 : parts)
    for (const auto& g2 : parts) {
      Graph j = join(g1, g2);
      CHECK(j.edge_count() ==
            g1.edge_count() + g2.edge_count() + g1.vertex_count() * g2.vertex_count());
      CHECK(j.vertex_count() == g1.vertex_count() + g2.vertex_count());
    }

  // join is symmetric up to isomorphism
  CHECK(is_isomorphic(join(cycle_graph(4), complete_graph(3)),
                      join(complete_graph(3), cycle_graph(4))));
}

TEST_CASE("complement and disjoint union") {
  for (int n = 2; n <= 7; ++n) CHECK(complement(complete_graph(n)) == empty_graph(n));
  CHECK(is_isomorphic(complement(cycle_graph(5)), cycle_graph(5)));

  for (const auto& g : generate_connected(5)) CHECK(complement(complement(g)) == g);

  Graph two = disjoint_union(complete_graph(3), complete_graph(3));
  CHECK(two.vertex_count() == 6);
  CHECK(two.edge_count() == 6);
  CHECK(component_count(two) == 2);
}

TEST_CASE("degree sum equals twice the edge count") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : generate_connected(n)) {
      int sum = 0;
      for (int v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
      CHECK(sum == 2 * g.edge_count());
    }
}

TEST_CASE("subset degree equals the boundary count") {
  Graph octa = octahedron();
  // hubs 0,1; cycle 2..5; {0,2,3} spans a triangle
  CHECK(subset_degree(octa, VertexSubset::of({0, 2, 3})) == 6);

  for (int n = 3; n <= 7; ++n) {
    Graph k = complete_graph(n);
    CHECK(subset_degree(k, VertexSubset::of({0})) == n - 1);
  }

  CHECK_THROWS_AS(subset_degree(octa, VertexSubset::of({})), std::invalid_argument);
  CHECK_THROWS_AS(subset_degree(octa, VertexSubset::of({0, 1, 2, 3, 4, 5})),
                  std::invalid_argument);
}

TEST_CASE("subset degree agrees with the per-vertex formula exhaustively") {
  for (int n = 2; n <= 8; ++n)
    for (const auto& g : generate_connected(n))
      for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
          if ((mask >> v) & 1) members.push_back(v);
        REQUIRE(subset_degree(g, VertexSubset::of(members)) ==
                oracles::subset_degree_formula(g, members));
      }
}

TEST_CASE("edge list text round trips bit-exactly") {
  const std::vector<Graph> graphs = {octahedron(), petersen(), path_graph(1), cycle_graph(3),
                                     complete_bipartite(3, 4)};
  for (const auto& g : graphs) {
    const std::string text = to_edge_list(g);
    CHECK(parse_edge_list(text) == g);
    CHECK(to_edge_list(parse_edge_list(text)) == text);
  }

  Graph g = parse_edge_list("# triangle\n3 3\n0 1\n1 2  # chord comment\n0 2\n");
  CHECK(g == complete_graph(3));

  // reader normalizes reversed endpoints
  CHECK(parse_edge_list("2 1\n1 0\n") == complete_graph(2));

  CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n0 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("not a graph"), std::invalid_argument);
}
