#include "doctest.h"

#include "gomega/error.hpp"
#include "gomega/graph.hpp"

using namespace gomega;

TEST_CASE("loops count once toward the degree") {
  WeightedGraph g(3);
  const auto e0 = g.add_edge(0, 1, {2.0, 1.0}, {2.0, -1.0}, "x");
  const auto l = g.add_loop(1, 0.5, "b");
  g.add_edge(1, 2);
  g.add_edge(1, 2);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 4);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 4);
  CHECK(g.degree(2) == 2);
  CHECK(g.max_degree() == 4);
  CHECK(g.edge(l).is_loop());
  CHECK(g.other_end(e0, 0) == 1);
  CHECK(g.other_end(l, 1) == 1);
  CHECK(g.weight_at(e0, 0) == Weight{2.0, 1.0});
  CHECK(g.weight_at(e0, 1) == Weight{2.0, -1.0});
  CHECK(g.loop_count(1) == 1);
  CHECK(g.loop_count(0) == 0);
  CHECK(g.multiplicity(1, 2) == 2);
  CHECK(g.multiplicity(2, 1) == 2);
  CHECK(g.multiplicity(0, 2) == 0);
  CHECK(g.max_abs_weight() == doctest::Approx(std::sqrt(5.0)));
  CHECK(g.is_self_adjoint());
  CHECK(g.name(2) == "2");
  CHECK(g.find("1") == Vertex{1});
  CHECK_FALSE(g.find("7"));
  CHECK(g.edge(e0).label == "x");
  REQUIRE(g.star(1).size() == 4);
  CHECK(g.star(1)[0] == e0);
}

TEST_CASE("self-adjointness and weight updates") {
  WeightedGraph g(2, {"p", "q"});
  const auto e = g.add_edge(0, 1, {0.0, 1.0}, {0.0, -1.0});
  CHECK(g.is_self_adjoint());
  g.set_weight_at(e, 1, {0.0, 1.0});
  CHECK_FALSE(g.is_self_adjoint());
  WeightedGraph h(1);
  h.add_loop(0, {1.0, 0.5});
  CHECK_FALSE(h.is_self_adjoint());
  CHECK(g.find("q") == Vertex{1});
}

TEST_CASE("graph argument errors") {
  WeightedGraph g(2);
  CHECK_THROWS_AS(g.add_edge(0, 2), InvalidArgument);
  CHECK_THROWS_AS(g.add_loop(5), InvalidArgument);
  const auto e = g.add_edge(0, 0);
  CHECK(g.edge(e).is_loop());
  WeightedGraph h(3);
  const auto f = h.add_edge(0, 1);
  CHECK_THROWS_AS(h.weight_at(f, 2), InvalidArgument);
  CHECK_THROWS_AS(h.other_end(f, 2), InvalidArgument);
  CHECK_THROWS_AS(WeightedGraph(2, {"only-one"}), InvalidArgument);
}

TEST_CASE("markov and constant weights") {
  WeightedGraph g(2);
  g.add_edge(0, 1);
  g.add_loop(0);
  g.add_loop(0);
  g.add_loop(1);
  const auto m = with_markov_weights(g);
  for (Vertex v = 0; v < 2; ++v)
    for (EdgeId e : m.star(v)) CHECK(m.weight_at(e, v) == Weight{1.0 / g.degree(v), 0.0});
  const auto c = with_constant_weights(g, {0.25, -1.0});
  for (const auto& e : c.edges()) {
    CHECK(e.wu == Weight{0.25, -1.0});
    CHECK(e.wv == Weight{0.25, -1.0});
  }
}

TEST_CASE("breadth-first distances") {
  WeightedGraph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_loop(3);
  CHECK(bfs_distances(g, 0) == std::vector<int>{0, 1, 2, 3, -1});
  CHECK(bfs_distances(g, 0, 1) == std::vector<int>{0, 1, -1, -1, -1});
  CHECK(bfs_distances(g, 2) == std::vector<int>{2, 1, 0, 1, -1});
}
