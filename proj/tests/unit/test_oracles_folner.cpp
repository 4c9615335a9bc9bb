#include "doctest.h"

#include <set>
#include <thread>

#include "gomega/error.hpp"
#include "gomega/folner.hpp"
#include "gomega/growth.hpp"
#include "gomega/oracles.hpp"
#include "gomega/schreier.hpp"

using namespace gomega;

TEST_CASE("Cayley oracle stars") {
  CayleyOracle o(OmegaWord::parse(":012"), 8);
  CHECK(o.root() == 0);
  CHECK(o.degree_bound() == 4);
  CHECK(o.depth() == 8);
  CHECK(o.omega() == OmegaWord::parse(":012"));
  const auto star = o.star(0);
  REQUIRE(star.size() == 4);
  std::set<OracleVertex> nb;
  for (const auto& e : star) nb.insert(e.neighbour);
  CHECK(nb.size() == 4);
  CHECK(star[0].label == "a");
  CHECK(star[3].label == "d");
  // generators are involutions
  for (std::size_t s = 0; s < 4; ++s) CHECK(o.star(star[s].neighbour)[s].neighbour == 0);
  CHECK(o.name(3) == "g3");
  CHECK(o.orbit_point(0, 3) == 7);  // identity fixes 111
  CHECK(o.orbit_point(star[0].neighbour, 3) == 3);  // a(111) = 011
  CHECK_THROWS_AS(o.orbit_point(0, 9), InvalidArgument);
  CHECK_THROWS_AS(o.star(1'000'000), InvalidArgument);
  CHECK_THROWS_AS(CayleyOracle(OmegaWord::parse(":012"), 0), InvalidArgument);
}

TEST_CASE("Cayley oracle answers concurrent queries consistently") {
  CayleyOracle o(OmegaWord::parse(":012"), 10);
  const auto ball = materialize_ball(o, 3, 1000);
  std::vector<std::thread> threads;
  std::vector<std::vector<OracleVertex>> seen(4);
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      for (auto id : ball.ids)
        for (const auto& e : o.star(id)) seen[t].push_back(e.neighbour);
    });
  for (auto& t : threads) t.join();
  for (int t = 1; t < 4; ++t) CHECK(seen[t] == seen[0]);
}

TEST_CASE("Upsilon ray and binary tree oracles") {
  UpsilonRayOracle ray;
  CHECK(ray.star(0).size() == 4);
  CHECK(ray.star(1).size() == 4);
  CHECK(ray.star(2).size() == 4);
  std::size_t to_next = 0;
  for (const auto& e : ray.star(1)) to_next += e.neighbour == 2;
  CHECK(to_next == 2);
  CHECK(ray.name(5) == "5");

  BinaryTreeOracle tree;
  CHECK(tree.root() == 1);
  CHECK(tree.star(1).size() == 2);
  CHECK(tree.star(5).size() == 3);
  CHECK(tree.star(5)[0].neighbour == 2);
  CHECK(tree.star(5)[0].label == "up");
  CHECK(tree.degree_bound() == 3);
  CHECK_THROWS_AS(tree.star(0), InvalidArgument);
}

TEST_CASE("oracle factory") {
  CHECK(make_oracle("upsilon-ray", 0)->root() == 0);
  CHECK(make_oracle("binary-tree", 0)->root() == 1);
  const auto c = make_oracle("cayley::012", 6);
  CHECK(c->degree_bound() == 4);
  CHECK(dynamic_cast<CayleyOracle*>(c.get()) != nullptr);
  CHECK_THROWS_AS(make_oracle("torus", 3), InvalidArgument);
}

TEST_CASE("materialized balls") {
  UpsilonRayOracle ray;
  const auto b = materialize_ball(ray, 4, 100);
  CHECK(b.graph->vertex_count() == 5);
  CHECK(b.window.radius == 4);
  CHECK(b.window.distance == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(b.graph->loop_count(0) == 3);
  CHECK(b.graph->multiplicity(1, 2) == 2);

  const auto w = OmegaWord::parse(":012");
  const unsigned depth = stabilized_depth(w, 6, Limits{});
  CayleyOracle o(w, depth);
  const auto cb = materialize_ball(o, 6, 100000);
  CHECK(cb.graph->vertex_count() == ball_sizes(w, 6).gamma[6]);
  for (Vertex v = 0; v < cb.graph->vertex_count(); ++v)
    if (cb.window.interior(v)) CHECK(cb.graph->degree(v) == 4);
  CHECK_THROWS_AS(materialize_ball(o, 6, 50), ResourceLimit);
}

TEST_CASE("Cayley window covers") {
  CayleyOracle o(OmegaWord::parse(":012"), 10);
  const auto c = cayley_window_cover(o, 6, 2, 100000);
  REQUIRE(c.window);
  const auto v = verify_covering(c);
  CHECK(v.ok);
  CHECK(v.window_radius == 6);
  CHECK_THROWS_AS(verify_covering(cayley_window_cover(o, 2, 4, 1000)), WindowTooSmall);
}

TEST_CASE("Folner ratios on the ray decay like 1/k") {
  UpsilonRayOracle ray;
  const auto r = folner_balls(ray, 40);
  REQUIRE(r.ball_sizes.size() == 41);
  for (unsigned k = 0; k <= 40; ++k) {
    CHECK(r.ball_sizes[k] == k + 1);
    CHECK(r.boundary_ratio[k] <= 1.0 / (k + 1) + 1e-15);
  }
  CHECK(r.root_growth.size() == 40);
  CHECK(r.subexponential_evidence);
}

TEST_CASE("Folner ratios on Cayley balls and the binary tree") {
  const auto w = OmegaWord::parse(":012");
  CayleyOracle o(w, stabilized_depth(w, 10, Limits{}));
  const auto c = folner_balls(o, 9);
  CHECK(c.ball_sizes[1] == 5);
  CHECK(c.ball_sizes[2] == 11);
  for (std::size_t k = 1; k < c.ball_sizes.size(); ++k) CHECK(c.ball_sizes[k] >= c.ball_sizes[k - 1]);
  CHECK(c.boundary_ratio.back() < c.boundary_ratio[1]);

  BinaryTreeOracle tree;
  const auto t = folner_balls(tree, 12);
  CHECK(t.ball_sizes[3] == 15);
  CHECK_FALSE(t.subexponential_evidence);
  CHECK(t.boundary_ratio.back() > 0.45);

  const auto g = schreier_graph(w, 3);
  const auto f = folner_balls(*g.graph, 0, 10);
  CHECK(f.ball_sizes.back() == 8);
  CHECK(f.boundary_ratio.back() == 0.0);
  CHECK_THROWS_AS(folner_balls(*g.graph, 0, 0), InvalidArgument);
}
