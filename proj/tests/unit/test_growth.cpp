#include "doctest.h"

#include "gomega/error.hpp"
#include "gomega/growth.hpp"
#include "oracles.hpp"

using namespace gomega;

TEST_CASE("small growth values") {
  const auto census = ball_sizes(OmegaWord::parse(":012"), 4);
  REQUIRE(census.gamma.size() == 5);
  CHECK(census.gamma[0] == 1);
  CHECK(census.gamma[1] == 5);
  CHECK(census.gamma[2] == 11);
  CHECK(census.stabilized);
  CHECK(census.depth >= 1);
}

TEST_CASE("growth is non-decreasing and at most five-fold per step") {
  for (const char* spec : {":012", ":01", "0:12"}) {
    const auto g = ball_sizes(OmegaWord::parse(spec), 7).gamma;
    for (std::size_t r = 1; r < g.size(); ++r) {
      CHECK(g[r] >= g[r - 1]);
      CHECK(g[r] <= 5 * g[r - 1]);
    }
  }
}

TEST_CASE("growth matches brute force at a fixed large depth") {
  const auto census = ball_sizes(OmegaWord::parse(":012"), 5);
  CHECK(census.gamma == oracle::growth_by_brute_force(":012", 5, 12));
}

TEST_CASE("enumerate_ball at a fixed depth") {
  const auto w = OmegaWord::parse(":012");
  const auto ball = enumerate_ball(w, 2, 10, 1000);
  CHECK(ball.depth == 10);
  CHECK(ball.perms.size() == 11);
  CHECK(ball.distance[0] == 0);
  CHECK(ball.spheres == std::vector<std::size_t>{1, 4, 6});
  // a shallow depth merges elements
  CHECK(enumerate_ball(w, 2, 1, 1000).perms.size() < 11);
  CHECK_THROWS_AS(enumerate_ball(w, 6, 10, 20), ResourceLimit);
}

TEST_CASE("stabilized depth respects the limits") {
  const auto w = OmegaWord::parse(":012");
  const unsigned d = stabilized_depth(w, 4, Limits{});
  CHECK(d >= 2);
  CHECK(stabilized_depth(w, 4, Limits{}, d - 1) == d);
  Limits tight;
  tight.max_depth = 2;
  CHECK_THROWS_AS(ball_sizes(w, 6, tight), ResourceLimit);
}
