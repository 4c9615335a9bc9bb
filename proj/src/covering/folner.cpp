#include "gomega/folner.hpp"

#include <cmath>

#include "gomega/error.hpp"

namespace gomega {

namespace {

bool clearly_slowing(const std::vector<std::size_t>& balls) {
  const std::size_t k_max = balls.size() - 1;
  if (k_max < 4) return false;
  const auto mean_log_growth = [&](std::size_t from, std::size_t to) {
    double s = 0.0;
    for (std::size_t k = from; k <= to; ++k)
      s += std::log(static_cast<double>(balls[k]) / static_cast<double>(balls[k - 1]));
    return s / static_cast<double>(to - from + 1);
  };
  const std::size_t q = k_max / 4;
  const double early = mean_log_growth(q + 1, 2 * q);
  const double late = mean_log_growth(k_max - q + 1, k_max);
  return late < 0.9 * early;
}

}  // namespace

FolnerReport folner_balls(const WeightedGraph& g, Vertex v, unsigned k_max) {
  if (k_max == 0) throw InvalidArgument("k_max must be at least 1");
  const auto dist = bfs_distances(g, v, static_cast<int>(k_max) + 1);
  std::vector<std::size_t> sphere(k_max + 2, 0);
  for (int d : dist)
    if (d >= 0) ++sphere[d];

  FolnerReport r;
  std::size_t ball = 0;
  for (unsigned k = 0; k <= k_max; ++k) {
    ball += sphere[k];
    r.ball_sizes.push_back(ball);
    r.boundary_ratio.push_back(static_cast<double>(sphere[k + 1]) /
                               static_cast<double>(ball));
    if (k >= 1)
      r.root_growth.push_back(std::pow(static_cast<double>(ball), 1.0 / k));
  }
  r.subexponential_evidence = clearly_slowing(r.ball_sizes);
  return r;
}

FolnerReport folner_balls(const LazyGraphOracle& oracle, unsigned k_max,
                          std::size_t max_vertices) {
  const auto ball = materialize_ball(oracle, k_max + 1, max_vertices);
  return folner_balls(*ball.graph, 0, k_max);
}

}  // namespace gomega
