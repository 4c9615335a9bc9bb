#pragma once

#include <cstddef>
#include <vector>

#include "gomega/graph.hpp"
#include "gomega/oracles.hpp"

namespace gomega {

/// F_k = B_k(v) for k = 0..k_max.
struct FolnerReport {
  std::vector<std::size_t> ball_sizes;  // |F_k|
  std::vector<double> boundary_ratio;   // |B_1(F_k) \ F_k| / |F_k|
  std::vector<double> root_growth;      // |F_k|^{1/k}, k >= 1
  /// Local growth log(|F_k| / |F_{k-1}|) averaged over the last quarter of
  /// the range is clearly below its average over the second quarter.
  bool subexponential_evidence = false;
};

FolnerReport folner_balls(const WeightedGraph& g, Vertex v, unsigned k_max);

/// Throws ResourceLimit when B_{k_max+1} has more than `max_vertices` vertices.
FolnerReport folner_balls(const LazyGraphOracle& oracle, unsigned k_max,
                          std::size_t max_vertices = 1u << 20);

}  // namespace gomega
