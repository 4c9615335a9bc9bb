#pragma once

#include <cstddef>

namespace gomega {

/// Resource caps shared by the constructions. Exceeding one raises
/// ResourceLimit rather than degrading silently.
struct Limits {
  unsigned max_depth = 20;              // tree levels used for element identity
  std::size_t max_ball = 2'000'000;     // group elements in a Cayley ball
  std::size_t max_vertices = 1u << 20;  // vertices of a materialized graph
  std::size_t dense_cap = 4096;         // largest dense eigenproblem
};

}  // namespace gomega
