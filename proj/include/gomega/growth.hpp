#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gomega/limits.hpp"
#include "gomega/omega.hpp"

namespace gomega {

/// Elements of the word-metric ball B_radius of G_omega with respect to
/// {a, b, c, d}, each identified by its action on level `depth`. Elements
/// are listed in BFS order; element 0 is the identity.
struct BallElements {
  unsigned depth = 0;
  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<unsigned> distance;
  std::vector<std::size_t> spheres;  // spheres[r] = |S_r|
};

/// BFS over g -> s g at a fixed depth. Two elements are merged when their
/// level-`depth` actions agree, so the counts are lower bounds on the true
/// ball sizes that become exact once `depth` separates the ball.
BallElements enumerate_ball(const OmegaWord& w, unsigned radius, unsigned depth,
                            std::size_t max_elements);

struct BallCensus {
  std::vector<std::size_t> gamma;  // gamma[r] = |B_r|, r = 0..radius
  unsigned depth = 0;              // depth at which the census stabilized
  /// Always "evidence": identity is decided only up to `depth`.
  bool stabilized = false;
};

/// Growth values gamma(0..radius). The depth is raised until the sphere
/// census agrees at two consecutive depths.
BallCensus ball_sizes(const OmegaWord& w, unsigned radius,
                      const Limits& limits = {});

/// Smallest depth (>= min_depth) at which the radius-`radius` census is
/// stable across two consecutive depths.
unsigned stabilized_depth(const OmegaWord& w, unsigned radius,
                          const Limits& limits, unsigned min_depth = 1);

}  // namespace gomega
