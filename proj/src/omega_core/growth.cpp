#include "gomega/growth.hpp"

#include <array>
#include <numeric>
#include <unordered_map>

#include "gomega/error.hpp"
#include "gomega/tree.hpp"
#include "perm_hash.hpp"

namespace gomega {

BallElements enumerate_ball(const OmegaWord& w, unsigned radius, unsigned depth,
                            std::size_t max_elements) {
  std::array<std::vector<std::uint32_t>, 4> gens;
  for (auto g : kGenerators)
    gens[static_cast<int>(g)] =
        generator_level_permutation(g, w, depth, kernels::Policy::serial);

  BallElements ball;
  ball.depth = depth;
  std::vector<std::uint32_t> id(std::size_t{1} << depth);
  std::iota(id.begin(), id.end(), 0u);

  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, detail::PermHash>
      index;
  index.emplace(id, 0);
  ball.perms.push_back(std::move(id));
  ball.distance.push_back(0);
  ball.spheres.push_back(1);

  std::size_t begin = 0;
  for (unsigned r = 1; r <= radius; ++r) {
    const std::size_t end = ball.perms.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (const auto& s : gens) {
        std::vector<std::uint32_t> next(s.size());
        kernels::compose(kernels::default_policy(), s, ball.perms[i], next);
        if (index.contains(next)) continue;
        if (ball.perms.size() >= max_elements)
          throw ResourceLimit("Cayley ball exceeds " +
                              std::to_string(max_elements) + " elements");
        index.emplace(next, static_cast<std::uint32_t>(ball.perms.size()));
        ball.perms.push_back(std::move(next));
        ball.distance.push_back(r);
      }
    }
    ball.spheres.push_back(ball.perms.size() - end);
    begin = end;
  }
  return ball;
}

unsigned stabilized_depth(const OmegaWord& w, unsigned radius,
                          const Limits& limits, unsigned min_depth) {
  std::vector<std::size_t> previous;
  for (unsigned depth = std::max(1u, min_depth); depth <= limits.max_depth;
       ++depth) {
    auto census = enumerate_ball(w, radius, depth, limits.max_ball).spheres;
    if (!previous.empty() && census == previous) return depth;
    previous = std::move(census);
  }
  throw ResourceLimit("ball census did not stabilize by depth " +
                      std::to_string(limits.max_depth));
}

BallCensus ball_sizes(const OmegaWord& w, unsigned radius, const Limits& limits) {
  BallCensus out;
  if (radius == 0) {
    out.gamma = {1};
    out.depth = 1;
    out.stabilized = true;
    return out;
  }
  out.depth = stabilized_depth(w, radius, limits);
  const auto ball = enumerate_ball(w, radius, out.depth, limits.max_ball);
  std::partial_sum(ball.spheres.begin(), ball.spheres.end(),
                   std::back_inserter(out.gamma));
  out.stabilized = true;
  return out;
}

}  // namespace gomega
