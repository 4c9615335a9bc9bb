#include <unordered_map>

#include "../omega_core/perm_hash.hpp"
#include "gomega/error.hpp"
#include "gomega/schreier.hpp"

namespace gomega {

CayleyBall cayley_ball(const OmegaWord& w, unsigned radius, unsigned level,
                       const Limits& limits) {
  if (radius == 0) throw InvalidArgument("Cayley ball radius must be at least 1");
  if (level == 0) throw InvalidArgument("level must be at least 1");
  const unsigned depth = std::max(stabilized_depth(w, radius, limits), level);

  CayleyBall out;
  out.radius = radius;
  out.elements = enumerate_ball(w, radius, depth, limits.max_ball);
  out.target = schreier_graph(w, level, limits);
  const auto& perms = out.elements.perms;
  const std::size_t count = perms.size();

  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, detail::PermHash> index;
  index.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) index.emplace(perms[i], i);

  std::array<std::vector<std::uint32_t>, 4> gens;
  for (auto g : kGenerators)
    gens[static_cast<std::size_t>(g)] = generator_level_permutation(g, w, depth);

  // neighbour[i][s] = index of s * g_i, or -1 outside the ball.
  std::vector<std::array<std::int64_t, 4>> neighbour(count);
  std::vector<std::uint32_t> buf(perms[0].size());
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t s = 0; s < 4; ++s) {
      kernels::compose(kernels::default_policy(), gens[s], perms[i], buf);
      const auto it = index.find(buf);
      neighbour[i][s] = it == index.end() ? std::int64_t{-1} : std::int64_t{it->second};
    }
  }

  out.words.assign(count, {});
  std::vector<char> named(count, 0);
  named[0] = 1;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t s = 0; s < 4; ++s) {
      const auto j = neighbour[i][s];
      if (j < 0 || named[j]) continue;
      out.words[j] = std::string(1, to_letter(kGenerators[s])) + out.words[i];
      named[j] = 1;
    }
  }

  std::vector<std::string> names = out.words;
  names[0] = "1";
  WeightedGraph g(count, std::move(names));
  const Vertex base = static_cast<Vertex>((std::size_t{1} << depth) - 1);
  const unsigned shift = depth - level;

  CoveringMap& c = out.cover;
  c.vertex_map.resize(count);
  for (std::size_t i = 0; i < count; ++i) c.vertex_map[i] = perms[i][base] >> shift;

  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t s = 0; s < 4; ++s) {
      const auto j = neighbour[i][s];
      if (j < 0 || static_cast<std::size_t>(j) < i) continue;
      const std::string label(1, to_letter(kGenerators[s]));
      if (static_cast<std::size_t>(j) == i)
        g.add_loop(static_cast<Vertex>(i), 1.0, label);
      else
        g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j), 1.0, 1.0, label);
      c.edge_map.push_back(out.target.edge_at(c.vertex_map[i], kGenerators[s]));
    }
  }

  out.graph = std::make_shared<const WeightedGraph>(std::move(g));
  c.source = out.graph;
  c.target = out.target.graph;
  CoveringWindow window;
  window.root = 0;
  window.radius = static_cast<int>(radius);
  window.distance.assign(out.elements.distance.begin(), out.elements.distance.end());
  c.window = std::move(window);
  return out;
}

}  // namespace gomega
