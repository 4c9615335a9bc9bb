#include "gomega/schreier.hpp"

#include <algorithm>
#include <sstream>

#include "gomega/error.hpp"

namespace gomega {

std::string vertex_word(std::uint32_t x, unsigned n) {
  std::string s(n, '0');
  for (unsigned i = 0; i < n; ++i)
    if ((x >> (n - 1 - i)) & 1u) s[i] = '1';
  return s;
}

SchreierGraph schreier_graph(const OmegaWord& w, unsigned n, const Limits& limits) {
  if (n == 0) throw InvalidArgument("level must be at least 1");
  if (n > kMaxTreeDepth || (std::size_t{1} << n) > limits.max_vertices)
    throw ResourceLimit("level " + std::to_string(n) + " exceeds the vertex cap " +
                        std::to_string(limits.max_vertices));
  const std::size_t count = std::size_t{1} << n;

  std::array<std::vector<std::uint32_t>, 4> perms;
  for (auto g : kGenerators)
    perms[static_cast<std::size_t>(g)] = generator_level_permutation(g, w, n);

  std::vector<std::string> names;
  names.reserve(count);
  for (std::uint32_t x = 0; x < count; ++x) names.push_back(vertex_word(x, n));
  WeightedGraph g(count, std::move(names));

  SchreierGraph out{w, n, nullptr, std::vector<std::array<EdgeId, 4>>(count)};
  for (std::uint32_t v = 0; v < count; ++v) {
    for (auto gen : kGenerators) {
      const auto gi = static_cast<std::size_t>(gen);
      const std::uint32_t image = perms[gi][v];
      const std::string label(1, to_letter(gen));
      if (image == v) {
        out.generator_edge[v][gi] = g.add_loop(v, 1.0, label);
      } else if (v < image) {
        const EdgeId e = g.add_edge(v, image, 1.0, 1.0, label);
        out.generator_edge[v][gi] = e;
        out.generator_edge[image][gi] = e;
      }
    }
  }
  out.graph = std::make_shared<const WeightedGraph>(std::move(g));
  return out;
}

CoveringMap level_projection_covering(const OmegaWord& w, unsigned m, unsigned n,
                                      const Limits& limits) {
  if (!(m > n && n >= 1)) throw InvalidArgument("level projection needs m > n >= 1");
  const SchreierGraph src = schreier_graph(w, m, limits);
  const SchreierGraph dst = schreier_graph(w, n, limits);
  const unsigned shift = m - n;

  CoveringMap c;
  c.source = src.graph;
  c.target = dst.graph;
  c.vertex_map.resize(src.graph->vertex_count());
  c.edge_map.resize(src.graph->edge_count());
  for (Vertex v = 0; v < src.graph->vertex_count(); ++v) {
    c.vertex_map[v] = v >> shift;
    for (auto g : kGenerators) c.edge_map[src.edge_at(v, g)] = dst.edge_at(v >> shift, g);
  }
  return c;
}

}  // namespace gomega
