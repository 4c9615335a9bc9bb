#include "gomega/oracles.hpp"

#include <mutex>
#include <numeric>
#include <unordered_map>

#include "../omega_core/perm_hash.hpp"
#include "gomega/error.hpp"
#include "gomega/schreier.hpp"
#include "gomega/tree.hpp"

namespace gomega {

struct CayleyOracle::Interner {
  std::mutex mutex;
  std::vector<std::vector<std::uint32_t>> elements;
  std::unordered_map<std::vector<std::uint32_t>, OracleVertex, detail::PermHash> index;

  OracleVertex intern(std::vector<std::uint32_t> perm) {
    std::lock_guard lock(mutex);
    const auto it = index.find(perm);
    if (it != index.end()) return it->second;
    const OracleVertex id = elements.size();
    index.emplace(perm, id);
    elements.push_back(std::move(perm));
    return id;
  }

  std::vector<std::uint32_t> element(OracleVertex v) {
    std::lock_guard lock(mutex);
    if (v >= elements.size()) throw InvalidArgument("unknown Cayley oracle vertex");
    return elements[v];
  }
};

CayleyOracle::CayleyOracle(OmegaWord w, unsigned depth)
    : omega_(std::move(w)), depth_(depth), interner_(std::make_unique<Interner>()) {
  if (depth == 0 || depth > kMaxTreeDepth)
    throw InvalidArgument("Cayley oracle depth out of range");
  for (auto g : kGenerators) gens_.push_back(generator_level_permutation(g, omega_, depth));
  std::vector<std::uint32_t> id(std::size_t{1} << depth);
  std::iota(id.begin(), id.end(), 0u);
  interner_->intern(std::move(id));
}

CayleyOracle::~CayleyOracle() = default;

std::vector<OracleEdge> CayleyOracle::star(OracleVertex v) const {
  const auto g = interner_->element(v);
  std::vector<OracleEdge> out;
  for (std::size_t s = 0; s < gens_.size(); ++s) {
    std::vector<std::uint32_t> next(g.size());
    kernels::compose(kernels::default_policy(), gens_[s], g, next);
    out.push_back({interner_->intern(std::move(next)), 1.0, 1.0,
                   std::string(1, to_letter(kGenerators[s]))});
  }
  return out;
}

std::string CayleyOracle::name(OracleVertex v) const { return "g" + std::to_string(v); }

std::uint32_t CayleyOracle::orbit_point(OracleVertex v, unsigned level) const {
  if (level == 0 || level > depth_) throw InvalidArgument("level exceeds the oracle depth");
  const auto g = interner_->element(v);
  return g[(std::size_t{1} << depth_) - 1] >> (depth_ - level);
}

std::vector<OracleEdge> UpsilonRayOracle::star(OracleVertex v) const {
  std::vector<OracleEdge> out;
  for (int i = 0; i < (v == 0 ? 3 : 1); ++i) out.push_back({v, 1.0, 1.0, {}});
  if (v > 0) {
    const int left = (v - 1) % 2 == 1 ? 2 : 1;
    for (int i = 0; i < left; ++i) out.push_back({v - 1, 1.0, 1.0, {}});
  }
  const int right = v % 2 == 1 ? 2 : 1;
  for (int i = 0; i < right; ++i) out.push_back({v + 1, 1.0, 1.0, {}});
  return out;
}

std::vector<OracleEdge> BinaryTreeOracle::star(OracleVertex v) const {
  if (v == 0) throw InvalidArgument("binary tree vertices start at 1");
  std::vector<OracleEdge> out;
  if (v > 1) out.push_back({v / 2, 1.0, 1.0, "up"});
  out.push_back({2 * v, 1.0, 1.0, "left"});
  out.push_back({2 * v + 1, 1.0, 1.0, "right"});
  return out;
}

std::unique_ptr<LazyGraphOracle> make_oracle(std::string_view spec, unsigned depth) {
  if (spec == "upsilon-ray") return std::make_unique<UpsilonRayOracle>();
  if (spec == "binary-tree") return std::make_unique<BinaryTreeOracle>();
  if (spec.starts_with("cayley:"))
    return std::make_unique<CayleyOracle>(OmegaWord::parse(spec.substr(7)), depth);
  throw InvalidArgument("unknown lazy source '" + std::string(spec) + "'");
}

MaterializedBall materialize_ball(const LazyGraphOracle& oracle, unsigned radius,
                                  std::size_t max_vertices) {
  std::vector<OracleVertex> ids{oracle.root()};
  std::unordered_map<OracleVertex, Vertex> local{{oracle.root(), 0}};
  std::vector<int> distance{0};
  std::vector<std::vector<OracleEdge>> stars;

  for (std::size_t i = 0; i < ids.size(); ++i) {
    stars.push_back(oracle.star(ids[i]));
    if (distance[i] >= static_cast<int>(radius)) continue;
    for (const auto& e : stars.back()) {
      if (local.contains(e.neighbour)) continue;
      if (ids.size() >= max_vertices)
        throw ResourceLimit("oracle ball exceeds " + std::to_string(max_vertices) +
                            " vertices");
      local.emplace(e.neighbour, static_cast<Vertex>(ids.size()));
      ids.push_back(e.neighbour);
      distance.push_back(distance[i] + 1);
    }
  }

  std::vector<std::string> names;
  names.reserve(ids.size());
  for (auto id : ids) names.push_back(oracle.name(id));
  WeightedGraph g(ids.size(), std::move(names));
  for (Vertex u = 0; u < ids.size(); ++u) {
    for (const auto& e : stars[u]) {
      const auto it = local.find(e.neighbour);
      if (it == local.end()) continue;
      const Vertex w = it->second;
      if (w == u)
        g.add_loop(u, e.weight_here, e.label);
      else if (u < w)
        g.add_edge(u, w, e.weight_here, e.weight_there, e.label);
    }
  }

  MaterializedBall out;
  out.graph = std::make_shared<const WeightedGraph>(std::move(g));
  out.ids = std::move(ids);
  out.window = CoveringWindow{0, static_cast<int>(radius), std::move(distance)};
  return out;
}

CoveringMap cayley_window_cover(const CayleyOracle& oracle, unsigned radius,
                                unsigned level, std::size_t max_vertices) {
  const auto ball = materialize_ball(oracle, radius, max_vertices);
  Limits limits;
  limits.max_vertices = std::max(limits.max_vertices, std::size_t{1} << level);
  const SchreierGraph target = schreier_graph(oracle.omega(), level, limits);

  CoveringMap c;
  c.source = ball.graph;
  c.target = target.graph;
  c.window = ball.window;
  for (auto id : ball.ids) c.vertex_map.push_back(oracle.orbit_point(id, level));
  for (const Edge& e : ball.graph->edges())
    c.edge_map.push_back(
        target.edge_at(c.vertex_map[e.u], generator_from_letter(e.label.at(0))));
  return c;
}

}  // namespace gomega
