#include "gomega/covering.hpp"

#include <algorithm>
#include <sstream>

#include "gomega/error.hpp"

namespace gomega {

std::string to_string(CoveringWitness::Kind kind) {
  switch (kind) {
    case CoveringWitness::Kind::map_size: return "map_size";
    case CoveringWitness::Kind::out_of_range: return "out_of_range";
    case CoveringWitness::Kind::endpoint: return "endpoint";
    case CoveringWitness::Kind::not_bijective: return "not_bijective";
    case CoveringWitness::Kind::degree: return "degree";
    case CoveringWitness::Kind::weight: return "weight";
    case CoveringWitness::Kind::vertex_not_hit: return "vertex_not_hit";
    case CoveringWitness::Kind::edge_not_hit: return "edge_not_hit";
  }
  return "unknown";
}

namespace {

CoveringVerdict fail(CoveringWitness::Kind kind, std::optional<Vertex> v,
                     std::optional<EdgeId> e, std::string message, int radius) {
  CoveringVerdict out;
  out.ok = false;
  out.window_radius = radius;
  out.witness = CoveringWitness{kind, v, e, std::move(message)};
  return out;
}

}  // namespace

CoveringVerdict verify_covering(const CoveringMap& c) {
  if (!c.source || !c.target) throw InvalidArgument("covering map without graphs");
  const WeightedGraph& s = *c.source;
  const WeightedGraph& t = *c.target;
  const int radius = c.window ? c.window->radius : -1;
  using K = CoveringWitness::Kind;

  if (c.vertex_map.size() != s.vertex_count() || c.edge_map.size() != s.edge_count())
    return fail(K::map_size, std::nullopt, std::nullopt,
                "map sizes do not match the source graph", radius);
  if (c.window && c.window->distance.size() != s.vertex_count())
    throw InvalidArgument("window distances do not match the source graph");

  for (Vertex v = 0; v < s.vertex_count(); ++v)
    if (c.vertex_map[v] >= t.vertex_count())
      return fail(K::out_of_range, v, std::nullopt, "vertex image out of range", radius);
  for (EdgeId e = 0; e < s.edge_count(); ++e)
    if (c.edge_map[e] >= t.edge_count())
      return fail(K::out_of_range, std::nullopt, e, "edge image out of range", radius);

  // Endpoint compatibility as multisets {phi(u), phi(v)} = {u', v'}.
  for (EdgeId e = 0; e < s.edge_count(); ++e) {
    const Edge& se = s.edge(e);
    const Edge& te = t.edge(c.edge_map[e]);
    Vertex a = c.vertex_map[se.u], b = c.vertex_map[se.v];
    Vertex x = te.u, y = te.v;
    if (a > b) std::swap(a, b);
    if (x > y) std::swap(x, y);
    if (a != x || b != y) {
      std::ostringstream msg;
      msg << "edge " << e << " (" << s.name(se.u) << "-" << s.name(se.v)
          << ") maps to an edge between " << t.name(te.u) << " and " << t.name(te.v);
      return fail(K::endpoint, se.u, e, msg.str(), radius);
    }
  }

  // Local bijectivity and weights.
  for (Vertex v = 0; v < s.vertex_count(); ++v) {
    const bool check_star = !c.window || c.window->interior(v);
    const Vertex pv = c.vertex_map[v];
    const auto star = s.star(v);
    if (check_star && star.size() != t.degree(pv)) {
      std::ostringstream msg;
      msg << "vertex " << s.name(v) << " has degree " << star.size() << " but its image "
          << t.name(pv) << " has degree " << t.degree(pv);
      return fail(K::degree, v, std::nullopt, msg.str(), radius);
    }
    std::vector<EdgeId> images;
    images.reserve(star.size());
    for (EdgeId e : star) images.push_back(c.edge_map[e]);
    std::ranges::sort(images);
    const auto dup = std::ranges::adjacent_find(images);
    if (dup != images.end()) {
      const EdgeId bad = *std::ranges::find_if(
          star, [&](EdgeId e) { return c.edge_map[e] == *dup; });
      std::ostringstream msg;
      msg << "two edges at vertex " << s.name(v) << " map to target edge " << *dup;
      return fail(K::not_bijective, v, bad, msg.str(), radius);
    }
    for (EdgeId e : star) {
      if (s.weight_at(e, v) != t.weight_at(c.edge_map[e], pv)) {
        std::ostringstream msg;
        msg << "weight of edge " << e << " at vertex " << s.name(v)
            << " differs from the target weight";
        return fail(K::weight, v, e, msg.str(), radius);
      }
    }
  }

  std::vector<char> vhit(t.vertex_count(), 0), ehit(t.edge_count(), 0);
  for (Vertex v : c.vertex_map) vhit[v] = 1;
  for (EdgeId e : c.edge_map) ehit[e] = 1;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (vhit[v]) continue;
    if (c.window)
      throw WindowTooSmall("window of radius " + std::to_string(radius) +
                           " misses target vertex " + t.name(v));
    return fail(K::vertex_not_hit, v, std::nullopt,
                "target vertex " + t.name(v) + " is not in the image", radius);
  }
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    if (ehit[e]) continue;
    if (c.window)
      throw WindowTooSmall("window of radius " + std::to_string(radius) +
                           " misses target edge " + std::to_string(e));
    return fail(K::edge_not_hit, std::nullopt, e,
                "target edge " + std::to_string(e) + " is not in the image", radius);
  }

  CoveringVerdict ok;
  ok.window_radius = radius;
  return ok;
}

WeightedGraph lift_weights(const CoveringMap& c, const WeightedGraph& target) {
  if (target.vertex_count() != c.target->vertex_count() ||
      target.edge_count() != c.target->edge_count())
    throw InvalidArgument("weighted target does not match the covering target");
  WeightedGraph out = *c.source;
  for (EdgeId e = 0; e < out.edge_count(); ++e) {
    const Edge& ed = out.edge(e);
    const Vertex u = ed.u, v = ed.v;
    out.set_weight_at(e, u, target.weight_at(c.edge_map[e], c.vertex_map[u]));
    if (u != v) out.set_weight_at(e, v, target.weight_at(c.edge_map[e], c.vertex_map[v]));
  }
  return out;
}

CoveringMap reweighted(const CoveringMap& c, const WeightedGraph& target) {
  CoveringMap out = c;
  out.source = std::make_shared<const WeightedGraph>(lift_weights(c, target));
  out.target = std::make_shared<const WeightedGraph>(target);
  return out;
}

std::vector<Vertex> GraphPath::vertices(const WeightedGraph& g) const {
  std::vector<Vertex> out{start};
  for (EdgeId e : edges) out.push_back(g.other_end(e, out.back()));
  return out;
}

GraphPath lift_path(const CoveringMap& c, const GraphPath& path, Vertex start) {
  const WeightedGraph& s = *c.source;
  const WeightedGraph& t = *c.target;
  if (start >= s.vertex_count() || c.vertex_map[start] != path.start)
    throw BadStart("start vertex is not in the fiber of the path origin");
  GraphPath out{start, {}};
  Vertex here = start;
  Vertex there = path.start;
  for (EdgeId te : path.edges) {
    if (te >= t.edge_count() || (t.edge(te).u != there && t.edge(te).v != there))
      throw InvalidArgument("path is not a walk in the target graph");
    if (c.window && !c.window->interior(here))
      throw WindowTooSmall("path lift reaches the window boundary");
    const auto star = s.star(here);
    const auto it = std::ranges::find_if(star, [&](EdgeId e) { return c.edge_map[e] == te; });
    if (it == star.end()) throw InvalidArgument("covering map is not locally surjective");
    out.edges.push_back(*it);
    here = s.other_end(*it, here);
    there = t.other_end(te, there);
  }
  return out;
}

GraphPath path_from_labels(const WeightedGraph& g, Vertex start,
                           const std::vector<std::string>& labels) {
  GraphPath p{start, {}};
  Vertex here = start;
  for (const auto& label : labels) {
    const auto star = g.star(here);
    const auto it =
        std::ranges::find_if(star, [&](EdgeId e) { return g.edge(e).label == label; });
    if (it == star.end())
      throw InvalidArgument("no edge labeled '" + label + "' at vertex " + g.name(here));
    p.edges.push_back(*it);
    here = g.other_end(*it, here);
  }
  return p;
}

std::size_t fiber_count(const CoveringMap& c, Vertex v, int k) {
  if (k < 0) return 0;
  if (v >= c.source->vertex_count()) throw InvalidArgument("vertex out of range");
  if (c.window) {
    const int dv = c.window->distance[v];
    if (dv < 0 || dv + k > c.window->radius)
      throw WindowTooSmall("ball of radius " + std::to_string(k) +
                           " leaves the window of radius " +
                           std::to_string(c.window->radius));
  }
  const auto dist = bfs_distances(*c.source, v, k);
  std::size_t count = 0;
  for (Vertex x = 0; x < dist.size(); ++x)
    if (dist[x] >= 0 && c.vertex_map[x] == c.vertex_map[v]) ++count;
  return count;
}

}  // namespace gomega
