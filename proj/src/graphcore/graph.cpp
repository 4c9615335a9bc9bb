#include "gomega/graph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "gomega/error.hpp"

namespace gomega {

WeightedGraph::WeightedGraph(std::size_t vertex_count,
                             std::vector<std::string> names)
    : incidence_(vertex_count), names_(std::move(names)) {
  if (names_.empty()) {
    names_.reserve(vertex_count);
    for (std::size_t i = 0; i < vertex_count; ++i)
      names_.push_back(std::to_string(i));
  }
  if (names_.size() != vertex_count)
    throw InvalidArgument("vertex name count does not match vertex count");
}

EdgeId WeightedGraph::add_edge(Vertex u, Vertex v, Weight wu, Weight wv,
                               std::string label) {
  if (u >= vertex_count() || v >= vertex_count())
    throw InvalidArgument("edge endpoint out of range");
  if (u == v) return add_loop(u, wu, std::move(label));
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({u, v, wu, wv, std::move(label)});
  incidence_[u].push_back(id);
  incidence_[v].push_back(id);
  return id;
}

EdgeId WeightedGraph::add_loop(Vertex v, Weight w, std::string label) {
  if (v >= vertex_count()) throw InvalidArgument("loop vertex out of range");
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({v, v, w, w, std::move(label)});
  incidence_[v].push_back(id);
  return id;
}

Vertex WeightedGraph::other_end(EdgeId e, Vertex v) const {
  const Edge& ed = edges_[e];
  if (ed.u == v) return ed.v;
  if (ed.v == v) return ed.u;
  throw InvalidArgument("vertex is not an endpoint of the edge");
}

Weight WeightedGraph::weight_at(EdgeId e, Vertex v) const {
  const Edge& ed = edges_[e];
  if (ed.u == v) return ed.wu;
  if (ed.v == v) return ed.wv;
  throw InvalidArgument("vertex is not an endpoint of the edge");
}

void WeightedGraph::set_weight_at(EdgeId e, Vertex v, Weight w) {
  Edge& ed = edges_[e];
  if (ed.is_loop() && ed.u == v) {
    ed.wu = ed.wv = w;
  } else if (ed.u == v) {
    ed.wu = w;
  } else if (ed.v == v) {
    ed.wv = w;
  } else {
    throw InvalidArgument("vertex is not an endpoint of the edge");
  }
}

std::size_t WeightedGraph::max_degree() const {
  std::size_t d = 0;
  for (const auto& s : incidence_) d = std::max(d, s.size());
  return d;
}

double WeightedGraph::max_abs_weight() const {
  double m = 0.0;
  for (const auto& e : edges_) m = std::max({m, std::abs(e.wu), std::abs(e.wv)});
  return m;
}

bool WeightedGraph::is_self_adjoint() const {
  return std::ranges::all_of(edges_, [](const Edge& e) {
    if (e.is_loop()) return e.wu.imag() == 0.0;
    return e.wu == std::conj(e.wv);
  });
}

std::optional<Vertex> WeightedGraph::find(const std::string& name) const {
  const auto it = std::ranges::find(names_, name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Vertex>(it - names_.begin());
}

std::size_t WeightedGraph::loop_count(Vertex v) const {
  return static_cast<std::size_t>(std::ranges::count_if(
      incidence_[v], [&](EdgeId e) { return edges_[e].is_loop(); }));
}

std::size_t WeightedGraph::multiplicity(Vertex u, Vertex v) const {
  if (u == v) return 0;
  return static_cast<std::size_t>(std::ranges::count_if(incidence_[u], [&](EdgeId e) {
    return !edges_[e].is_loop() && other_end(e, u) == v;
  }));
}

WeightedGraph with_markov_weights(const WeightedGraph& g) {
  WeightedGraph out = g;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out.set_weight_at(e, ed.u, 1.0 / static_cast<double>(g.degree(ed.u)));
    if (!ed.is_loop())
      out.set_weight_at(e, ed.v, 1.0 / static_cast<double>(g.degree(ed.v)));
  }
  return out;
}

WeightedGraph with_constant_weights(const WeightedGraph& g, Weight w) {
  WeightedGraph out = g;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out.set_weight_at(e, g.edge(e).u, w);
    out.set_weight_at(e, g.edge(e).v, w);
  }
  return out;
}

std::vector<int> bfs_distances(const WeightedGraph& g, Vertex root,
                               int max_radius) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<Vertex> queue{root};
  dist[root] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    if (max_radius >= 0 && dist[x] >= max_radius) continue;
    for (EdgeId e : g.star(x)) {
      const Vertex y = g.other_end(e, x);
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

}  // namespace gomega
