#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gomega {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = std::complex<double>;

/// An undirected edge with a weight at each endpoint. A loop has u == v and
/// carries the single weight `wu` (`wv` mirrors it).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight wu{1.0, 0.0};
  Weight wv{1.0, 0.0};
  std::string label;

  bool is_loop() const { return u == v; }
};

/// Finite multigraph with loops and per-(vertex, edge) weights. A loop at v
/// appears once in the star E_v and contributes 1 to d(v).
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(std::size_t vertex_count,
                         std::vector<std::string> names = {});

  EdgeId add_edge(Vertex u, Vertex v, Weight wu = 1.0, Weight wv = 1.0,
                  std::string label = {});
  EdgeId add_loop(Vertex v, Weight w = 1.0, std::string label = {});

  std::size_t vertex_count() const { return incidence_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  /// E_v in insertion order.
  std::span<const EdgeId> star(Vertex v) const { return incidence_[v]; }
  std::size_t degree(Vertex v) const { return incidence_[v].size(); }

  /// r_v(e): the other endpoint, or v itself for a loop.
  Vertex other_end(EdgeId e, Vertex v) const;
  Weight weight_at(EdgeId e, Vertex v) const;
  void set_weight_at(EdgeId e, Vertex v, Weight w);

  std::size_t max_degree() const;
  double max_abs_weight() const;
  /// Every edge has weight_at(u) == conj(weight_at(v)); loops need real weights.
  bool is_self_adjoint() const;

  const std::string& name(Vertex v) const { return names_[v]; }
  std::span<const std::string> names() const { return names_; }
  std::optional<Vertex> find(const std::string& name) const;

  /// Loops at v.
  std::size_t loop_count(Vertex v) const;
  /// Non-loop edges joining u and v.
  std::size_t multiplicity(Vertex u, Vertex v) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<std::string> names_;
};

/// Copy of `g` with every weight alpha_{v,e} = 1 / d(v).
WeightedGraph with_markov_weights(const WeightedGraph& g);

/// Copy of `g` with all weights set to `w`.
WeightedGraph with_constant_weights(const WeightedGraph& g, Weight w);

/// Breadth-first distances from `root` (unreachable: -1), optionally capped.
std::vector<int> bfs_distances(const WeightedGraph& g, Vertex root,
                               int max_radius = -1);

}  // namespace gomega
