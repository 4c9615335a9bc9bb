#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gomega/graph.hpp"

namespace gomega {

/// Finite verification window on a (truncated) source: BFS distances from
/// the window root. Vertices with distance < radius have their full star.
struct CoveringWindow {
  Vertex root = 0;
  int radius = 0;
  std::vector<int> distance;

  bool interior(Vertex v) const { return distance[v] >= 0 && distance[v] < radius; }
};

/// Vertex map phi_V and edge map phi_E from `source` onto `target`.
struct CoveringMap {
  std::shared_ptr<const WeightedGraph> source;
  std::shared_ptr<const WeightedGraph> target;
  std::vector<Vertex> vertex_map;
  std::vector<EdgeId> edge_map;
  /// Set when the source is a finite window onto an infinite graph.
  std::optional<CoveringWindow> window;
};

struct CoveringWitness {
  enum class Kind {
    map_size,
    out_of_range,
    endpoint,
    not_bijective,
    degree,
    weight,
    vertex_not_hit,
    edge_not_hit,
  };
  Kind kind = Kind::map_size;
  std::optional<Vertex> vertex;  // source vertex, or target vertex when not hit
  std::optional<EdgeId> edge;    // source edge, or target edge when not hit
  std::string message;
};

std::string to_string(CoveringWitness::Kind kind);

struct CoveringVerdict {
  bool ok = true;
  std::optional<CoveringWitness> witness;
  /// Radius of the certifying window; -1 for a finite source.
  int window_radius = -1;
};

/// Checks endpoint compatibility, local bijectivity E_v -> E_phi(v) (only at
/// interior window vertices when a window is set), weight equality and
/// surjectivity. Returns the first violation. Throws WindowTooSmall when a
/// windowed source does not reach every target vertex and edge.
CoveringVerdict verify_covering(const CoveringMap& c);

/// Source graph with the pulled-back weights alpha~(e~, v~) = alpha(phi e~, phi v~).
WeightedGraph lift_weights(const CoveringMap& c, const WeightedGraph& target);

/// Same map with `target` weights installed on the target and lifted to the source.
CoveringMap reweighted(const CoveringMap& c, const WeightedGraph& target);

/// Path in a graph: start vertex and the sequence of traversed edges.
struct GraphPath {
  Vertex start = 0;
  std::vector<EdgeId> edges;

  std::vector<Vertex> vertices(const WeightedGraph& g) const;
};

/// The unique lift starting at `start`. Throws BadStart if phi(start) is not
/// the path origin, InvalidArgument if the path is not a walk in the target,
/// WindowTooSmall if the lift leaves the window.
GraphPath lift_path(const CoveringMap& c, const GraphPath& path, Vertex start);

/// Path following the edge with the given label at each step.
GraphPath path_from_labels(const WeightedGraph& g, Vertex start,
                           const std::vector<std::string>& labels);

/// alpha_k = |{x in B_k(v) : phi(x) = phi(v)}|, 0 for k < 0. Distances are
/// taken in the source. Throws WindowTooSmall if B_k(v) is not inside the window.
std::size_t fiber_count(const CoveringMap& c, Vertex v, int k);

}  // namespace gomega
