#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gomega/covering.hpp"
#include "gomega/graph.hpp"
#include "gomega/growth.hpp"
#include "gomega/limits.hpp"
#include "gomega/omega.hpp"
#include "gomega/tree.hpp"

namespace gomega {

/// Schreier graph Gamma_n of the level-n action of G_omega. Vertex x is the
/// level-n word with lexicographic index x and is named by that word; every
/// vertex has exactly one edge (possibly a loop) per generator label.
struct SchreierGraph {
  OmegaWord omega;
  unsigned level = 0;
  std::shared_ptr<const WeightedGraph> graph;
  /// generator_edge[v][g]: the g-labeled edge at v.
  std::vector<std::array<EdgeId, 4>> generator_edge;

  EdgeId edge_at(Vertex v, Generator g) const {
    return generator_edge[v][static_cast<std::size_t>(g)];
  }
};

/// Throws ResourceLimit when 2^n exceeds limits.max_vertices.
SchreierGraph schreier_graph(const OmegaWord& w, unsigned n,
                             const Limits& limits = {});

/// Binary name of level-n vertex x.
std::string vertex_word(std::uint32_t x, unsigned n);

/// Model graphs: Upsilon_n, a segment [0, L] of the ray Upsilon_inf^0, or a
/// segment [lo, hi] of the line Upsilon_inf. Segment ends keep their degree
/// deficit.
struct UpsilonSpec {
  enum class Kind { finite, ray, line };
  Kind kind = Kind::finite;
  unsigned n = 1;            // finite: 2^n vertices
  long long lo = 0, hi = 0;  // ray: [0, hi]; line: [lo, hi]
  /// Reads the exception "except 2^{n-1}-1" in the double-edge rule
  /// literally (finite kind only).
  bool middle_exception = false;

  static UpsilonSpec finite(unsigned n, bool middle_exception = false);
  static UpsilonSpec ray(long long length);
  static UpsilonSpec line(long long lo, long long hi);

  std::size_t vertex_count() const;
};

/// Vertices are named by their integer position.
WeightedGraph upsilon_graph(const UpsilonSpec& spec);

/// Canonical description of a path-with-loops multigraph: the vertex order
/// along the path (starting from the endpoint with the smaller vertex id),
/// loop counts in that order and the multiplicity of each consecutive edge.
struct PathForm {
  std::vector<Vertex> order;
  std::vector<std::size_t> loops;
  std::vector<std::size_t> multiplicity;  // size order.size() - 1

  bool same_shape(const PathForm& other) const {
    return loops == other.loops && multiplicity == other.multiplicity;
  }
};

/// Throws NotAPath if the non-loop edges do not form a simple path through
/// every vertex (multi-edges allowed).
PathForm path_form(const WeightedGraph& g);

struct IsomorphismResult {
  bool isomorphic = false;
  /// mapping[v] = position of graph vertex v in the model.
  std::vector<Vertex> mapping;
  /// First position along the path where the shapes disagree.
  std::optional<std::size_t> mismatch_position;
  std::string message;
};

/// Compares the path forms of `g` and of the model graph, in both path
/// orientations. Throws NotAPath.
IsomorphismResult check_isomorphic(const WeightedGraph& g, const UpsilonSpec& spec);
IsomorphismResult check_isomorphic(const WeightedGraph& g, const WeightedGraph& model);

/// Covering Gamma_m -> Gamma_n by n-prefix; the g-labeled edge at x maps to
/// the g-labeled edge at the prefix of x. Requires m > n >= 1.
CoveringMap level_projection_covering(const OmegaWord& w, unsigned m, unsigned n,
                                      const Limits& limits = {});

/// Radius-r ball of the Cayley graph of G_omega with respect to {a,b,c,d},
/// with the orbit map g -> g(1^n) onto Gamma_n.
struct CayleyBall {
  BallElements elements;            // BFS order; vertex i is element i
  std::vector<std::string> words;   // a geodesic word for each element
  unsigned radius = 0;
  std::shared_ptr<const WeightedGraph> graph;
  CoveringMap cover;                // window rooted at the identity
  SchreierGraph target;
};

/// Element identity is decided at the depth where the ball census
/// stabilizes (at least `level`). Throws ResourceLimit.
CayleyBall cayley_ball(const OmegaWord& w, unsigned radius, unsigned level,
                       const Limits& limits = {});

}  // namespace gomega
