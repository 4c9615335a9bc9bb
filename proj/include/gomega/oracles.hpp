#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gomega/covering.hpp"
#include "gomega/graph.hpp"
#include "gomega/omega.hpp"

namespace gomega {

using OracleVertex = std::uint64_t;

struct OracleEdge {
  OracleVertex neighbour = 0;  // equal to the queried vertex for a loop
  Weight weight_here{1.0, 0.0};
  Weight weight_there{1.0, 0.0};
  std::string label;
};

/// Deterministic neighbourhood queries on a possibly infinite graph of
/// bounded degree. Implementations are safe for concurrent queries.
class LazyGraphOracle {
 public:
  virtual ~LazyGraphOracle() = default;
  virtual OracleVertex root() const = 0;
  /// Full star of v; a loop is listed once.
  virtual std::vector<OracleEdge> star(OracleVertex v) const = 0;
  virtual std::size_t degree_bound() const = 0;
  virtual std::string name(OracleVertex v) const = 0;
};

/// Cayley graph of G_omega with respect to {a, b, c, d}; elements are
/// identified by their action on level `depth` and interned in query order.
class CayleyOracle : public LazyGraphOracle {
 public:
  CayleyOracle(OmegaWord w, unsigned depth);
  ~CayleyOracle() override;

  OracleVertex root() const override { return 0; }
  std::vector<OracleEdge> star(OracleVertex v) const override;
  std::size_t degree_bound() const override { return 4; }
  std::string name(OracleVertex v) const override;

  unsigned depth() const { return depth_; }
  const OmegaWord& omega() const { return omega_; }
  /// Lexicographic index of g(1^level) for the element g = v.
  std::uint32_t orbit_point(OracleVertex v, unsigned level) const;

 private:
  struct Interner;

  OmegaWord omega_;
  unsigned depth_;
  std::vector<std::vector<std::uint32_t>> gens_;
  std::unique_ptr<Interner> interner_;
};

/// Upsilon_inf^0: vertex 0 with three loops, every other vertex one loop,
/// single edges i -> i+1 for even i and double edges for odd i.
class UpsilonRayOracle : public LazyGraphOracle {
 public:
  OracleVertex root() const override { return 0; }
  std::vector<OracleEdge> star(OracleVertex v) const override;
  std::size_t degree_bound() const override { return 4; }
  std::string name(OracleVertex v) const override { return std::to_string(v); }
};

/// Rooted binary tree in heap numbering (root 1, children 2v and 2v+1).
class BinaryTreeOracle : public LazyGraphOracle {
 public:
  OracleVertex root() const override { return 1; }
  std::vector<OracleEdge> star(OracleVertex v) const override;
  std::size_t degree_bound() const override { return 3; }
  std::string name(OracleVertex v) const override { return std::to_string(v); }
};

/// "cayley:PRE:PERIOD", "upsilon-ray" or "binary-tree". `depth` is used by
/// the Cayley oracle. Throws InvalidArgument for an unknown name.
std::unique_ptr<LazyGraphOracle> make_oracle(std::string_view spec, unsigned depth);

/// Ball of radius `radius` around the oracle root: every edge with both ends
/// in the ball, vertices in BFS order, window distances from the root.
struct MaterializedBall {
  std::shared_ptr<const WeightedGraph> graph;
  std::vector<OracleVertex> ids;
  CoveringWindow window;
};

MaterializedBall materialize_ball(const LazyGraphOracle& oracle, unsigned radius,
                                  std::size_t max_vertices);

/// Window onto the Cayley oracle with the orbit map onto Gamma_level.
CoveringMap cayley_window_cover(const CayleyOracle& oracle, unsigned radius,
                                unsigned level, std::size_t max_vertices);

}  // namespace gomega
