#include <cmath>
#include <complex>
#include <sstream>

#include "gomega/error.hpp"
#include "gomega/linear_operator.hpp"

namespace gomega {

namespace {

ShiftSquareTransform build(const WeightedGraph& g, const LinearOperator& a,
                           Weight lambda, double radius) {
  const double norm = a.norm_estimate();
  if (!(radius > 0.0) || radius < 2.0 * norm) {
    std::ostringstream msg;
    msg << "radius " << radius << " is below twice the norm estimate " << norm;
    throw RadiusTooSmall(msg.str());
  }
  const double r2 = radius * radius;
  std::vector<std::string> names(g.names().begin(), g.names().end());
  WeightedGraph out(g.vertex_count(), std::move(names));

  for (Vertex v = 0; v < g.vertex_count(); ++v)
    out.add_loop(v, 1.0 - std::norm(lambda) / r2, "1");

  // The -lambda^* A - lambda A^* part (with the overall minus sign of the
  // transform this becomes +).
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const Weight au = g.weight_at(e, ed.u);
    const Weight av = g.weight_at(e, ed.v);
    if (ed.is_loop()) {
      out.add_loop(ed.u, (std::conj(lambda) * au + lambda * std::conj(au)) / r2,
                   ed.label);
    } else {
      out.add_edge(ed.u, ed.v, (std::conj(lambda) * au + lambda * std::conj(av)) / r2,
                   (std::conj(lambda) * av + lambda * std::conj(au)) / r2, ed.label);
    }
  }

  // The A A^* part: pairs of edge-ends at a common vertex x.
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    const auto star = g.star(x);
    for (std::size_t i = 0; i < star.size(); ++i) {
      const EdgeId e1 = star[i];
      const Vertex v = g.other_end(e1, x);
      const Weight a1 = g.weight_at(e1, v);
      for (std::size_t j = i; j < star.size(); ++j) {
        const EdgeId e2 = star[j];
        const Vertex w = g.other_end(e2, x);
        const Weight a2 = g.weight_at(e2, w);
        const std::string label = g.edge(e1).label + g.edge(e2).label;
        if (i == j) {
          out.add_loop(v, -std::norm(a1) / r2, label);
        } else if (v == w) {
          out.add_loop(v, -2.0 * std::real(a1 * std::conj(a2)) / r2, label);
        } else {
          out.add_edge(v, w, -a1 * std::conj(a2) / r2, -a2 * std::conj(a1) / r2,
                       label);
        }
      }
    }
  }

  ShiftSquareTransform t;
  t.op = laplace_type_operator(out);
  t.graph = std::move(out);
  t.radius = radius;
  t.norm_estimate = norm;
  return t;
}

}  // namespace

ShiftSquareTransform shift_square_transform(const WeightedGraph& g,
                                            Weight lambda, double radius) {
  return build(g, laplace_type_operator(g), lambda, radius);
}

ShiftSquareTransform shift_square_transform(const LinearOperator& h,
                                            Weight lambda, double radius) {
  return build(operator_graph(h), h, lambda, radius);
}

}  // namespace gomega
