#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "gomega/error.hpp"
#include "gomega/spectra.hpp"

namespace gomega {

MomentSequence spectral_moments(const WeightedGraph& g, Vertex v, unsigned max_power,
                                const Limits& limits) {
  if (v >= g.vertex_count()) throw InvalidArgument("base vertex out of range");
  const LinearOperator m = markov_operator(g);
  const std::size_t n = g.vertex_count();
  if (n > limits.dense_cap)
    throw ResourceLimit("eigendecomposition of dimension " + std::to_string(n) +
                        " exceeds the dense cap");

  MomentSequence out;
  out.base = v;
  std::vector<Weight> x(n, 0.0), y(n);
  x[v] = 1.0;
  for (unsigned p = 0; p <= max_power; ++p) {
    out.moments.push_back(x[v].real());
    m.apply(x, y);
    std::swap(x, y);
  }

  // S = D^{-1/2} A D^{-1/2} is symmetric and (M^p)_{vv} = (S^p)_{vv}.
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                            static_cast<Eigen::Index>(n));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const double w = 1.0 / std::sqrt(static_cast<double>(g.degree(ed.u)) *
                                     static_cast<double>(g.degree(ed.v)));
    s(ed.u, ed.v) += w;
    if (!ed.is_loop()) s(ed.v, ed.u) += w;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
  for (unsigned p = 0; p <= max_power; ++p) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      const double wi = es.eigenvectors()(v, i) * es.eigenvectors()(v, i);
      acc += wi * std::pow(es.eigenvalues()(i), static_cast<double>(p));
    }
    out.eigen_moments.push_back(acc);
    out.max_discrepancy =
        std::max(out.max_discrepancy, std::abs(acc - out.moments[p]));
  }

  const auto h = static_cast<Eigen::Index>(max_power / 2 + 1);
  Eigen::MatrixXd hankel(h, h);
  for (Eigen::Index i = 0; i < h; ++i)
    for (Eigen::Index j = 0; j < h; ++j)
      hankel(i, j) = out.moments[static_cast<std::size_t>(i + j)];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> hs(hankel, Eigen::EigenvaluesOnly);
  out.hankel_min_eigenvalue = hs.eigenvalues()(0);
  out.hankel_psd = out.hankel_min_eigenvalue >= -1e-9;
  return out;
}

}  // namespace gomega
