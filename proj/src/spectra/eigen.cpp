#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "gomega/error.hpp"
#include "gomega/schreier.hpp"
#include "gomega/spectra.hpp"

namespace gomega {

void SpectrumReport::check_against(const IntervalUnion& t, double tol) {
  target = t;
  tolerance = tol;
  excess = t.excess_of(eigenvalues);
  contained = excess <= tol;
  coverage_gap = t.coverage_gap(eigenvalues);
}

double SpectrumReport::spectral_radius() const {
  double r = 0.0;
  for (double x : eigenvalues) r = std::max(r, std::abs(x));
  return r;
}

namespace {

SpectrumReport dense_spectrum(const LinearOperator& h) {
  const Eigen::MatrixXcd m = h.dense(h.dim());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  if (es.info() != Eigen::Success) throw Error("eigensolver did not converge");
  SpectrumReport r;
  r.dimension = h.dim();
  r.eigenvalues.assign(es.eigenvalues().data(),
                       es.eigenvalues().data() + es.eigenvalues().size());
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    r.residuals.push_back(
        (m * es.eigenvectors().col(i) - es.eigenvalues()(i) * es.eigenvectors().col(i))
            .norm());
  return r;
}

struct RitzPairs {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

RitzPairs ritz(const std::vector<double>& alpha, const std::vector<double>& beta) {
  const auto m = static_cast<Eigen::Index>(alpha.size());
  Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(alpha.data(), m);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(std::max<Eigen::Index>(m - 1, 0));
  for (Eigen::Index i = 0; i + 1 < m; ++i) e(i) = beta[static_cast<std::size_t>(i)];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(d, e, Eigen::ComputeEigenvectors);
  return {es.eigenvalues(), es.eigenvectors()};
}

std::vector<Eigen::Index> extremal_indices(Eigen::Index m, std::size_t extremal) {
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < m; ++i)
    if (static_cast<std::size_t>(i) < extremal || static_cast<std::size_t>(m - i) <= extremal)
      keep.push_back(i);
  return keep;
}

SpectrumReport lanczos_spectrum(const LinearOperator& h, std::size_t extremal) {
  const std::size_t n = h.dim();
  const std::size_t max_steps = std::min<std::size_t>(n, std::max<std::size_t>(1500, 8 * extremal));
  const std::size_t check_every = 25;
  const double tol = 1e-10 * std::max(h.norm_estimate(), 1e-300);
  std::mt19937_64 rng(20240607);
  std::normal_distribution<double> normal;

  std::vector<Eigen::VectorXcd> basis;
  Eigen::VectorXcd q(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < q.size(); ++i) q(i) = normal(rng);
  q.normalize();
  std::vector<double> alpha, beta;
  double last_beta = 0.0;
  Eigen::VectorXcd w(q.size());
  RitzPairs pairs;
  for (std::size_t j = 0; j < max_steps; ++j) {
    basis.push_back(q);
    h.apply(std::span<const Weight>(q.data(), n), std::span<Weight>(w.data(), n));
    alpha.push_back(q.dot(w).real());
    // Full reorthogonalization, applied twice.
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) w -= b.dot(w) * b;
    last_beta = w.norm();
    if (j + 1 == max_steps || last_beta < 1e-12) break;
    if ((j + 1) % check_every == 0 && j + 1 >= 2 * extremal) {
      // Stop once every wanted Ritz pair has residual |beta_m s_m| below tol.
      pairs = ritz(alpha, beta);
      const auto m = static_cast<Eigen::Index>(alpha.size());
      const auto keep = extremal_indices(m, extremal);
      const bool converged = std::ranges::all_of(keep, [&](Eigen::Index i) {
        return std::abs(last_beta * pairs.vectors(m - 1, i)) <= tol;
      });
      if (converged) break;
    }
    beta.push_back(last_beta);
    q = w / last_beta;
  }

  pairs = ritz(alpha, beta);
  const auto m = static_cast<Eigen::Index>(alpha.size());
  SpectrumReport r;
  r.dimension = n;
  r.partial = true;
  for (auto i : extremal_indices(m, extremal)) {
    r.eigenvalues.push_back(pairs.values(i));
    r.residuals.push_back(std::abs(last_beta * pairs.vectors(m - 1, i)));
  }
  return r;
}

}  // namespace

SpectrumReport eigenvalues_selfadjoint(const LinearOperator& h, const Limits& limits,
                                       std::size_t extremal) {
  if (!h.is_self_adjoint()) throw NotSelfAdjoint("operator is not self-adjoint");
  if (h.dim() == 0) return {};
  if (h.dim() <= limits.dense_cap) return dense_spectrum(h);
  return lanczos_spectrum(h, extremal);
}

SpectrumReport markov_spectrum_banded(const WeightedGraph& g) {
  const PathForm pf = path_form(g);
  const auto n = static_cast<Eigen::Index>(pf.order.size());
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub = Eigen::VectorXd::Zero(std::max<Eigen::Index>(n - 1, 0));
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vertex v = pf.order[static_cast<std::size_t>(i)];
    if (g.degree(v) == 0) throw IsolatedVertex("vertex " + g.name(v) + " is isolated");
    diag(i) = static_cast<double>(pf.loops[static_cast<std::size_t>(i)]) /
              static_cast<double>(g.degree(v));
    if (i + 1 < n) {
      const Vertex w = pf.order[static_cast<std::size_t>(i + 1)];
      sub(i) = static_cast<double>(pf.multiplicity[static_cast<std::size_t>(i)]) /
               std::sqrt(static_cast<double>(g.degree(v)) * static_cast<double>(g.degree(w)));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw Error("tridiagonal eigensolver did not converge");
  SpectrumReport r;
  r.dimension = static_cast<std::size_t>(n);
  r.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return r;
}

}  // namespace gomega
