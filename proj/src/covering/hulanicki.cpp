#include "gomega/hulanicki.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "gomega/error.hpp"
#include "gomega/linear_operator.hpp"

namespace gomega {

namespace {

double norm2(std::span<const Weight> x) {
  double s = 0.0;
  for (const auto& v : x) s += std::norm(v);
  return std::sqrt(s);
}

}  // namespace

HulanickiResult hulanicki_residual(const CoveringMap& c, double lambda,
                                   std::span<const Weight> f, HulanickiMode mode,
                                   int k, std::optional<Vertex> root) {
  if (!c.source || !c.target) throw InvalidArgument("covering map without graphs");
  const WeightedGraph& src = *c.source;
  const WeightedGraph& dst = *c.target;
  if (f.size() != dst.vertex_count())
    throw InvalidArgument("f must have one entry per target vertex");
  if (k < 0) throw InvalidArgument("k must be non-negative");
  const Vertex v = root ? *root : (c.window ? c.window->root : 0);
  if (v >= src.vertex_count()) throw InvalidArgument("root out of range");

  const double fnorm = norm2(f);
  if (fnorm == 0.0) throw InvalidArgument("f must be nonzero");
  std::vector<Weight> fh(f.begin(), f.end());
  for (auto& x : fh) x /= fnorm;

  const LinearOperator h2 = laplace_type_operator(dst);
  std::vector<Weight> defect = h2.apply(fh);
  for (std::size_t i = 0; i < defect.size(); ++i) defect[i] -= lambda * fh[i];

  HulanickiResult r;
  r.mode = mode;
  r.k = k;
  r.lambda = lambda;
  r.rho = h2.max_row_abs_sum();
  const double eps = norm2(defect);
  double eta = 0.0, finf = 0.0;
  for (const auto& x : defect) eta = std::max(eta, std::abs(x));
  for (const auto& x : fh) finf = std::max(finf, std::abs(x));

  const Vertex pv = c.vertex_map.at(v);
  int need = 0;
  std::vector<char> in_s1(dst.vertex_count(), 0);
  if (mode == HulanickiMode::finite_target) {
    if (eps > 1e-9)
      throw NotAnEigenpair("||H f - lambda f|| = " + std::to_string(eps) + " exceeds 1e-9");
    r.N = static_cast<int>(dst.vertex_count());
    r.truncation_radius = k + r.N + 1;
    r.eigen_defect = eta;
    need = k + r.N + 3;
  } else {
    const auto dt = bfs_distances(dst, pv);
    int n = 0;
    for (Vertex y = 0; y < dst.vertex_count(); ++y) {
      if (std::abs(fh[y]) == 0.0) continue;
      in_s1[y] = 1;
      for (EdgeId e : dst.star(y)) in_s1[dst.other_end(e, y)] = 1;
    }
    for (Vertex y = 0; y < dst.vertex_count(); ++y) {
      if (!in_s1[y]) continue;
      if (dt[y] < 0) throw InvalidArgument("support of f is not reachable from phi(v)");
      n = std::max(n, dt[y]);
    }
    r.N = n;
    r.truncation_radius = k;
    r.eigen_defect = eps;
    need = std::max(k + 2, k + n + 1);
  }
  if (c.window) {
    const int dv = c.window->distance.at(v);
    if (dv < 0 || dv + need > c.window->radius)
      throw WindowTooSmall("residual at k = " + std::to_string(k) + " needs window radius " +
                           std::to_string(dv + need) + ", have " +
                           std::to_string(c.window->radius));
  }

  const auto ds = bfs_distances(src, v, need);
  std::vector<Weight> fk(src.vertex_count(), 0.0);
  for (Vertex x = 0; x < src.vertex_count(); ++x) {
    if (ds[x] >= 0 && ds[x] <= r.truncation_radius) {
      fk[x] = fh[c.vertex_map[x]];
      if (fk[x] != Weight{0.0, 0.0}) ++r.support_size;
    }
  }
  const LinearOperator h1 = laplace_type_operator(src);
  std::vector<Weight> out = h1.apply(fk);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= lambda * fk[i];
  const double fk_norm = norm2(fk);
  r.residual = fk_norm > 0.0 ? norm2(out) / fk_norm : std::numeric_limits<double>::infinity();

  // Fiber counts of phi(v) and of any target vertex u, by radius.
  const auto fiber = [&](Vertex u, int j) {
    std::size_t n = 0;
    if (j < 0) return n;
    for (Vertex x = 0; x < src.vertex_count(); ++x)
      if (ds[x] >= 0 && ds[x] <= j && c.vertex_map[x] == u) ++n;
    return n;
  };
  const auto ball = [&](int j) {
    return static_cast<std::size_t>(
        std::ranges::count_if(ds, [j](int d) { return d >= 0 && d <= j; }));
  };
  const int alpha_top = mode == HulanickiMode::finite_target ? k + r.N : k + 1 + r.N;
  for (int j = 0; j <= alpha_top; ++j) r.alpha.push_back(fiber(pv, j));
  const auto alpha = [&](int j) -> double {
    return j < 0 ? 0.0 : static_cast<double>(r.alpha.at(static_cast<std::size_t>(j)));
  };

  const double far = (r.rho + std::abs(lambda)) * finf;
  if (mode == HulanickiMode::finite_target) {
    const auto wi = static_cast<Vertex>(std::distance(
        fh.begin(), std::ranges::max_element(fh, {}, [](Weight x) { return std::abs(x); })));
    const double count = static_cast<double>(fiber(wi, k + r.N));
    const double inner = static_cast<double>(ball(k + r.N));
    const double shell = static_cast<double>(ball(k + r.N + 2)) - inner;
    r.bound = count == 0.0 ? std::numeric_limits<double>::infinity()
                           : (eta * eta * inner + shell * far * far) /
                                 (count * std::norm(fh[wi]));
  } else {
    const int n = r.N;
    const int r_in = k - std::max(n, 1);
    const double s1 = static_cast<double>(std::ranges::count(in_s1, 1));
    const double denom = alpha(k - n);
    r.bound = denom == 0.0 ? std::numeric_limits<double>::infinity()
                           : (eps * eps * alpha(r_in + n) +
                              s1 * (alpha(k + 1 + n) - alpha(r_in - n)) * far * far) /
                                 denom;
  }
  r.sound = r.residual * r.residual <= r.bound + 1e-9;
  return r;
}

std::vector<InclusionEntry> spectral_inclusion_report(const CoveringMap& c,
                                                      const std::vector<int>& k_schedule,
                                                      HulanickiMode mode) {
  if (k_schedule.empty()) throw InvalidArgument("empty k schedule");
  const LinearOperator h2 = laplace_type_operator(*c.target);
  if (!h2.is_self_adjoint()) throw NotSelfAdjoint("target operator is not self-adjoint");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h2.dense());
  std::vector<InclusionEntry> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    InclusionEntry entry;
    entry.eigenvalue = es.eigenvalues()(i);
    std::vector<Weight> f(es.eigenvectors().col(i).data(),
                          es.eigenvectors().col(i).data() + es.eigenvectors().rows());
    entry.best_residual = std::numeric_limits<double>::infinity();
    for (int k : k_schedule) {
      entry.runs.push_back(hulanicki_residual(c, entry.eigenvalue, f, mode, k));
      if (entry.runs.back().residual < entry.best_residual) {
        entry.best_residual = entry.runs.back().residual;
        entry.best_k = k;
      }
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace gomega
