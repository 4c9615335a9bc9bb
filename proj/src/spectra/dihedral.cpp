#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include <Eigen/Eigenvalues>

#include "gomega/error.hpp"
#include "gomega/spectra.hpp"
#include "gomega/tree.hpp"

namespace gomega {

namespace {

// Coupling between line positions i and i + 1: x on even i, y on odd i.
double coupling(long long i, double x, double y) { return (i % 2 + 2) % 2 == 0 ? x : y; }

}  // namespace

DihedralSpectrum dihedral_weighted_spectrum(double x, double y,
                                            const std::vector<std::size_t>& lengths) {
  if (!(x > 0.0) || !(y >= 0.0)) throw InvalidArgument("need x > 0 and y >= 0");
  DihedralSpectrum out;
  out.x = x;
  out.y = y;
  // Bloch symbol on the two-point cell: eigenvalues +-|x + y e^{i theta}|.
  const double lo = std::abs(x - y), hi = x + y;
  out.exact = lo == 0.0 ? IntervalUnion({{-hi, hi}}) : IntervalUnion({{-hi, -lo}, {lo, hi}});

  for (std::size_t len : lengths) {
    if (len < 2) throw InvalidArgument("truncation length must be at least 2");
    const auto n = static_cast<Eigen::Index>(len);
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(n - 1);
    for (Eigen::Index i = 0; i + 1 < n; ++i) sub(i) = coupling(i, x, y);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);

    DihedralTruncation t;
    t.length = len;
    const double left = coupling(-1, x, y);
    const double right = coupling(static_cast<long long>(len) - 1, x, y);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double mu = es.eigenvalues()(i);
      const double u0 = es.eigenvectors()(0, i), un = es.eigenvectors()(n - 1, i);
      const double err = std::hypot(left * u0, right * un);
      t.eigenvalues.push_back(mu);
      t.boundary_error.push_back(err);
      const double excess = out.exact.distance(mu);
      t.max_excess = std::max(t.max_excess, excess);
      if (excess > err + 1e-12) t.inside = false;
    }
    out.truncations.push_back(std::move(t));
  }
  return out;
}

ReductionReport dihedral_reduction_check(const OmegaWord& w, unsigned depth) {
  if (depth == 0) throw InvalidArgument("depth must be at least 1");
  std::array<std::vector<std::uint32_t>, 4> p;
  for (auto g : kGenerators)
    p[static_cast<std::size_t>(g)] = generator_level_permutation(g, w, depth);
  const auto& A = p[0];
  const auto& B = p[1];
  const auto& C = p[2];
  const auto& D = p[3];

  ReductionReport r;
  r.depth = depth;
  const std::size_t n = A.size();
  // Column x of a permutation matrix P_g is e_{g(x)}.
  const auto t_col = [&](std::uint32_t x) {
    std::map<std::uint32_t, long long> col;
    ++col[B[x]];
    ++col[C[x]];
    ++col[D[x]];
    --col[x];
    return col;
  };
  const auto clean = [](std::map<std::uint32_t, long long>& m) {
    std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
  };
  for (std::uint32_t x = 0; x < n; ++x) {
    bool bad = false;
    std::map<std::uint32_t, long long> sq;
    for (const auto& [y, a] : t_col(x))
      for (const auto& [z, b] : t_col(y)) sq[z] += a * b;
    clean(sq);
    if (sq != std::map<std::uint32_t, long long>{{x, 4}}) {
      r.t_squared_identity = false;
      bad = true;
    }
    std::map<std::uint32_t, long long> lhs{{A[x], 1}};
    ++lhs[B[x]];
    ++lhs[C[x]];
    ++lhs[D[x]];
    std::map<std::uint32_t, long long> rhs = t_col(x);
    ++rhs[A[x]];
    ++rhs[x];
    clean(lhs);
    clean(rhs);
    if (lhs != rhs) {
      r.markov_identity = false;
      bad = true;
    }
    if (bad) ++r.violations;
  }
  return r;
}

}  // namespace gomega
