#include "doctest.h"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "gomega/error.hpp"
#include "gomega/hulanicki.hpp"
#include "gomega/linear_operator.hpp"
#include "gomega/schreier.hpp"

using namespace gomega;

namespace {

const OmegaWord kW = OmegaWord::parse(":012");

CoveringMap markov(const CoveringMap& c) { return reweighted(c, with_markov_weights(*c.target)); }

struct Eigenpair {
  double value;
  std::vector<Weight> vector;
};

std::vector<Eigenpair> eigenpairs(const WeightedGraph& g) {
  const Eigen::MatrixXcd m = laplace_type_operator(g).dense();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  std::vector<Eigenpair> out;
  for (int i = 0; i < m.rows(); ++i) {
    Eigenpair p{es.eigenvalues()(i), {}};
    for (int j = 0; j < m.rows(); ++j) p.vector.push_back(es.eigenvectors()(j, i));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

TEST_CASE("constant eigenvector pulls back exactly") {
  const auto c = markov(level_projection_covering(kW, 3, 2));
  std::vector<Weight> f(4, 1.0);
  for (int k : {2, 4}) {
    const auto r = hulanicki_residual(c, 1.0, f, HulanickiMode::finite_target, k);
    CHECK(r.residual < 1e-14);
    CHECK(r.sound);
    CHECK(r.N == 4);
    CHECK(r.truncation_radius == k + 5);
    CHECK(r.support_size == 8);
  }
}

TEST_CASE("eigenvalue one half on a finite cover") {
  const auto c = markov(level_projection_covering(kW, 3, 2));
  const auto& t = *c.target;
  std::vector<Weight> f(4);
  f[*t.find("10")] = 1.0;
  f[*t.find("00")] = -1.0;
  f[*t.find("01")] = -1.0;
  f[*t.find("11")] = 1.0;
  const auto r = hulanicki_residual(c, 0.5, f, HulanickiMode::finite_target, 2);
  CHECK(r.residual < 1e-14);
  CHECK(r.sound);
  CHECK(r.eigen_defect < 1e-15);
  CHECK(r.rho == doctest::Approx(1.0));
}

TEST_CASE("finite mode rejects approximate eigenpairs") {
  const auto c = markov(level_projection_covering(kW, 3, 2));
  std::vector<Weight> f{1.0, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(hulanicki_residual(c, 0.5, f, HulanickiMode::finite_target, 2), NotAnEigenpair);
  std::vector<Weight> short_f{1.0};
  CHECK_THROWS_AS(hulanicki_residual(c, 1.0, short_f, HulanickiMode::subexp, 2), InvalidArgument);
  std::vector<Weight> zero(4, 0.0);
  CHECK_THROWS_AS(hulanicki_residual(c, 1.0, zero, HulanickiMode::subexp, 2), InvalidArgument);
  std::vector<Weight> ones(4, 1.0);
  CHECK_THROWS_AS(hulanicki_residual(c, 1.0, ones, HulanickiMode::subexp, -1), InvalidArgument);
}

TEST_CASE("Cayley ball residuals are positive and sound") {
  const auto ball = cayley_ball(kW, 13, 2);
  const auto c = markov(ball.cover);
  const auto pairs = eigenpairs(*c.target);
  for (const auto& p : pairs) {
    for (int k : {4, 6, 8}) {
      const auto r = hulanicki_residual(c, p.value, p.vector, HulanickiMode::subexp, k);
      CHECK(r.sound);
      CHECK(r.residual * r.residual <= r.bound + 1e-9);
      CHECK(r.residual >= 0.0);
      CHECK(r.truncation_radius == k);
      for (std::size_t j = 1; j < r.alpha.size(); ++j) CHECK(r.alpha[j] >= r.alpha[j - 1]);
      if (std::abs(p.value - (1.0 - std::sqrt(5.0)) / 4.0) < 1e-9) CHECK(r.residual > 0.0);
    }
  }
  CHECK_THROWS_AS(hulanicki_residual(c, pairs[0].value, pairs[0].vector, HulanickiMode::subexp, 12),
                  WindowTooSmall);
}

TEST_CASE("finite mode on a Cayley window is sound") {
  const auto ball = cayley_ball(kW, 12, 2);
  const auto c = markov(ball.cover);
  for (const auto& p : eigenpairs(*c.target)) {
    const auto r = hulanicki_residual(c, p.value, p.vector, HulanickiMode::finite_target, 4);
    CHECK(r.sound);
    CHECK(r.truncation_radius == 9);
  }
}

TEST_CASE("spectral inclusion reports") {
  const auto g2 = schreier_graph(kW, 2);
  CoveringMap id;
  id.source = g2.graph;
  id.target = g2.graph;
  for (Vertex v = 0; v < 4; ++v) id.vertex_map.push_back(v);
  for (EdgeId e = 0; e < g2.graph->edge_count(); ++e) id.edge_map.push_back(e);
  id = markov(id);
  auto rep = spectral_inclusion_report(id, {0, 1}, HulanickiMode::finite_target);
  REQUIRE(rep.size() == 4);
  for (const auto& e : rep) {
    CHECK(e.best_residual < 1e-12);
    CHECK(e.runs.size() == 2);
    for (const auto& r : e.runs) CHECK(r.sound);
  }

  const auto c6 = markov(level_projection_covering(kW, 6, 2));
  rep = spectral_inclusion_report(c6, {60}, HulanickiMode::finite_target);
  for (const auto& e : rep) CHECK(e.best_residual < 1e-12);
  CHECK(rep[0].eigenvalue == doctest::Approx((1.0 - std::sqrt(5.0)) / 4.0));

  CHECK_THROWS_AS(spectral_inclusion_report(c6, {}, HulanickiMode::finite_target), InvalidArgument);
  auto skew = c6;
  {
    WeightedGraph t = *skew.target;
    t.set_weight_at(0, t.edge(0).u, {0.0, 0.3});
    skew = reweighted(skew, t);
  }
  CHECK_THROWS_AS(spectral_inclusion_report(skew, {1}, HulanickiMode::finite_target), NotSelfAdjoint);
}
