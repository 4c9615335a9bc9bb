#include "doctest.h"

#include <cmath>
#include <random>

#include "gomega/error.hpp"
#include "gomega/linear_operator.hpp"
#include "gomega/schreier.hpp"
#include "oracles.hpp"

using namespace gomega;

namespace {

/// Eigenvalues of a Hermitian matrix through the real symmetric 2n x 2n
/// embedding [[Re, -Im], [Im, Re]], whose spectrum is that of A doubled.
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& a) {
  const std::size_t n = a.rows();
  std::vector<double> r(4 * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto z = a(i, j);
      r[i * 2 * n + j] = z.real();
      r[i * 2 * n + j + n] = -z.imag();
      r[(i + n) * 2 * n + j] = z.imag();
      r[(i + n) * 2 * n + j + n] = z.real();
    }
  const auto ev = oracle::jacobi_eigenvalues(r, 2 * n);
  std::vector<double> out;
  for (std::size_t i = 0; i < ev.size(); i += 2) out.push_back(ev[i]);
  return out;
}

WeightedGraph upsilon1_markov() {
  return with_markov_weights(upsilon_graph(UpsilonSpec::finite(1)));
}

WeightedGraph random_self_adjoint(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  WeightedGraph g(n);
  const std::size_t edges = n + rng() % (2 * n);
  for (std::size_t i = 0; i < edges; ++i) {
    const Vertex a = rng() % n, b = rng() % n;
    if (a == b) {
      g.add_loop(a, u(rng));
    } else {
      const Weight w{u(rng), u(rng)};
      g.add_edge(a, b, w, std::conj(w));
    }
  }
  return g;
}

}  // namespace

TEST_CASE("triplets are summed and stored row-major") {
  std::vector<LinearOperator::Triplet> t{{1, 0, 2.0}, {0, 1, 1.0}, {1, 0, 3.0}, {0, 0, {0, 1}}};
  const auto op = LinearOperator::from_triplets(2, t);
  CHECK(op.dim() == 2);
  CHECK(op.nonzeros() == 3);
  CHECK(op.entry(1, 0) == Weight{5.0, 0.0});
  CHECK(op.entry(1, 1) == Weight{0.0, 0.0});
  const auto trip = op.triplets();
  REQUIRE(trip.size() == 3);
  CHECK(trip[0].row == 0);
  CHECK(trip[0].col == 0);
  CHECK(trip[2].row == 1);
  CHECK_FALSE(op.is_self_adjoint());
  CHECK_FALSE(op.is_real());
  CHECK(op.max_row_abs_sum() == doctest::Approx(5.0));
  std::vector<LinearOperator::Triplet> bad{{2, 0, 1.0}};
  CHECK_THROWS_AS(LinearOperator::from_triplets(2, bad), InvalidArgument);
}

TEST_CASE("apply, dense round trip and norm estimate") {
  Eigen::MatrixXcd m(3, 3);
  m << 1, Weight(0, 2), 0, Weight(0, -2), 3, 1, 0, 1, -1;
  const auto op = LinearOperator::from_dense(m);
  CHECK(op.is_self_adjoint());
  CHECK((op.dense() - m).norm() == 0.0);
  std::vector<Weight> x{1.0, Weight(0, 1), 2.0};
  const auto y = op.apply(x);
  const Eigen::VectorXcd ex = m * Eigen::Map<Eigen::VectorXcd>(x.data(), 3);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(y[i] - ex(i)) < 1e-15);
  std::vector<Weight> ys(3), yp(3);
  op.apply(x, ys, kernels::Policy::serial);
  op.apply(x, yp, kernels::Policy::parallel);
  CHECK(ys == yp);
  const double true_norm = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(m)
                               .eigenvalues()
                               .cwiseAbs()
                               .maxCoeff();
  CHECK(op.norm_estimate() >= true_norm - 1e-12);
  std::vector<Weight> wrong(2);
  CHECK_THROWS_AS(op.apply(wrong), InvalidArgument);
  CHECK_THROWS_AS(op.dense(2), ResourceLimit);
}

TEST_CASE("laplace-type operator of small graphs") {
  WeightedGraph one(1);
  one.add_loop(0, 0.7);
  const auto h = laplace_type_operator(one);
  CHECK(h.dim() == 1);
  CHECK(h.entry(0, 0) == Weight{0.7, 0.0});

  const auto m = laplace_type_operator(upsilon1_markov()).dense();
  CHECK(m(0, 0) == Weight{0.75, 0.0});
  CHECK(m(0, 1) == Weight{0.25, 0.0});
  CHECK(m(1, 0) == Weight{0.25, 0.0});
  CHECK(m(1, 1) == Weight{0.75, 0.0});
  const auto ev = hermitian_eigenvalues(m);
  CHECK(ev[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(ev[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("markov operator coincides with markov weights") {
  const auto g = schreier_graph(OmegaWord::parse(":012"), 4);
  const auto m1 = markov_operator(*g.graph).dense();
  const auto m2 = laplace_type_operator(with_markov_weights(*g.graph)).dense();
  CHECK((m1 - m2).norm() == 0.0);
  for (int r = 0; r < m1.rows(); ++r) CHECK(std::abs(m1.row(r).sum() - 1.0) < 1e-15);
  CHECK(markov_operator(*g.graph).is_self_adjoint());
  const auto ev = hermitian_eigenvalues(m1);
  CHECK(ev.front() >= -1.0 - 1e-10);
  CHECK(ev.back() <= 1.0 + 1e-10);

  const auto single = laplace_type_operator(with_markov_weights([] {
    WeightedGraph s(1);
    s.add_loop(0);
    return s;
  }()));
  CHECK(single.entry(0, 0) == Weight{1.0, 0.0});
  CHECK_THROWS_AS(markov_operator(WeightedGraph(2)), IsolatedVertex);
}

TEST_CASE("cayley laplacian is |S|(I - M)") {
  const auto u1 = upsilon_graph(UpsilonSpec::finite(1));
  const auto d = cayley_laplacian(u1, 4).dense();
  CHECK(d(0, 0) == Weight{1.0, 0.0});
  CHECK(d(0, 1) == Weight{-1.0, 0.0});
  const auto ev = hermitian_eigenvalues(d);
  CHECK(std::abs(ev[0]) < 1e-14);
  CHECK(ev[1] == doctest::Approx(2.0));

  const auto g = schreier_graph(OmegaWord::parse(":01"), 5);
  const auto lap = cayley_laplacian(*g.graph, 4);
  const auto m = markov_operator(*g.graph).dense();
  const Eigen::MatrixXcd expect =
      4.0 * (Eigen::MatrixXcd::Identity(m.rows(), m.cols()) - m);
  CHECK((lap.dense() - expect).norm() < 1e-14);
  std::vector<Weight> ones(lap.dim(), 1.0);
  for (const auto& z : lap.apply(ones)) CHECK(std::abs(z) == 0.0);

  WeightedGraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK_THROWS_AS(cayley_laplacian(path, 2), NotRegular);
}

TEST_CASE("operator graph realizes the operator") {
  Eigen::MatrixXcd m(3, 3);
  m << 0.5, Weight(1, 1), 0, Weight(1, -1), 0, 2, 0, 2, -0.25;
  const auto op = LinearOperator::from_dense(m);
  const auto g = operator_graph(op);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 4);
  CHECK((laplace_type_operator(g).dense() - m).norm() == 0.0);
}

TEST_CASE("shift-square transform examples") {
  const auto a = upsilon1_markov();
  auto t = shift_square_transform(a, 1.0, 2.0);
  auto ev = hermitian_eigenvalues(t.op.dense());
  CHECK(ev[0] == doctest::Approx(15.0 / 16.0).epsilon(1e-14));
  CHECK(ev[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(t.radius == 2.0);

  t = shift_square_transform(a, 0.3, 2.0);
  ev = hermitian_eigenvalues(t.op.dense());
  CHECK(ev[0] == doctest::Approx(0.8775).epsilon(1e-13));
  CHECK(ev[1] == doctest::Approx(0.99).epsilon(1e-13));

  WeightedGraph c(1);
  c.add_loop(0, -0.4);
  t = shift_square_transform(c, -0.4, 2.0);
  CHECK(t.op.dim() == 1);
  CHECK(std::abs(t.op.entry(0, 0) - Weight{1.0, 0.0}) < 1e-15);

  CHECK_THROWS_AS(shift_square_transform(a, 0.0, 1.5), RadiusTooSmall);
}

TEST_CASE("transform matches the dense formula and its graph") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_self_adjoint(rng, 1 + rng() % 8);
    const auto h = laplace_type_operator(g);
    const double r = 2.0 * h.norm_estimate() + 0.1;
    const double bound = h.norm_estimate();
    const Weight lambda{std::uniform_real_distribution<double>(-bound, bound)(rng), 0.0};
    const auto t = shift_square_transform(g, lambda, r);
    const Eigen::MatrixXcd a = h.dense();
    const Eigen::MatrixXcd s = a - lambda * Eigen::MatrixXcd::Identity(a.rows(), a.cols());
    const Eigen::MatrixXcd expect =
        Eigen::MatrixXcd::Identity(a.rows(), a.cols()) - s * s.adjoint() / (r * r);
    CHECK((t.op.dense() - expect).norm() < 1e-13);
    CHECK((laplace_type_operator(t.graph).dense() - expect).norm() < 1e-13);
    CHECK(t.graph.vertex_count() == g.vertex_count());
    CHECK(t.op.is_self_adjoint());
    // positive when R >= 2 ||A|| and |lambda| <= ||A||
    CHECK(hermitian_eigenvalues(t.op.dense()).front() >= -1e-10);
  }
}

TEST_CASE("transform accepts a complex shift on an operator") {
  Eigen::MatrixXcd m(2, 2);
  m << 0, 1, 1, 0;
  const auto op = LinearOperator::from_dense(m);
  const auto t = shift_square_transform(op, Weight{0.0, 0.5}, 2.0);
  const Eigen::MatrixXcd s = m - Weight{0.0, 0.5} * Eigen::MatrixXcd::Identity(2, 2);
  const Eigen::MatrixXcd expect = Eigen::MatrixXcd::Identity(2, 2) - s * s.adjoint() / 4.0;
  CHECK((t.op.dense() - expect).norm() < 1e-15);
}

TEST_CASE("spectral shift equivalence on random graphs") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_self_adjoint(rng, 1 + rng() % 8);
    const auto h = laplace_type_operator(g);
    const auto spec = hermitian_eigenvalues(h.dense());
    const double r = 2.0 * h.norm_estimate();
    if (r == 0.0) continue;
    for (double lambda : spec) {
      const auto t = shift_square_transform(g, lambda, r);
      CHECK(std::abs(hermitian_eigenvalues(t.op.dense()).back() - 1.0) < 1e-9);
    }
    const double off = spec.back() + 0.5;
    const auto t = shift_square_transform(g, off, r);
    CHECK(hermitian_eigenvalues(t.op.dense()).back() < 1.0 - 1e-9);
  }
}
