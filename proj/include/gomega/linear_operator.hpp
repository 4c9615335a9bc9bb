#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "gomega/graph.hpp"
#include "gomega/kernels.hpp"

namespace gomega {

/// Sparse bounded operator on C^n stored as compressed rows. Immutable;
/// `apply` is reentrant.
class LinearOperator {
 public:
  struct Triplet {
    std::uint32_t row;
    std::uint32_t col;
    Weight value;
  };

  LinearOperator() = default;

  /// Duplicate (row, col) entries are summed in the order given.
  static LinearOperator from_triplets(std::size_t dim,
                                      std::span<const Triplet> triplets);
  static LinearOperator from_dense(const Eigen::MatrixXcd& m);

  std::size_t dim() const { return row_ptr_.empty() ? 0 : row_ptr_.size() - 1; }
  std::size_t nonzeros() const { return cols_.size(); }

  void apply(std::span<const Weight> in, std::span<Weight> out,
             kernels::Policy policy = kernels::default_policy()) const;
  std::vector<Weight> apply(std::span<const Weight> in) const;

  Weight entry(std::size_t row, std::size_t col) const;

  /// Dense copy; throws ResourceLimit above `cap` rows.
  Eigen::MatrixXcd dense(std::size_t cap = 4096) const;

  /// Exact test of A == A^*.
  bool is_self_adjoint() const;
  bool is_real() const;

  /// Upper bound on the operator norm: min(sqrt(||A||_1 ||A||_inf), ||A||_F).
  double norm_estimate() const;
  /// max_r sum_c |A(r, c)|
  double max_row_abs_sum() const;

  kernels::CsrView view() const { return {row_ptr_, cols_, values_}; }

  /// Nonzero entries as triplets, row-major.
  std::vector<Triplet> triplets() const;

 private:
  std::vector<std::size_t> row_ptr_;
  std::vector<std::uint32_t> cols_;
  std::vector<Weight> values_;
};

/// (H f)(v) = sum over e in E_v of alpha_{v,e} f(r_v(e)).
LinearOperator laplace_type_operator(const WeightedGraph& g);

/// (M f)(v) = (1/d(v)) sum over e in E_v of f(r_v(e)); ignores stored weights.
/// Throws IsolatedVertex if some d(v) = 0.
LinearOperator markov_operator(const WeightedGraph& g);

/// (Delta f)(v) = |S| f(v) - sum over e in E_v of f(r_v(e)) on a graph that
/// is regular of degree |S| = generator_count; equals |S| (I - M).
/// Throws NotRegular otherwise.
LinearOperator cayley_laplacian(const WeightedGraph& g,
                                std::size_t generator_count);

/// The weighted graph whose Laplace-type operator is `h`: a loop per nonzero
/// diagonal entry and one edge per nonzero off-diagonal pair.
WeightedGraph operator_graph(const LinearOperator& h);

/// I - (A - lambda)(A - lambda)^* / R^2 together with a weighted graph on the
/// same vertices realizing it: unit-shift loops, one edge per original edge
/// (the -lambda terms) and one edge per pair of edge-ends meeting at a common
/// vertex (the A A^* term).
struct ShiftSquareTransform {
  LinearOperator op;
  WeightedGraph graph;
  double radius = 0.0;
  double norm_estimate = 0.0;
};

/// Throws RadiusTooSmall when R < 2 * norm_estimate of the operator.
ShiftSquareTransform shift_square_transform(const WeightedGraph& g,
                                            Weight lambda, double radius);
ShiftSquareTransform shift_square_transform(const LinearOperator& h,
                                            Weight lambda, double radius);

}  // namespace gomega
