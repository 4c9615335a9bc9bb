#include "gomega/linear_operator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gomega/error.hpp"

namespace gomega {

LinearOperator LinearOperator::from_triplets(std::size_t dim,
                                             std::span<const Triplet> triplets) {
  // Stable sort by (row, col) keeps the summation order of duplicates.
  std::vector<std::size_t> order(triplets.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::ranges::stable_sort(order, [&](std::size_t i, std::size_t j) {
    if (triplets[i].row != triplets[j].row) return triplets[i].row < triplets[j].row;
    return triplets[i].col < triplets[j].col;
  });

  LinearOperator op;
  op.row_ptr_.assign(dim + 1, 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Triplet& t = triplets[order[k]];
    if (t.row >= dim || t.col >= dim)
      throw InvalidArgument("operator entry out of range");
    if (!op.cols_.empty() && k > 0 && triplets[order[k - 1]].row == t.row &&
        op.cols_.back() == t.col) {
      op.values_.back() += t.value;
      continue;
    }
    op.cols_.push_back(t.col);
    op.values_.push_back(t.value);
    ++op.row_ptr_[t.row + 1];
  }
  std::partial_sum(op.row_ptr_.begin(), op.row_ptr_.end(), op.row_ptr_.begin());
  return op;
}

LinearOperator LinearOperator::from_dense(const Eigen::MatrixXcd& m) {
  std::vector<Triplet> t;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (m(r, c) != Weight{0.0, 0.0})
        t.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c),
                     m(r, c)});
  return from_triplets(static_cast<std::size_t>(m.rows()), t);
}

void LinearOperator::apply(std::span<const Weight> in, std::span<Weight> out,
                           kernels::Policy policy) const {
  if (in.size() != dim() || out.size() != dim())
    throw InvalidArgument("operator/vector dimension mismatch");
  kernels::csr_apply(policy, view(), in, out);
}

std::vector<Weight> LinearOperator::apply(std::span<const Weight> in) const {
  std::vector<Weight> out(dim());
  apply(in, out);
  return out;
}

Weight LinearOperator::entry(std::size_t row, std::size_t col) const {
  for (std::size_t k = row_ptr_[row]; k < row_ptr_[row + 1]; ++k)
    if (cols_[k] == col) return values_[k];
  return {0.0, 0.0};
}

Eigen::MatrixXcd LinearOperator::dense(std::size_t cap) const {
  if (dim() > cap)
    throw ResourceLimit("dense materialization of dimension " +
                        std::to_string(dim()) + " exceeds the cap " +
                        std::to_string(cap));
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim()),
                                              static_cast<Eigen::Index>(dim()));
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      m(static_cast<Eigen::Index>(r), cols_[k]) = values_[k];
  return m;
}

bool LinearOperator::is_self_adjoint() const {
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      if (entry(cols_[k], r) != std::conj(values_[k])) return false;
  return true;
}

bool LinearOperator::is_real() const {
  return std::ranges::all_of(values_, [](Weight w) { return w.imag() == 0.0; });
}

double LinearOperator::max_row_abs_sum() const {
  double best = 0.0;
  for (std::size_t r = 0; r < dim(); ++r) {
    double s = 0.0;
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) s += std::abs(values_[k]);
    best = std::max(best, s);
  }
  return best;
}

double LinearOperator::norm_estimate() const {
  std::vector<double> col_sums(dim(), 0.0);
  double frob = 0.0;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    col_sums[cols_[k]] += std::abs(values_[k]);
    frob += std::norm(values_[k]);
  }
  const double one = col_sums.empty() ? 0.0 : *std::ranges::max_element(col_sums);
  return std::min(std::sqrt(one * max_row_abs_sum()), std::sqrt(frob));
}

std::vector<LinearOperator::Triplet> LinearOperator::triplets() const {
  std::vector<Triplet> out;
  out.reserve(values_.size());
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      out.push_back({static_cast<std::uint32_t>(r), cols_[k], values_[k]});
  return out;
}

LinearOperator laplace_type_operator(const WeightedGraph& g) {
  std::vector<LinearOperator::Triplet> t;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (EdgeId e : g.star(v))
      t.push_back({v, g.other_end(e, v), g.weight_at(e, v)});
  return LinearOperator::from_triplets(g.vertex_count(), t);
}

LinearOperator markov_operator(const WeightedGraph& g) {
  std::vector<LinearOperator::Triplet> t;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0)
      throw IsolatedVertex("vertex " + g.name(v) + " has no incident edges");
    const double w = 1.0 / static_cast<double>(g.degree(v));
    for (EdgeId e : g.star(v)) t.push_back({v, g.other_end(e, v), w});
  }
  return LinearOperator::from_triplets(g.vertex_count(), t);
}

LinearOperator cayley_laplacian(const WeightedGraph& g,
                                std::size_t generator_count) {
  std::vector<LinearOperator::Triplet> t;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != generator_count)
      throw NotRegular("vertex " + g.name(v) + " has degree " +
                       std::to_string(g.degree(v)) + ", expected " +
                       std::to_string(generator_count));
    t.push_back({v, v, static_cast<double>(generator_count)});
    for (EdgeId e : g.star(v)) t.push_back({v, g.other_end(e, v), -1.0});
  }
  return LinearOperator::from_triplets(g.vertex_count(), t);
}

WeightedGraph operator_graph(const LinearOperator& h) {
  WeightedGraph g(h.dim());
  for (const auto& t : h.triplets()) {
    if (t.row == t.col) {
      g.add_loop(t.row, t.value);
    } else if (t.row < t.col) {
      g.add_edge(t.row, t.col, t.value, h.entry(t.col, t.row));
    } else if (h.entry(t.col, t.row) == Weight{0.0, 0.0}) {
      // Only the lower entry is nonzero; keep a zero weight on the upper side.
      g.add_edge(t.col, t.row, 0.0, t.value);
    }
  }
  return g;
}

}  // namespace gomega
