#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gomega/graph.hpp"
#include "gomega/interval_union.hpp"
#include "gomega/limits.hpp"
#include "gomega/linear_operator.hpp"
#include "gomega/omega.hpp"

namespace gomega {

struct SpectrumReport {
  std::vector<double> eigenvalues;  // ascending, with multiplicity
  /// ||H x - lambda x|| for each computed eigenpair (empty when the solver
  /// produced eigenvalues only).
  std::vector<double> residuals;
  std::size_t dimension = 0;
  /// Only extremal eigenvalues were computed.
  bool partial = false;

  std::optional<IntervalUnion> target;
  double tolerance = 0.0;
  bool contained = true;
  double excess = 0.0;        // sup over eigenvalues of the distance to the target
  double coverage_gap = 0.0;  // sup over the target of the distance to the eigenvalues

  void check_against(const IntervalUnion& t, double tol);
  double spectral_radius() const;
};

/// Dense solve when the dimension is within `limits.dense_cap`, otherwise
/// Lanczos with full reorthogonalization for the `extremal` smallest and
/// largest eigenvalues (flagged partial). Throws NotSelfAdjoint.
SpectrumReport eigenvalues_selfadjoint(const LinearOperator& h, const Limits& limits = {},
                                       std::size_t extremal = 8);

/// Spectrum of the Markov operator of a path-with-loops multigraph through the
/// symmetric tridiagonal matrix D^{-1/2} A D^{-1/2} in path order. Throws NotAPath.
SpectrumReport markov_spectrum_banded(const WeightedGraph& g);

struct SweepLevel {
  unsigned level = 0;
  SpectrumReport report;
  double cumulative_gap = 0.0;  // coverage gap of the target by levels 1..level
};

struct SweepReport {
  std::vector<SweepLevel> levels;
  bool all_contained = true;
  bool gap_non_increasing = true;
};

/// Markov spectra of Gamma_1..Gamma_{n_max} (banded solver, levels solved
/// concurrently), each checked against `target`. Throws ResourceLimit.
SweepReport spectrum_sweep(const OmegaWord& w, unsigned n_max, const IntervalUnion& target,
                           double tol = 1e-8, const Limits& limits = {});

/// x s + y t on l^2(D_inf): the path with couplings alternating x, y.
struct DihedralTruncation {
  std::size_t length = 0;
  std::vector<double> eigenvalues;
  /// ||(H - mu) u|| for the zero-extended unit eigenvector u; bounds the
  /// distance from mu to the exact spectrum.
  std::vector<double> boundary_error;
  bool inside = true;  // every eigenvalue within its boundary error of the exact set
  double max_excess = 0.0;
};

struct DihedralSpectrum {
  double x = 0.0, y = 0.0;
  IntervalUnion exact{{{0.0, 0.0}}};  // +-[|x-y|, x+y]
  std::vector<DihedralTruncation> truncations;
};

/// Requires x > 0, y >= 0 (y = 0 is the single-involution limit).
DihedralSpectrum dihedral_weighted_spectrum(double x, double y,
                                            const std::vector<std::size_t>& lengths = {16, 64,
                                                                                       256});

/// Integer checks at `depth` with A, B, C, D the generator permutation
/// matrices: (B + C + D - I)^2 = 4 I and A + B + C + D = A + (B + C + D - I) + I.
struct ReductionReport {
  unsigned depth = 0;
  bool t_squared_identity = true;
  bool markov_identity = true;
  std::size_t violations = 0;  // columns where an identity fails
};

ReductionReport dihedral_reduction_check(const OmegaWord& w, unsigned depth);

/// sqrt(2n - 1) / n for a symmetric generating set of size 2n.
double kesten_lower_bound(unsigned half_size);

struct KestenVerdict {
  double spectral_radius = 0.0;
  double lower_bound = 0.0;
  bool within_bounds = false;
  bool unit_radius = false;  // required for finite graphs
  bool ok = false;
};

KestenVerdict kesten_check(const SpectrumReport& report, unsigned half_size,
                           bool finite_graph = true, double tol = 1e-10);

struct MomentSequence {
  Vertex base = 0;
  std::vector<double> moments;        // (M^p delta_v, delta_v) by iteration
  std::vector<double> eigen_moments;  // sum_i w_i lambda_i^p
  double max_discrepancy = 0.0;
  double hankel_min_eigenvalue = 0.0;
  bool hankel_psd = true;  // min eigenvalue >= -1e-9
};

/// Throws IsolatedVertex, ResourceLimit (eigendecomposition beyond the dense cap).
MomentSequence spectral_moments(const WeightedGraph& g, Vertex v, unsigned max_power,
                                const Limits& limits = {});

}  // namespace gomega
