#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gomega/covering.hpp"

namespace gomega {

enum class HulanickiMode {
  finite_target,  // exact eigenpair on a finite target, f_k on B_{k+N+1}(v), N = |V_2|
  subexp,         // approximate eigenvector, f_k on B_k(v)
};

struct HulanickiResult {
  HulanickiMode mode = HulanickiMode::subexp;
  int k = 0;
  double lambda = 0.0;
  /// ||H_1 f_k - lambda f_k|| / ||f_k||
  double residual = 0.0;
  /// Upper bound on residual^2 assembled from the measured ball and fiber
  /// counts; infinite when the relevant fiber count vanishes.
  double bound = 0.0;
  bool sound = true;  // residual^2 <= bound + 1e-9

  int N = 0;
  int truncation_radius = 0;       // f_k = f o phi on B_truncation_radius(v)
  std::size_t support_size = 0;    // |supp f_k|
  double eigen_defect = 0.0;       // ||H_2 f - lambda f|| (eta_inf in finite mode)
  double rho = 0.0;                // max weighted row sum of H_2
  std::vector<std::size_t> alpha;  // alpha_0.. alpha_{needed}
};

/// Residual of the pulled-back truncated eigenvector on the covering source.
/// `f` lives on the target and is normalized internally. `root` defaults to
/// the window root (or vertex 0).
/// Throws NotAnEigenpair (finite mode, ||H_2 f - lambda f|| > 1e-9),
/// WindowTooSmall, InvalidArgument.
HulanickiResult hulanicki_residual(const CoveringMap& c, double lambda,
                                   std::span<const Weight> f, HulanickiMode mode,
                                   int k, std::optional<Vertex> root = {});

struct InclusionEntry {
  double eigenvalue = 0.0;
  double best_residual = 0.0;
  int best_k = 0;
  std::vector<HulanickiResult> runs;
};

/// For every eigenvalue of H_2 on the finite target, the smallest residual
/// over the schedule.
std::vector<InclusionEntry> spectral_inclusion_report(const CoveringMap& c,
                                                      const std::vector<int>& k_schedule,
                                                      HulanickiMode mode);

}  // namespace gomega
