#include <cmath>
#include <exception>

#include "gomega/error.hpp"
#include "gomega/schreier.hpp"
#include "gomega/spectra.hpp"

namespace gomega {

SweepReport spectrum_sweep(const OmegaWord& w, unsigned n_max, const IntervalUnion& target,
                           double tol, const Limits& limits) {
  if (n_max == 0) throw InvalidArgument("n_max must be at least 1");
  if (n_max > kMaxTreeDepth || (std::size_t{1} << n_max) > limits.max_vertices)
    throw ResourceLimit("level " + std::to_string(n_max) + " exceeds the vertex cap");

  SweepReport out;
  out.levels.resize(n_max);
  std::exception_ptr failure;
  const int count = static_cast<int>(n_max);
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = count - 1; i >= 0; --i) {
    try {
      const unsigned level = static_cast<unsigned>(i) + 1;
      const SchreierGraph g = schreier_graph(w, level, limits);
      SweepLevel& slot = out.levels[static_cast<std::size_t>(i)];
      slot.level = level;
      slot.report = markov_spectrum_banded(*g.graph);
      slot.report.check_against(target, tol);
    } catch (...) {
#pragma omp critical(gomega_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<double> cumulative;
  for (auto& level : out.levels) {
    cumulative.insert(cumulative.end(), level.report.eigenvalues.begin(),
                      level.report.eigenvalues.end());
    level.cumulative_gap = target.coverage_gap(cumulative);
    out.all_contained = out.all_contained && level.report.contained;
  }
  for (std::size_t i = 1; i < out.levels.size(); ++i)
    if (out.levels[i].cumulative_gap > out.levels[i - 1].cumulative_gap)
      out.gap_non_increasing = false;
  return out;
}

double kesten_lower_bound(unsigned half_size) {
  if (half_size == 0) throw InvalidArgument("half size must be positive");
  return std::sqrt(2.0 * half_size - 1.0) / half_size;
}

KestenVerdict kesten_check(const SpectrumReport& report, unsigned half_size,
                           bool finite_graph, double tol) {
  KestenVerdict v;
  v.spectral_radius = report.spectral_radius();
  v.lower_bound = kesten_lower_bound(half_size);
  v.within_bounds =
      v.spectral_radius >= v.lower_bound - tol && v.spectral_radius <= 1.0 + tol;
  v.unit_radius = std::abs(v.spectral_radius - 1.0) <= tol;
  v.ok = v.within_bounds && (!finite_graph || v.unit_radius);
  return v;
}

}  // namespace gomega
