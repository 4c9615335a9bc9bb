#include <charconv>
#include <cstdlib>
#include <string_view>

#include "gomega/cli.hpp"
#include "gomega/error.hpp"
#include "gomega/io.hpp"
#include "gomega/kernels.hpp"

namespace gomega {

void RunConfig::validate() const {
  if (limits.max_vertices == 0 || limits.max_depth == 0 || limits.max_ball == 0 ||
      limits.dense_cap == 0)
    throw InvalidArgument("resource caps must be positive");
  if (limits.max_depth > 24) throw InvalidArgument("max depth cannot exceed 24");
  for (double t : {membership_tol, eigen_tol})
    if (!(t > 0.0 && t < 1.0)) throw InvalidArgument("tolerances must lie in (0, 1)");
}

namespace {

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  const std::string_view s(raw);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value == 0)
    throw InvalidArgument(std::string(name) + " must be a positive integer");
  return value;
}

}  // namespace

void RunConfig::apply_environment() {
  limits.max_vertices = env_size(kEnvMaxVertices, limits.max_vertices);
  limits.max_depth = static_cast<unsigned>(env_size(kEnvMaxDepth, limits.max_depth));
}

nlohmann::json RunConfig::to_json() const {
  return {{"max_vertices", limits.max_vertices},
          {"max_depth", limits.max_depth},
          {"max_ball", limits.max_ball},
          {"dense_cap", limits.dense_cap},
          {"membership_tol", format_double(membership_tol)},
          {"eigen_tol", format_double(eigen_tol)},
          {"reproducible", reproducible},
          {"kernel_policy",
           kernels::default_policy() == kernels::Policy::serial ? "serial" : "parallel"},
          {"output", output},
          {"csv", csv}};
}

}  // namespace gomega
