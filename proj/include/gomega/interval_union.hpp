#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gomega {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Nonempty sorted list of disjoint closed intervals.
class IntervalUnion {
 public:
  /// Throws InvalidArgument unless the intervals are nonempty, sorted and disjoint.
  explicit IntervalUnion(std::vector<Interval> parts);

  /// Grammar: "[a,b]u[c,d]u..." (whitespace ignored). Throws FormatError.
  static IntervalUnion parse(std::string_view text);

  std::span<const Interval> parts() const { return parts_; }
  bool contains(double x, double tol = 0.0) const;
  /// Distance from x to the set.
  double distance(double x) const;
  /// {a x + b : x in the set}; a may be negative, a = 0 is rejected.
  IntervalUnion affine(double a, double b) const;

  /// sup over points of `points` of the distance to the set.
  double excess_of(std::span<const double> points) const;
  /// sup over the set of the distance to the nearest point of `points`
  /// (infinite for an empty point set).
  double coverage_gap(std::span<const double> points) const;

  std::string to_string() const;
  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  std::vector<Interval> parts_;
};

}  // namespace gomega
