#include "gomega/interval_union.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "gomega/error.hpp"

namespace gomega {

IntervalUnion::IntervalUnion(std::vector<Interval> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidArgument("interval union must be nonempty");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (!(parts_[i].lo <= parts_[i].hi)) throw InvalidArgument("interval with lo > hi");
    if (i > 0 && !(parts_[i - 1].hi < parts_[i].lo))
      throw InvalidArgument("intervals must be sorted and disjoint");
  }
}

IntervalUnion IntervalUnion::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  std::vector<Interval> parts;
  std::size_t pos = 0;
  const auto number = [&](char stop) {
    const std::size_t end = s.find(stop, pos);
    if (end == std::string::npos)
      throw FormatError("target", "expected '" + std::string(1, stop) + "' at offset " +
                                      std::to_string(pos));
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + end, x);
    if (ec != std::errc() || ptr != s.data() + end)
      throw FormatError("target", "bad number at offset " + std::to_string(pos));
    pos = end + 1;
    return x;
  };
  while (true) {
    if (pos >= s.size() || s[pos] != '[')
      throw FormatError("target", "expected '[' at offset " + std::to_string(pos));
    ++pos;
    const double lo = number(',');
    const double hi = number(']');
    parts.push_back({lo, hi});
    if (pos == s.size()) break;
    if (s[pos] != 'u' && s[pos] != 'U')
      throw FormatError("target", "expected 'u' at offset " + std::to_string(pos));
    ++pos;
  }
  try {
    return IntervalUnion(std::move(parts));
  } catch (const InvalidArgument& e) {
    throw FormatError("target", e.what());
  }
}

bool IntervalUnion::contains(double x, double tol) const { return distance(x) <= tol; }

double IntervalUnion::distance(double x) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : parts_) {
    if (x >= p.lo && x <= p.hi) return 0.0;
    best = std::min({best, std::abs(x - p.lo), std::abs(x - p.hi)});
  }
  return best;
}

IntervalUnion IntervalUnion::affine(double a, double b) const {
  if (a == 0.0) throw InvalidArgument("affine map with zero slope");
  std::vector<Interval> out;
  for (const auto& p : parts_) {
    const double x = a * p.lo + b, y = a * p.hi + b;
    out.push_back({std::min(x, y), std::max(x, y)});
  }
  std::ranges::sort(out, {}, &Interval::lo);
  return IntervalUnion(std::move(out));
}

double IntervalUnion::excess_of(std::span<const double> points) const {
  double worst = 0.0;
  for (double x : points) worst = std::max(worst, distance(x));
  return worst;
}

double IntervalUnion::coverage_gap(std::span<const double> points) const {
  if (points.empty()) return std::numeric_limits<double>::infinity();
  std::vector<double> pts(points.begin(), points.end());
  std::ranges::sort(pts);
  // On each interval the farthest point from a sorted point set is an
  // interval end or a midpoint between consecutive points inside it.
  const auto nearest = [&](double x) {
    const auto it = std::ranges::lower_bound(pts, x);
    double d = std::numeric_limits<double>::infinity();
    if (it != pts.end()) d = *it - x;
    if (it != pts.begin()) d = std::min(d, x - *std::prev(it));
    return d;
  };
  double worst = 0.0;
  for (const auto& p : parts_) {
    worst = std::max({worst, nearest(p.lo), nearest(p.hi)});
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const double mid = 0.5 * (pts[i] + pts[i + 1]);
      if (mid > p.lo && mid < p.hi) worst = std::max(worst, nearest(mid));
    }
  }
  return worst;
}

std::string IntervalUnion::to_string() const {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << 'u';
    os << '[' << parts_[i].lo << ',' << parts_[i].hi << ']';
  }
  return os.str();
}

}  // namespace gomega
