#pragma once

#include <cmath>
#include <string>

namespace signsum {

inline constexpr double kReportTol = 1e-9;

/// One checked instance of an inequality lhs >= rhs.
struct BoundReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool equality = false;
  std::string context;

  double scale() const { return 1.0 + std::abs(lhs) + std::abs(rhs); }
  /// The inequality holds up to the scaled tolerance.
  bool holds(double tol = kReportTol) const { return slack >= -tol * scale(); }
};

/// Report with equality decided purely by |slack| <= tol * scale.
inline BoundReport make_report(double lhs, double rhs, std::string context,
                               double tol = kReportTol) {
  BoundReport r{lhs, rhs, lhs - rhs, false, std::move(context)};
  r.equality = std::abs(r.slack) <= tol * r.scale();
  return r;
}

}  // namespace signsum
