#pragma once

#include <optional>
#include <string>
#include <vector>

#include "signsum/circumball.hpp"
#include "signsum/geom2d.hpp"
#include "signsum/report.hpp"

namespace signsum {

enum class CKind { exact, lower, upper, estimate };

const char* to_string(CKind kind);

/// A value of, or bound on, c(d, n, k): the smallest possible largest norm of
/// a signed sum of k out of n unit vectors in R^d.
struct CValue {
  int d = 2;
  int n = 1;
  int k = 1;
  double value = 0.0;
  CKind kind = CKind::estimate;
};

/// c(2, n, n) = 1 / sin(pi / 2n).
CValue c_exact_2nn(int n);

/// c(2, n, k) >= 1 / sin(pi / 2k) for every n >= k. `n` defaults to k.
CValue c_lower_bound(int k, int n = 0);

/// c(d, n, k) <= 1 / sin(pi / 2n) for every d >= 2 and k <= n.
CValue c_upper_bound(int n, int d = 2, int k = 0);

/// Planar bodies with their origin-symmetric versions (K - K) / 2 and the
/// circumradii of those.
class SymmetricBodySet {
 public:
  /// Symmetrizes every body. A warning is recorded for each input that was
  /// not already centrally symmetric within 1e-9.
  explicit SymmetricBodySet(std::vector<ConvexPolygon> bodies);

  const std::vector<ConvexPolygon>& bodies() const { return bodies_; }
  const std::vector<double>& radii() const { return radii_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  std::size_t size() const { return bodies_.size(); }

  ConvexPolygon sum() const { return minkowski_sum(bodies_); }

 private:
  std::vector<ConvexPolygon> bodies_;
  std::vector<double> radii_;
  std::vector<std::string> warnings_;
};

/// R(K^1 + ... + K^n) >= (1 / (n sin(pi / 2n))) (R(K^1) + ... + R(K^n)).
BoundReport minkowski_circumradius_check(const SymmetricBodySet& s);

/// For segment bodies: the directions, folded into [0, pi), form a rotation of
/// {j pi / n} and all lengths agree, each within `tol`. Throws for bodies with
/// more than two vertices or fewer than two bodies.
bool equality_direction_check(const SymmetricBodySet& s, double tol);

/// Every longest vertex pair of P, within `rel_tol` of the diameter.
std::vector<Segment> longest_segments(const ConvexPolygon& p, double rel_tol = 1e-6);

/// The diameter segment when it is unique under `rel_tol`. Heuristic gate,
/// not a certificate.
std::optional<Segment> unique_longest_segment(const ConvexPolygon& p, double rel_tol = 1e-6);

/// Necessary condition for equality in the symmetric-sum bound for general
/// bodies: each body has a unique longest segment and those segments pass
/// equality_direction_check. False if some body has no unique one.
bool longest_segment_condition(const SymmetricBodySet& s, double tol);

/// Volume of the unit ball in R^d via the recurrence k_d = k_{d-2} 2 pi / d.
double ball_volume(int d);

/// 2 k_{d-1} / (d k_d).
double remark_constant(int d);

/// Planar mean-width functional W_1(P) = per(P) / 2.
double quermassintegral_w1(const ConvexPolygon& p);

/// W_{d-1} of a ball of radius rho in R^d: k_d rho.
double quermassintegral_ball(int d, double rho);

/// W_{d-1} of a segment of length 2 rho in R^d: 2 k_{d-1} rho / d.
double quermassintegral_segment(int d, double rho);

/// The planar chain
///   k_2 R(sum K) >= W_1(sum K) = sum W_1(K^i) >= k_1 sum R(K^i)
/// as four reports: the three links and the end-to-end bound
/// R(sum K) >= (2 / pi) sum R(K^i).
std::vector<BoundReport> remark_chain_check(const SymmetricBodySet& s);

/// R(S^1 + ... + S^n) / sum R(S^i) for n unit segments at angles j pi / n,
/// in closed form 1 / (n sin(pi / 2n)).
double zonoid_disc_ratio(int n);

/// Same ratio measured on the constructed zonotope.
double zonoid_disc_ratio_geometric(int n);

}  // namespace signsum
