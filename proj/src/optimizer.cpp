#include "signsum/optimizer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "signsum/bounds.hpp"
#include "signsum/zonotope.hpp"

namespace signsum {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvPhi = 0.6180339887498949;
constexpr double kSandwichTol = 1e-6;
// Surrogate stages run only when the enumeration is this small.
constexpr double kSmoothingLimit = 4096;
constexpr double kSmoothingPowers[] = {16.0, 256.0};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in [0, 1) from the top 53 bits, independent of the library's
// distribution implementations.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

using Objective = std::function<double(const std::vector<double>&)>;

struct LineResult {
  double t = 0.0;
  double value = 0.0;
};

// Golden-section search for min over t in [-h, h] of f(x + t dir). The
// starting point t = 0 is always a candidate, so the result never worsens.
LineResult golden_line(const Objective& f, const std::vector<double>& x,
                       const std::vector<double>& dir, double h, double width, double f0) {
  std::vector<double> y(x.size());
  auto eval = [&](double t) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + t * dir[i];
    return f(y);
  };
  double a = -h;
  double b = h;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  LineResult best{0.0, f0};
  auto keep = [&](double t, double v) {
    if (v < best.value) best = {t, v};
  };
  keep(c, fc);
  keep(d, fd);
  while (b - a > width) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = eval(c);
      keep(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = eval(d);
      keep(d, fd);
    }
  }
  return best;
}

struct LocalResult {
  std::vector<double> x;
  double value = 0.0;
};

// Coordinate sweeps plus the same number of random-direction line searches
// per round. The random directions get past kinks where two or more terms of
// the max tie and no single coordinate descends. The bracket halves whenever
// a round only takes short steps.
LocalResult local_search(const Objective& f, std::vector<double> x, const OptimizerSettings& s,
                         double h, std::mt19937_64& rng) {
  double fx = f(x);
  std::vector<double> dir(x.size());
  for (int iter = 0; iter < s.max_iters && h > s.tol; ++iter) {
    double longest_step = 0.0;
    auto try_dir = [&] {
      const LineResult r = golden_line(f, x, dir, h, std::max(s.tol, 1e-3 * h), fx);
      if (r.value < fx) {
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += r.t * dir[i];
        fx = r.value;
        longest_step = std::max(longest_step, std::abs(r.t));
      }
    };
    for (std::size_t i = 0; i < x.size(); ++i) {
      std::fill(dir.begin(), dir.end(), 0.0);
      dir[i] = 1.0;
      try_dir();
    }
    for (std::size_t r = 0; r < x.size(); ++r) {
      double len = 0.0;
      for (auto& c : dir) {
        c = 2.0 * unit_uniform(rng) - 1.0;
        len += c * c;
      }
      len = std::sqrt(len);
      if (len == 0.0) continue;
      for (auto& c : dir) c /= len;
      try_dir();
    }
    h = std::min(h, std::max(2.0 * longest_step, 0.5 * h));
  }
  return {std::move(x), fx};
}

std::vector<double> full_angles(int d, const std::vector<double>& free_params) {
  // The first vector is pinned: angle 0 for d = 2, the north pole for d = 3.
  std::vector<double> angles(d == 2 ? 1 : 2, 0.0);
  angles.insert(angles.end(), free_params.begin(), free_params.end());
  return angles;
}

// Calls visit(idx, signs, v) for every k-subset idx of u and every sign
// pattern with signs[0] = +1, where v is the signed sum. Signs follow a Gray
// code within each subset.
template <class Visit>
void for_each_signed_subset(const std::vector<VecN>& u, int k, Visit&& visit) {
  const int n = static_cast<int>(u.size());
  const std::size_t d = u.front().size();
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<double> v(d);
  std::vector<int> signs(static_cast<std::size_t>(k));
  const std::uint64_t patterns = std::uint64_t{1} << (k - 1);
  while (true) {
    std::fill(v.begin(), v.end(), 0.0);
    std::fill(signs.begin(), signs.end(), 1);
    for (int i : idx) {
      for (std::size_t c = 0; c < d; ++c) v[c] += u[static_cast<std::size_t>(i)][c];
    }
    visit(idx, signs, v);
    for (std::uint64_t t = 1; t < patterns; ++t) {
      const std::size_t j = static_cast<std::size_t>(std::countr_zero(t)) + 1;
      signs[j] = -signs[j];
      const auto& w = u[static_cast<std::size_t>(idx[j])];
      for (std::size_t c = 0; c < d; ++c) v[c] += 2.0 * signs[j] * w[c];
      visit(idx, signs, v);
    }
    // Next combination in lexicographic order.
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

double squared(const std::vector<double>& v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return s;
}

double max_signed_subset_sum(const std::vector<VecN>& u, int k) {
  double best = 0.0;
  for_each_signed_subset(u, k, [&](const auto&, const auto&, const std::vector<double>& v) {
    best = std::max(best, squared(v));
  });
  return std::sqrt(best);
}

// Power mean of all signed k-subset sum norms. Smooth in the angles and
// increasing to the max as p grows.
double smoothed_subset_sum(const std::vector<VecN>& u, int k, double p) {
  std::vector<double> norms;
  norms.reserve(static_cast<std::size_t>(enumeration_size(static_cast<int>(u.size()), k)));
  for_each_signed_subset(u, k, [&](const auto&, const auto&, const std::vector<double>& v) {
    norms.push_back(std::sqrt(squared(v)));
  });
  const double top = *std::max_element(norms.begin(), norms.end());
  if (top == 0.0) return 0.0;
  double acc = 0.0;
  for (double x : norms) acc += std::exp(p * std::log(x / top));
  return top * std::pow(acc / static_cast<double>(norms.size()), 1.0 / p);
}

struct Piece {
  double value = 0.0;
  Eigen::VectorXd grad;
};

// Signed sums within rel * max of the max, with their gradients in the free
// parameters.
std::vector<Piece> near_max_pieces(int d, const std::vector<double>& params, int k, double rel) {
  const auto c = UnitConfiguration::from_angles(d, full_angles(d, params));
  const auto& a = c.angles;
  const double top = max_signed_subset_sum(c.vectors, k);
  std::vector<Piece> out;
  if (top == 0.0) return out;
  const double floor2 = std::pow(top * (1.0 - rel), 2);
  for_each_signed_subset(c.vectors, k, [&](const std::vector<int>& idx, const std::vector<int>& signs,
                                           const std::vector<double>& v) {
    const double f2 = squared(v);
    if (f2 < floor2) return;
    Piece p{std::sqrt(f2), Eigen::VectorXd::Zero(static_cast<Eigen::Index>(params.size()))};
    for (std::size_t q = 0; q < idx.size(); ++q) {
      const auto j = static_cast<std::size_t>(idx[q]);
      if (j == 0) continue;
      const double e = signs[q] / p.value;
      if (d == 2) {
        p.grad[static_cast<Eigen::Index>(j - 1)] += e * (-v[0] * std::sin(a[j]) + v[1] * std::cos(a[j]));
      } else {
        const double po = a[2 * j], az = a[2 * j + 1];
        const auto base = static_cast<Eigen::Index>(2 * (j - 1));
        p.grad[base] += e * (v[0] * std::cos(po) * std::cos(az) + v[1] * std::cos(po) * std::sin(az) -
                             v[2] * std::sin(po));
        p.grad[base + 1] += e * std::sin(po) * (-v[0] * std::sin(az) + v[1] * std::cos(az));
      }
    }
    out.push_back(std::move(p));
  });
  return out;
}

// Minimax polish for a kinked optimum. For each guess of the tied set: a
// least-squares step that equalizes the tied sums, then a line search along
// the mean gradient projected onto directions that keep them tied. Only
// steps that lower the true max are kept.
LocalResult active_set_polish(const Objective& f, int d, int k, std::vector<double> x, double fx) {
  const auto dim = static_cast<Eigen::Index>(x.size());
  auto shifted = [&](const Eigen::VectorXd& dx) {
    std::vector<double> y = x;
    for (Eigen::Index i = 0; i < dim; ++i) y[static_cast<std::size_t>(i)] += dx[i];
    return y;
  };
  for (int iter = 0; iter < 60; ++iter) {
    std::vector<double> best_x;
    double best_f = fx;
    for (double rel : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-8}) {
      const auto act = near_max_pieces(d, x, k, rel);
      if (act.empty()) break;
      const auto m = static_cast<Eigen::Index>(act.size());
      Eigen::VectorXd step = Eigen::VectorXd::Zero(dim);
      Eigen::VectorXd mean = Eigen::VectorXd::Zero(dim);
      for (const auto& p : act) mean += p.grad / static_cast<double>(m);
      Eigen::VectorXd descent = -mean;
      if (m >= 2) {
        Eigen::MatrixXd jac(m - 1, dim);
        Eigen::VectorXd gap(m - 1);
        for (Eigen::Index i = 1; i < m; ++i) {
          jac.row(i - 1) = (act[i].grad - act[0].grad).transpose();
          gap[i - 1] = act[i].value - act[0].value;
        }
        const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(jac);
        step = -cod.solve(gap);
        descent = -(mean - cod.solve(jac * mean));
      }
      std::vector<double> x1 = shifted(step);
      const double f1 = f(x1);
      if (f1 < best_f) {
        best_f = f1;
        best_x = x1;
      }
      const double len = descent.norm();
      if (len <= 1e-14) continue;
      std::vector<double> dir(x.size());
      for (Eigen::Index i = 0; i < dim; ++i) dir[static_cast<std::size_t>(i)] = descent[i] / len;
      const double h = std::max(1e-6, 4.0 * step.norm());
      const LineResult r = golden_line(f, x1, dir, h, 1e-12 * h, f1);
      if (r.value < best_f) {
        best_f = r.value;
        for (std::size_t i = 0; i < x1.size(); ++i) x1[i] += r.t * dir[i];
        best_x = std::move(x1);
      }
    }
    if (best_x.empty()) break;
    x = std::move(best_x);
    fx = best_f;
  }
  return {std::move(x), fx};
}

void validate(int d, int n, int k) {
  if (d != 2 && d != 3) throw OptimizerError("d must be 2 or 3");
  if (n < 1) throw OptimizerError("n must be positive");
  if (k < 1 || k > n) throw OptimizerError("need 1 <= k <= n");
  if (!(d == 2 && k == n) && enumeration_size(n, k) > kEnumerationGuard) {
    throw OptimizerError("enumeration guard exceeded (C(n,k) 2^(k-1) > 1e7); use d=2 with k=n "
                         "or smaller parameters");
  }
}

}  // namespace

UnitConfiguration UnitConfiguration::from_angles(int d, std::vector<double> angles) {
  UnitConfiguration c;
  c.d = d;
  if (d == 2) {
    for (double a : angles) c.vectors.push_back({std::cos(a), std::sin(a)});
  } else if (d == 3) {
    if (angles.size() % 2 != 0) throw OptimizerError("d=3 needs (polar, azimuth) pairs");
    for (std::size_t i = 0; i < angles.size(); i += 2) {
      const double p = angles[i];
      const double a = angles[i + 1];
      c.vectors.push_back({std::sin(p) * std::cos(a), std::sin(p) * std::sin(a), std::cos(p)});
    }
  } else {
    throw OptimizerError("d must be 2 or 3");
  }
  if (c.vectors.empty()) throw OptimizerError("configuration needs at least one vector");
  c.angles = std::move(angles);
  return c;
}

double enumeration_size(int n, int k) {
  double binom = 1.0;
  for (int i = 1; i <= k; ++i) binom = binom * (n - k + i) / i;
  return binom * std::ldexp(1.0, k - 1);
}

double objective(const UnitConfiguration& c, int k) {
  const int n = static_cast<int>(c.size());
  validate(c.d, n, k);
  if (c.d == 2 && k == n) return max_signed_sum_sweep(GeneratorSet(c.vectors)).value;
  return max_signed_subset_sum(c.vectors, k);
}

std::vector<double> canonical_angles(const UnitConfiguration& c) {
  if (c.d != 2) throw OptimizerError("canonical angles are defined for d=2");
  std::vector<double> out;
  for (const auto& v : c.vectors) out.push_back(half_turn_angle({v[0], v[1]}));
  std::sort(out.begin(), out.end());
  return out;
}

ConfigurationEstimate estimate_c(int d, int n, int k, const OptimizerSettings& settings) {
  validate(d, n, k);
  if (settings.restarts < 1) throw OptimizerError("restarts must be >= 1");
  if (settings.max_iters < 1) throw OptimizerError("max_iters must be >= 1");
  if (!(settings.tol > 0.0)) throw OptimizerError("tol must be positive");

  const std::size_t free_count = static_cast<std::size_t>((n - 1) * (d - 1));
  const Objective f = [&](const std::vector<double>& params) {
    return objective(UnitConfiguration::from_angles(d, full_angles(d, params)), k);
  };

  struct Candidate {
    double value;
    std::vector<double> key;
    std::vector<double> angles;
  };
  auto better = [](const Candidate& a, const Candidate& b) {
    if (a.value < b.value - 1e-12) return true;
    if (b.value < a.value - 1e-12) return false;
    return a.key < b.key;
  };

  // Restart r draws from its own stream, so restarts are order-independent.
  const bool smoothing = free_count > 0 && enumeration_size(n, k) <= kSmoothingLimit;
  std::optional<Candidate> best;
  double best_at_cutoff = 0.0;
  const int cutoff = std::max(1, static_cast<int>(std::ceil(0.8 * settings.restarts)));
  for (int r = 0; r < settings.restarts; ++r) {
    std::mt19937_64 rng(splitmix64(settings.seed ^ splitmix64(static_cast<std::uint64_t>(r))));
    std::vector<double> x(free_count);
    for (std::size_t i = 0; i < free_count; ++i) {
      const bool azimuth = d == 3 && i % 2 == 1;
      x[i] = (azimuth ? 2.0 * kPi : kPi) * unit_uniform(rng);
    }
    // Continuation on the power-mean surrogate, then polish on the max itself.
    double h = kPi / 4.0;
    if (smoothing) {
      OptimizerSettings coarse = settings;
      coarse.tol = std::max(settings.tol, 1e-5);
      for (double p : kSmoothingPowers) {
        const Objective fp = [&](const std::vector<double>& params) {
          const auto c = UnitConfiguration::from_angles(d, full_angles(d, params));
          return smoothed_subset_sum(c.vectors, k, p);
        };
        x = local_search(fp, std::move(x), coarse, h, rng).x;
        h = kPi / 64.0;
      }
    }
    const LocalResult lr = local_search(f, std::move(x), settings, h, rng);
    auto angles = full_angles(d, lr.x);
    const auto cfg = UnitConfiguration::from_angles(d, angles);
    Candidate cand{objective(cfg, k), d == 2 ? canonical_angles(cfg) : angles, std::move(angles)};
    if (!best || better(cand, *best)) best = std::move(cand);
    if (r + 1 == cutoff) best_at_cutoff = best->value;
  }

  ConfigurationEstimate e;
  e.converged = best_at_cutoff - best->value <= 1e-9;
  std::vector<double> angles = best->angles;
  if (smoothing) {
    std::vector<double> free_params(angles.begin() + (d == 2 ? 1 : 2), angles.end());
    const double f0 = f(free_params);
    angles = full_angles(d, active_set_polish(f, d, k, std::move(free_params), f0).x);
  }
  e.d = d;
  e.n = n;
  e.k = k;
  e.best_config = UnitConfiguration::from_angles(d, angles);
  e.best_value = objective(e.best_config, k);
  e.restarts_used = settings.restarts;
  e.seed = settings.seed;
  return e;
}

SandwichReport sandwich_check(const ConfigurationEstimate& e) {
  SandwichReport s;
  s.lower_applies = e.d == 2;
  const double lower = c_lower_bound(e.k, e.n).value;
  const double upper = c_upper_bound(e.n, std::max(e.d, 2), e.k).value;
  const std::string tag = "(" + std::to_string(e.d) + "," + std::to_string(e.n) + "," +
                          std::to_string(e.k) + ")";
  s.lower = make_report(e.best_value, lower, "sandwich lower " + tag, kSandwichTol);
  s.upper = make_report(upper, e.best_value, "sandwich upper " + tag, kSandwichTol);
  const bool lower_ok = !s.lower_applies || e.best_value >= lower - kSandwichTol;
  s.holds = lower_ok && e.best_value <= upper + kSandwichTol;
  return s;
}

}  // namespace signsum
