#pragma once

// Quadrature rules and domain descriptors for the three Hankel domains:
// the truncated half-line, the unit interval with multiplicative measure
// dx/x, and a periodic interval. Grids are immutable after construction.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <variant>
#include <vector>

#include "hankel/errors.hpp"

namespace hankel::quadrature {

struct HalfLine {
  double truncation = 0.0;  // upper endpoint of the rule
  double floor = 0.0;       // lower endpoint (0 unless a positive floor is needed)
};
struct UnitIntervalMultiplicative {
  double floor = 0.0;  // lower truncation of (0,1), > 0
};
struct Periodic {
  double period = 0.0;
};
using Domain = std::variant<HalfLine, UnitIntervalMultiplicative, Periodic>;

struct Grid {
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // positive
  Domain domain;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
};

namespace detail {

// Legendre nodes on [-1,1] by Newton iteration on the three-term recurrence.
inline void legendre_nodes(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = -p1 / pp;
      z += dz;
      if (std::fabs(dz) <= 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

// log|L_n(x)| recurrence with on-the-fly rescaling; returns scaled values of
// L_{n-1}, L_n and the accumulated log-scale, so ratios and logs stay finite
// for nodes far out on the half-line.
struct ScaledLaguerre {
  double lnm1, ln;   // scaled L_{n-1}(x), L_n(x)
  double log_scale;  // true L = scaled * exp(log_scale)
};

inline ScaledLaguerre laguerre_scaled(int n, double x) {
  double p0 = 1.0, p1 = 1.0 - x, ls = 0.0;
  if (n == 0) return {0.0, 1.0, 0.0};
  for (int k = 1; k < n; ++k) {
    const double p2 = ((2.0 * k + 1.0 - x) * p1 - k * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
    const double m = std::fabs(p1);
    if (m > 1e260) {
      p0 *= 1e-260;
      p1 *= 1e-260;
      ls += 260.0 * std::log(10.0);
    } else if (m > 0.0 && m < 1e-260) {
      p0 *= 1e260;
      p1 *= 1e260;
      ls -= 260.0 * std::log(10.0);
    }
  }
  return {p0, p1, ls};
}

}  // namespace detail

/// Gauss-Legendre rule on [a, b]; exact for polynomials up to degree 2n-1.
inline Grid gauss_legendre(int n, double a, double b) {
  if (n < 1 || n > 10000) throw InvalidParams("gauss_legendre: requires 1 <= n <= 1e4");
  if (!(b > a)) throw InvalidParams("gauss_legendre: requires b > a");
  std::vector<double> x, w;
  detail::legendre_nodes(n, x, w);
  Grid g;
  g.nodes.resize(n);
  g.weights.resize(n);
  const double c1 = 0.5 * (b - a), c0 = 0.5 * (a + b);
  for (int i = 0; i < n; ++i) {
    g.nodes[i] = c0 + c1 * x[i];
    g.weights[i] = c1 * w[i];
  }
  g.domain = HalfLine{b, a};
  return g;
}

/// Gauss-Laguerre rule for \int_0^inf f(x) e^{-rate x} dx, folded so the grid
/// integrates f directly: the weights absorb the exponential. Weights are
/// assembled in log space; the raw Laguerre weights underflow double well
/// before n = 256.
inline Grid gauss_laguerre(int n, double rate) {
  if (n < 1 || n > 256) throw InvalidParams("gauss_laguerre: requires 1 <= n <= 256");
  if (!(rate > 0.0)) throw InvalidParams("gauss_laguerre: requires rate > 0");
  std::vector<double> x(n), lw(n);
  double z = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == 0)
      z = 3.0 / (1.0 + 2.4 * n);
    else if (i == 1)
      z += 15.0 / (1.0 + 2.5 * n);
    else {
      const double ai = i - 1;
      z += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - x[i - 2]);
    }
    for (int it = 0; it < 100; ++it) {
      const auto sl = detail::laguerre_scaled(n, z);
      // L'_n = n (L_n - L_{n-1}) / x, same scale as the values
      const double deriv = n * (sl.ln - sl.lnm1) / z;
      const double dz = -sl.ln / deriv;
      z += dz;
      if (std::fabs(dz) <= 1e-14 * (1.0 + std::fabs(z))) break;
    }
    x[i] = z;
    // folded weight: w e^{x} = x e^{x} / ((n+1) L_{n+1}(x))^2
    const auto sp = detail::laguerre_scaled(n + 1, z);
    const double logL = std::log(std::fabs(sp.ln)) + sp.log_scale;
    lw[i] = std::log(z) + z - 2.0 * (std::log(n + 1.0) + logL);
  }
  Grid g;
  g.nodes.resize(n);
  g.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    g.nodes[i] = x[i] / rate;
    g.weights[i] = std::exp(lw[i]) / rate;
  }
  g.domain = HalfLine{g.nodes.back(), 0.0};
  return g;
}

/// Log-equispaced nodes with trapezoid-in-log weights; exact for dx/x.
inline Grid geometric_grid(int n, double x_min, double x_max) {
  if (n < 2) throw InvalidParams("geometric_grid: requires n >= 2");
  if (!(x_min > 0.0) || !(x_max > x_min))
    throw InvalidParams("geometric_grid: requires 0 < x_min < x_max");
  Grid g;
  g.nodes.resize(n);
  g.weights.resize(n);
  const double s0 = std::log(x_min), s1 = std::log(x_max);
  const double ds = (s1 - s0) / (n - 1);
  for (int i = 0; i < n; ++i) {
    g.nodes[i] = std::exp(s0 + i * ds);
    const double trap = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    g.weights[i] = trap * ds * g.nodes[i];
  }
  g.nodes.front() = x_min;
  g.nodes.back() = x_max;
  g.domain = HalfLine{x_max, x_min};
  return g;
}

/// Equispaced midpoint rule with uniform weights period/n; spectrally accurate
/// for periodic integrands. Nodes sit at cell midpoints so kernels singular at
/// the interval endpoints are never sampled there.
inline Grid periodic_grid(int n, double period) {
  if (n < 2) throw InvalidParams("periodic_grid: requires n >= 2");
  if (!(period > 0.0)) throw InvalidParams("periodic_grid: requires period > 0");
  Grid g;
  g.nodes.resize(n);
  g.weights.assign(n, period / n);
  for (int i = 0; i < n; ++i) g.nodes[i] = (i + 0.5) * period / n;
  g.domain = Periodic{period};
  return g;
}

/// Uniform midpoint cells on (0, T); the workhorse grid for finite-difference
/// Sturm-Liouville matrices and commutator checks.
inline Grid uniform_grid(int n, double truncation) {
  if (n < 2) throw InvalidParams("uniform_grid: requires n >= 2");
  if (!(truncation > 0.0)) throw InvalidParams("uniform_grid: requires T > 0");
  Grid g;
  const double h = truncation / n;
  g.nodes.resize(n);
  g.weights.assign(n, h);
  for (int i = 0; i < n; ++i) g.nodes[i] = (i + 0.5) * h;
  g.domain = HalfLine{truncation, 0.0};
  return g;
}

/// Gauss-Legendre in the log variable on (floor, 1); the natural rule for
/// L^2((0,1); dx/x).
inline Grid log_multiplicative_grid(int n, double floor_) {
  if (n < 1) throw InvalidParams("log_multiplicative_grid: requires n >= 1");
  if (!(floor_ > 0.0) || !(floor_ < 1.0))
    throw InvalidParams("log_multiplicative_grid: requires 0 < floor < 1");
  Grid inner = gauss_legendre(n, std::log(floor_), 0.0);
  Grid g;
  g.nodes.resize(n);
  g.weights = inner.weights;  // ds is the multiplicative measure
  for (int i = 0; i < n; ++i) g.nodes[i] = std::exp(inner.nodes[i]);
  g.domain = UnitIntervalMultiplicative{floor_};
  return g;
}

}  // namespace hankel::quadrature
