#pragma once

// Nystrom discretization of the Hankel operators (additive, multiplicative
// and periodic variants), divergence-form Sturm-Liouville matrices, the
// commutation defect Phi of the main theorem, and the Tracy-Widom kernels
// with their factorization checks.
//
// Every matrix uses the same sqrt-weight symmetrization: with D = diag(w) the
// stored matrix is the conjugation of the Nystrom operator by the isometry
// f |-> sqrt(w) f(x_i), so a symmetric eigensolver serves all cases and the
// spectra approximate those of the underlying integral/differential operator.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "hankel/catalogue.hpp"
#include "hankel/errors.hpp"
#include "hankel/quadrature.hpp"
#include "hankel/specfun.hpp"

namespace hankel::operators {

using quadrature::Grid;

enum class OperatorKind { Hankel, SturmLiouville, TwKernel };

struct DiscretizedOperator {
  std::vector<double> m;  // row-major n*n, symmetric
  std::size_t n = 0;
  Grid grid;
  OperatorKind kind = OperatorKind::Hankel;

  double& at(std::size_t i, std::size_t j) { return m[i * n + j]; }
  double at(std::size_t i, std::size_t j) const { return m[i * n + j]; }

  void symmetrize() {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double v = 0.5 * (at(i, j) + at(j, i));
        at(i, j) = v;
        at(j, i) = v;
      }
  }

  std::vector<double> apply(const std::vector<double>& v) const {
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      const double* row = m.data() + i * n;
      for (std::size_t j = 0; j < n; ++j) s += row[j] * v[j];
      out[i] = s;
    }
    return out;
  }
};

namespace detail {

inline std::vector<double> sqrt_weights(const Grid& g) {
  std::vector<double> s(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) s[i] = std::sqrt(g.weights[i]);
  return s;
}

}  // namespace detail

/// M[i][j] = sqrt(w_i w_j) phi(x_i + x_j) on a half-line grid.
inline DiscretizedOperator hankel_nystrom(const std::function<double(double)>& phi,
                                          const Grid& grid) {
  if (!std::holds_alternative<quadrature::HalfLine>(grid.domain))
    throw DomainMismatch("hankel_nystrom: grid must live on the half-line");
  DiscretizedOperator op;
  op.n = grid.size();
  op.grid = grid;
  op.kind = OperatorKind::Hankel;
  op.m.resize(op.n * op.n);
  const auto sw = detail::sqrt_weights(grid);
  for (std::size_t i = 0; i < op.n; ++i)
    for (std::size_t j = i; j < op.n; ++j) {
      const double v = sw[i] * sw[j] * phi(grid.nodes[i] + grid.nodes[j]);
      op.at(i, j) = v;
      op.at(j, i) = v;
    }
  return op;
}

inline DiscretizedOperator hankel_nystrom(const catalogue::KernelCase& kc,
                                          const Grid& grid) {
  if (kc.domain != catalogue::DomainKind::HalfLine)
    throw DomainMismatch("hankel_nystrom: case " + kc.name +
                         " does not live on the half-line");
  return hankel_nystrom(kc.phi, grid);
}

/// Multiplicative variant: M[i][j] = sqrt(w_i w_j) rho(x_i x_j) with the grid
/// weights belonging to the measure dx/x on (0,1).
inline DiscretizedOperator multiplicative_hankel(const std::function<double(double)>& rho,
                                                 const Grid& grid) {
  if (!std::holds_alternative<quadrature::UnitIntervalMultiplicative>(grid.domain))
    throw DomainMismatch("multiplicative_hankel: grid must carry the dx/x measure");
  DiscretizedOperator op;
  op.n = grid.size();
  op.grid = grid;
  op.kind = OperatorKind::Hankel;
  op.m.resize(op.n * op.n);
  const auto sw = detail::sqrt_weights(grid);
  for (std::size_t i = 0; i < op.n; ++i)
    for (std::size_t j = i; j < op.n; ++j) {
      const double v = sw[i] * sw[j] * rho(grid.nodes[i] * grid.nodes[j]);
      op.at(i, j) = v;
      op.at(j, i) = v;
    }
  return op;
}

inline DiscretizedOperator multiplicative_hankel(const catalogue::KernelCase& kc,
                                                 const Grid& grid) {
  if (kc.domain != catalogue::DomainKind::UnitIntervalMultiplicative)
    throw DomainMismatch("multiplicative_hankel: case " + kc.name +
                         " is not a multiplicative-domain case");
  return multiplicative_hankel(kc.rho, grid);
}

/// Periodic variant on an equispaced grid.
inline DiscretizedOperator periodic_hankel(const std::function<double(double)>& phi,
                                           const Grid& grid) {
  if (!std::holds_alternative<quadrature::Periodic>(grid.domain))
    throw DomainMismatch("periodic_hankel: grid must be periodic");
  DiscretizedOperator op;
  op.n = grid.size();
  op.grid = grid;
  op.kind = OperatorKind::Hankel;
  op.m.resize(op.n * op.n);
  const auto sw = detail::sqrt_weights(grid);
  for (std::size_t i = 0; i < op.n; ++i)
    for (std::size_t j = i; j < op.n; ++j) {
      const double v = sw[i] * sw[j] * phi(grid.nodes[i] + grid.nodes[j]);
      op.at(i, j) = v;
      op.at(j, i) = v;
    }
  return op;
}

inline DiscretizedOperator periodic_hankel(const catalogue::KernelCase& kc,
                                           const Grid& grid) {
  if (kc.domain != catalogue::DomainKind::Periodic)
    throw DomainMismatch("periodic_hankel: case " + kc.name + " is not periodic");
  return periodic_hankel(kc.phi, grid);
}

/// Divergence-form finite differences for L f = -(a f')' + b f on a uniform
/// (midpoint-cell) or geometric grid. Dirichlet at the outer truncation point;
/// no condition at the origin, where a(0) = 0 kills the flux. On periodic
/// grids the stencil wraps around.
inline DiscretizedOperator sturm_liouville_matrix(const catalogue::CoefficientFamily& fam,
                                                  const Grid& grid) {
  const std::size_t n = grid.size();
  if (n < 3) throw InvalidParams("sturm_liouville_matrix: grid too small");
  DiscretizedOperator op;
  op.n = n;
  op.grid = grid;
  op.kind = OperatorKind::SturmLiouville;
  op.m.assign(n * n, 0.0);

  const bool periodic = std::holds_alternative<quadrature::Periodic>(grid.domain);
  const auto& x = grid.nodes;
  const auto& w = grid.weights;  // cell widths

  // interior face check for a >= 0
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double xf = 0.5 * (x[i] + x[i + 1]);
    if (fam.a(xf) < 0.0)
      throw NegativeCoefficient("sturm_liouville_matrix: a < 0 at an interior node");
  }

  // flux coupling between cells i and i+1 across the face between them;
  // sqrt-weight symmetrization gives -a(face) / (dx * sqrt(w_i w_{i+1}))
  auto couple = [&](std::size_t i, std::size_t j, double face_a, double dx) {
    const double v = -face_a / (dx * std::sqrt(w[i] * w[j]));
    op.at(i, j) += v;
    op.at(j, i) += v;
    op.at(i, i) += face_a / (dx * w[i]);
    op.at(j, j) += face_a / (dx * w[j]);
  };

  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double xf = 0.5 * (x[i] + x[i + 1]);
    couple(i, i + 1, fam.a(xf), x[i + 1] - x[i]);
  }
  if (periodic) {
    const double period = std::get<quadrature::Periodic>(grid.domain).period;
    const double dx = x[0] + period - x[n - 1];
    const double xf = 0.5 * (x[n - 1] + x[0] + period);  // wrap face
    couple(n - 1, 0, fam.a(std::fmod(xf, period)), dx);
  } else {
    // Dirichlet at the truncation point: the outermost face couples the last
    // cell to the zero boundary value
    const double T = std::get<quadrature::HalfLine>(grid.domain).truncation;
    const double dx = 2.0 * (T - x[n - 1]);
    op.at(n - 1, n - 1) += fam.a(T) / (dx * w[n - 1]);
    // left end: for uniform cells the face sits at the origin where a
    // vanishes; for geometric grids the floor stands in for 0 and the flux is
    // dropped (a ~ 0 there for the catalogued families)
  }

  for (std::size_t i = 0; i < n; ++i) op.at(i, i) += fam.b(x[i]);
  return op;
}

/// Phi(x,y) = (a(y)-a(x)) phi''(x+y) + (a'(y)-a'(x)) phi'(x+y)
///          - (b(y)-b(x)) phi(x+y); identically zero exactly when Gamma_phi
/// and L commute.
inline double capital_phi(const catalogue::KernelCase& kc, double x, double y) {
  const double u = x + y;
  if (catalogue::detail::pole_distance(kc.family, u) < 1e-8)
    throw PoleProximity("capital_phi: x + y within 1e-8 of a coefficient pole");
  const auto& f = kc.family;
  return (f.a(y) - f.a(x)) * kc.d2phi(u) + (f.da(y) - f.da(x)) * kc.dphi(u) -
         (f.b(y) - f.b(x)) * kc.phi(u);
}

/// Variant with a perturbed b coefficient (the negative control): the b used
/// in Phi gets +delta on its linear-term coefficient while phi stays put.
inline double capital_phi_perturbed(const catalogue::KernelCase& kc, double x,
                                    double y, double delta_b) {
  catalogue::CoefficientFamily f = kc.family;
  switch (f.tag) {
    case catalogue::FamilyTag::Q: f.b1 += delta_b; break;
    case catalogue::FamilyTag::H: f.p4 += delta_b; break;
    case catalogue::FamilyTag::C: f.p4 += delta_b; break;
  }
  const double u = x + y;
  return (f.a(y) - f.a(x)) * kc.d2phi(u) + (f.da(y) - f.da(x)) * kc.dphi(u) -
         (f.b(y) - f.b(x)) * kc.phi(u);
}

/// max over test functions f of ||(GL - LG) f|| / ||f|| in the grid norm.
inline double commutator_residual(const DiscretizedOperator& G,
                                  const DiscretizedOperator& L,
                                  const std::vector<std::function<double(double)>>& test_fns) {
  if (G.n != L.n || G.grid.nodes != L.grid.nodes)
    throw DomainMismatch("commutator_residual: operators on different grids");
  const auto sw = detail::sqrt_weights(G.grid);
  double worst = 0.0;
  for (const auto& f : test_fns) {
    std::vector<double> v(G.n);
    double norm2 = 0.0;
    for (std::size_t i = 0; i < G.n; ++i) {
      v[i] = sw[i] * f(G.grid.nodes[i]);
      norm2 += v[i] * v[i];
    }
    if (norm2 == 0.0) continue;
    const auto gl = G.apply(L.apply(v));
    const auto lg = L.apply(G.apply(v));
    double r2 = 0.0;
    for (std::size_t i = 0; i < G.n; ++i) {
      const double d = gl[i] - lg[i];
      r2 += d * d;
    }
    worst = std::max(worst, std::sqrt(r2 / norm2));
  }
  return worst;
}

/// Smooth bump supported on (c - r, c + r).
inline std::function<double(double)> make_bump(double center, double radius) {
  return [center, radius](double x) {
    const double t = (x - center) / radius;
    if (std::fabs(t) >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - t * t));
  };
}

// --- Tracy-Widom kernels ------------------------------------------------------

struct TracyWidomKernel {
  std::function<double(double)> f, g;    // kernel = (f(x)g(y) - f(y)g(x))/(x-y)
  std::function<double(double)> df, dg;  // for the diagonal limit
  std::string name;
};

inline double tw_kernel_eval(const TracyWidomKernel& k, double x, double y) {
  if (std::fabs(x - y) < 1e-6)
    return k.df(x) * k.g(x) - k.f(x) * k.dg(x);
  return (k.f(x) * k.g(y) - k.f(y) * k.g(x)) / (x - y);
}

inline DiscretizedOperator tw_nystrom(const TracyWidomKernel& k, const Grid& grid,
                                      double shift = 0.0) {
  DiscretizedOperator op;
  op.n = grid.size();
  op.grid = grid;
  op.kind = OperatorKind::TwKernel;
  op.m.resize(op.n * op.n);
  const auto sw = detail::sqrt_weights(grid);
  for (std::size_t i = 0; i < op.n; ++i)
    for (std::size_t j = i; j < op.n; ++j) {
      const double v =
          sw[i] * sw[j] * tw_kernel_eval(k, grid.nodes[i] + shift, grid.nodes[j] + shift);
      op.at(i, j) = v;
      op.at(j, i) = v;
    }
  return op;
}

namespace detail {

// composite Gauss-Legendre over (0, 32) in panels; plenty for the catalogued
// exponentially-decaying integrands and for poles no closer than the probe box
inline const std::vector<quadrature::Grid>& halfline_panels() {
  static const std::vector<quadrature::Grid> panels = [] {
    std::vector<quadrature::Grid> p;
    const double edges[] = {0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0};
    for (int i = 0; i + 1 < 8; ++i)
      p.push_back(quadrature::gauss_legendre(48, edges[i], edges[i + 1]));
    return p;
  }();
  return panels;
}

template <class F>
inline double halfline_integral(F&& f) {
  double s = 0.0;
  for (const auto& g : halfline_panels()) s += g.integrate(f);
  return s;
}

}  // namespace detail

inline TracyWidomKernel airy_tw() {
  TracyWidomKernel k;
  k.f = [](double x) { return specfun::airy_ai(x).value; };
  k.g = [](double x) { return specfun::airy_ai_prime(x).value; };
  k.df = k.g;
  k.dg = [](double x) { return specfun::airy_ai_second(x); };
  k.name = "airy";
  return k;
}

/// Hard-edge kernel with the t-integral over (0,1):
/// W(x,y) = int_0^1 J_nu(2 sqrt(tx)) J_nu(2 sqrt(ty)) dt.
inline TracyWidomKernel bessel_tw(double nu) {
  TracyWidomKernel k;
  k.f = [nu](double x) {
    return specfun::detail::bessel_j_any(nu, 2.0 * std::sqrt(x)).value;
  };
  k.g = [nu](double x) {
    const double w = 2.0 * std::sqrt(x);
    return 0.5 * w * specfun::bessel_j_deriv(nu, w);
  };
  k.df = [nu](double x) {
    const double w = 2.0 * std::sqrt(x);
    return specfun::bessel_j_deriv(nu, w) / std::sqrt(x);
  };
  k.dg = [nu](double x) {
    // d/dx [ (w/2) J'(w) ], w = 2 sqrt x: = J'(w)/w + J''(w), and the Bessel
    // equation turns that into -(1 - nu^2/w^2) J(w)
    const double w = 2.0 * std::sqrt(x);
    const double J = specfun::detail::bessel_j_any(nu, w).value;
    return -(1.0 - nu * nu / (w * w)) * J;
  };
  k.name = "bessel";
  return k;
}

/// Rank-one exponential pair: W(x,y) = e^{-(x+y)}/2.
inline TracyWidomKernel exp_rank_one_tw() {
  TracyWidomKernel k;
  k.f = [](double x) { return std::exp(-x); };
  k.g = [](double x) { return -0.5 * x * std::exp(-x); };
  k.df = [](double x) { return -std::exp(-x); };
  k.dg = [](double x) { return (0.5 * x - 0.5) * std::exp(-x); };
  k.name = "exp-rank-one";
  return k;
}

/// f = e^{-x}, g = e^{-x} int_0^inf e^{-2t}/(x+t) dt; the square of the
/// Hankel operator with kernel e^{-u}/u.
inline TracyWidomKernel exponential_tw() {
  auto G2 = [](double x) {
    return detail::halfline_integral(
        [x](double t) { return std::exp(-2.0 * t) / (x + t); });
  };
  auto G2p = [](double x) {
    return -detail::halfline_integral([x](double t) {
      const double d = x + t;
      return std::exp(-2.0 * t) / (d * d);
    });
  };
  TracyWidomKernel k;
  k.f = [](double x) { return std::exp(-x); };
  k.g = [G2](double x) { return std::exp(-x) * G2(x); };
  k.df = [](double x) { return -std::exp(-x); };
  k.dg = [G2, G2p](double x) { return std::exp(-x) * (G2p(x) - G2(x)); };
  k.name = "exponential";
  return k;
}

/// max over the probe of |W(x,y) - int phi(x+t) phi(y+t) dt| with the
/// t-integral over the half-line, or over (0,1) in the multiplicative case.
inline double factorization_residual(const catalogue::KernelCase& kc,
                                     const TracyWidomKernel& W,
                                     const std::vector<std::pair<double, double>>& probe) {
  if (kc.iclass == catalogue::IntegrabilityClass::BoundedOnly)
    throw NonIntegrable("factorization_residual: case " + kc.name +
                        " is bounded-only; the t-integral does not converge");
  double worst = 0.0;
  if (kc.domain == catalogue::DomainKind::UnitIntervalMultiplicative) {
    static const Grid unit = quadrature::gauss_legendre(128, 0.0, 1.0);
    const double nu = kc.params.count("nu") ? kc.params.at("nu") : 1.0;
    for (const auto& [x, y] : probe) {
      const double rhs = unit.integrate([&](double t) {
        return specfun::detail::bessel_j_any(nu, 2.0 * std::sqrt(t * x)).value *
               specfun::detail::bessel_j_any(nu, 2.0 * std::sqrt(t * y)).value;
      });
      worst = std::max(worst, std::fabs(tw_kernel_eval(W, x, y) - rhs));
    }
    return worst;
  }
  for (const auto& [x, y] : probe) {
    const double rhs = detail::halfline_integral(
        [&](double t) { return kc.phi(x + t) * kc.phi(y + t); });
    worst = std::max(worst, std::fabs(tw_kernel_eval(W, x, y) - rhs));
  }
  return worst;
}

/// Both sides of the oscillatory identity: f = e^{ix}, g as its conjugate
/// integral, against the explicit double-pole integral. Evaluated by rotating
/// the contour to the positive imaginary axis, where the integrands decay.
/// Returns |LHS - RHS| at (x, y).
inline double oscillatory_identity_residual(double x, double y) {
  using cplx = std::complex<double>;
  // int_0^inf e^{2it}/(a+t) dt rotated to i * int_0^inf e^{-2u}/(a+iu) du
  auto Gosc = [](double a) {
    const double re = detail::halfline_integral(
        [a](double u) { return std::exp(-2.0 * u) * a / (a * a + u * u); });
    const double im = detail::halfline_integral(
        [a](double u) { return std::exp(-2.0 * u) * u / (a * a + u * u); });
    return cplx(0.0, 1.0) * cplx(re, -im);
  };
  const cplx fx = std::exp(cplx(0.0, x)), fy = std::exp(cplx(0.0, y));
  const cplx gx = fx * Gosc(x), gy = fy * Gosc(y);
  const cplx lhs = (fx * gy - fy * gx) / cplx(x - y, 0.0);
  // RHS: int e^{i(x+y+2t)} / ((x+t)(y+t)) dt under the same rotation
  const double rr = detail::halfline_integral([&](double u) {
    return (std::exp(-2.0 * u) / (cplx(x, u) * cplx(y, u))).real();
  });
  const double ri = detail::halfline_integral([&](double u) {
    return (std::exp(-2.0 * u) / (cplx(x, u) * cplx(y, u))).imag();
  });
  const cplx rhs = std::exp(cplx(0.0, x + y)) * cplx(0.0, 1.0) * cplx(rr, ri);
  return std::abs(lhs - rhs);
}

}  // namespace hankel::operators
