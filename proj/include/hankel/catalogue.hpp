#pragma once

// The case taxonomy of commuting pairs (Gamma_phi, L): coefficient families
// a, b with a''' = A a' and b''' = B b', the alpha/beta coefficient functions,
// singularity classification of the kernel ODE
//
//     phi''(u) + alpha(u) phi'(u) - beta(u) phi(u) = 0,
//
// and the catalogued closed-form kernels. Kernels on the multiplicative
// domain (0,1) are carried both as rho(x) and as the additive-variable pull
// back phi(u) = rho(e^{-2u}), so the commutation identities read the same for
// every family.

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "hankel/errors.hpp"
#include "hankel/quadrature.hpp"
#include "hankel/specfun.hpp"

namespace hankel::catalogue {

enum class FamilyTag { Q, H, C };

// a and b drawn from the same solution family of f''' = const * f'.
//   Q: a = q2 x^2 + q1 x,                  b = b2 x^2 + b1 x + b0       (A = 0)
//   H: a = h1 cosh tx + h2 sinh tx - h1,   b = h4 cosh tx + h5 sinh tx + h6
//   C: a = c1 cos tx  + c2 sin tx  - c1,   b = c4 cos tx  + c5 sin tx  + c6
struct CoefficientFamily {
  FamilyTag tag = FamilyTag::Q;
  // Q parameters
  double q2 = 0.0, q1 = 0.0, b2 = 0.0, b1 = 0.0, b0 = 0.0;
  // H/C parameters (h1..h6 or c1..c6) and the frequency t
  double t = 2.0;
  double p1 = 0.0, p2 = 0.0, p4 = 0.0, p5 = 0.0, p6 = 0.0;
  double A = 0.0, B = 0.0;

  double a(double x) const {
    switch (tag) {
      case FamilyTag::Q: return q2 * x * x + q1 * x;
      case FamilyTag::H: return p1 * std::cosh(t * x) + p2 * std::sinh(t * x) - p1;
      case FamilyTag::C: return p1 * std::cos(t * x) + p2 * std::sin(t * x) - p1;
    }
    return 0.0;
  }
  double da(double x) const {
    switch (tag) {
      case FamilyTag::Q: return 2.0 * q2 * x + q1;
      case FamilyTag::H: return t * (p1 * std::sinh(t * x) + p2 * std::cosh(t * x));
      case FamilyTag::C: return t * (-p1 * std::sin(t * x) + p2 * std::cos(t * x));
    }
    return 0.0;
  }
  double b(double x) const {
    switch (tag) {
      case FamilyTag::Q: return b2 * x * x + b1 * x + b0;
      case FamilyTag::H: return p4 * std::cosh(t * x) + p5 * std::sinh(t * x) + p6;
      case FamilyTag::C: return p4 * std::cos(t * x) + p5 * std::sin(t * x) + p6;
    }
    return 0.0;
  }
};

inline CoefficientFamily make_q_family(double q2, double q1, double b2, double b1,
                                       double b0 = 0.0) {
  if (q2 == 0.0 && q1 == 0.0)
    throw InvalidParams("Q family: a must be non-constant ((q2,q1) != (0,0))");
  CoefficientFamily f;
  f.tag = FamilyTag::Q;
  f.q2 = q2;
  f.q1 = q1;
  f.b2 = b2;
  f.b1 = b1;
  f.b0 = b0;
  f.A = 0.0;
  f.B = 0.0;
  return f;
}

inline CoefficientFamily make_h_family(double t, double h1, double h2, double h4,
                                       double h5, double h6 = 0.0) {
  if (!(t > 0.0)) throw InvalidParams("H family: requires t > 0");
  if (h1 == 0.0 && h2 == 0.0)
    throw InvalidParams("H family: a must be non-constant ((h1,h2) != (0,0))");
  CoefficientFamily f;
  f.tag = FamilyTag::H;
  f.t = t;
  f.p1 = h1;
  f.p2 = h2;
  f.p4 = h4;
  f.p5 = h5;
  f.p6 = h6;
  f.A = t * t;
  f.B = t * t;
  return f;
}

inline CoefficientFamily make_c_family(double t, double c1, double c2, double c4,
                                       double c5, double c6 = 0.0) {
  if (!(t > 0.0)) throw InvalidParams("C family: requires t > 0");
  if (c1 == 0.0 && c2 == 0.0)
    throw InvalidParams("C family: a must be non-constant ((c1,c2) != (0,0))");
  CoefficientFamily f;
  f.tag = FamilyTag::C;
  f.t = t;
  f.p1 = c1;
  f.p2 = c2;
  f.p4 = c4;
  f.p5 = c5;
  f.p6 = c6;
  f.A = -t * t;
  f.B = -t * t;
  return f;
}

/// A divided-difference representation beta(x+y) (a(x)-a(y)) = b(x)-b(y)
/// exists only when b belongs to the same family as a.
inline CoefficientFamily make_family(FamilyTag a_tag, const CoefficientFamily& proto,
                                     FamilyTag b_tag) {
  if (a_tag != b_tag)
    throw FamilyMismatch("b must belong to the same coefficient family as a");
  CoefficientFamily f = proto;
  f.tag = a_tag;
  return f;
}

/// alpha with alpha(x+y) (a(x)-a(y)) = a'(x)-a'(y).
inline std::function<double(double)> alpha_of(const CoefficientFamily& fam) {
  switch (fam.tag) {
    case FamilyTag::Q: {
      const double q2 = fam.q2, q1 = fam.q1;
      return [q2, q1](double u) { return 2.0 * q2 / (q2 * u + q1); };
    }
    case FamilyTag::H: {
      const double t = fam.t, h1 = fam.p1, h2 = fam.p2;
      return [t, h1, h2](double u) {
        const double w = 0.5 * t * u;
        return t * (h1 * std::cosh(w) + h2 * std::sinh(w)) /
               (h1 * std::sinh(w) + h2 * std::cosh(w));
      };
    }
    case FamilyTag::C: {
      const double t = fam.t, c1 = fam.p1, c2 = fam.p2;
      return [t, c1, c2](double u) {
        const double w = 0.5 * t * u;
        return (-t * c1 * std::cos(w) - t * c2 * std::sin(w)) /
               (-c1 * std::sin(w) + c2 * std::cos(w));
      };
    }
  }
  throw InvalidParams("alpha_of: unknown family");
}

/// beta with beta(x+y) (a(x)-a(y)) = b(x)-b(y).
inline std::function<double(double)> beta_of(const CoefficientFamily& fam) {
  switch (fam.tag) {
    case FamilyTag::Q: {
      const double q2 = fam.q2, q1 = fam.q1, bb2 = fam.b2, bb1 = fam.b1;
      return [=](double u) { return (bb2 * u + bb1) / (q2 * u + q1); };
    }
    case FamilyTag::H: {
      const double t = fam.t, h1 = fam.p1, h2 = fam.p2, h4 = fam.p4, h5 = fam.p5;
      return [=](double u) {
        const double w = 0.5 * t * u;
        return (h4 * std::sinh(w) + h5 * std::cosh(w)) /
               (h1 * std::sinh(w) + h2 * std::cosh(w));
      };
    }
    case FamilyTag::C: {
      const double t = fam.t, c1 = fam.p1, c2 = fam.p2, c4 = fam.p4, c5 = fam.p5;
      return [=](double u) {
        const double w = 0.5 * t * u;
        return (-c4 * std::sin(w) + c5 * std::cos(w)) /
               (-c1 * std::sin(w) + c2 * std::cos(w));
      };
    }
  }
  throw InvalidParams("beta_of: unknown family");
}

/// Addition-rule factorization a(x) - a(y) = f(x+y) g(x-y).
inline std::pair<double, double> factor_difference(const CoefficientFamily& fam,
                                                   double x, double y) {
  const double u = x + y, v = x - y;
  switch (fam.tag) {
    case FamilyTag::Q:
      return {fam.q2 * u + fam.q1, v};
    case FamilyTag::H: {
      const double w = 0.5 * fam.t;
      return {2.0 * (fam.p1 * std::sinh(w * u) + fam.p2 * std::cosh(w * u)),
              std::sinh(w * v)};
    }
    case FamilyTag::C: {
      const double w = 0.5 * fam.t;
      return {2.0 * (-fam.p1 * std::sin(w * u) + fam.p2 * std::cos(w * u)),
              std::sin(w * v)};
    }
  }
  throw InvalidParams("factor_difference: unknown family");
}

// --- singularity classification ---------------------------------------------

enum class PointKind { Regular, Irregular };

struct SingularPoint {
  double location = 0.0;  // ignored when at_infinity
  bool at_infinity = false;
  PointKind kind = PointKind::Regular;
  std::optional<std::pair<double, double>> exponents;
};

enum class EquationClass { Trivial, Elementary, ConfluentHypergeometric, Hypergeometric };

struct RiemannScheme {
  double zeta = 0.0;  // third regular point besides 0 and infinity
  double alpha1 = 0.0, alpha2 = 0.0;  // exponents at 0
  double beta1 = 0.0, beta2 = 0.0;    // exponents at infinity
};

struct SingularityReport {
  std::vector<SingularPoint> points;
  EquationClass equation_class = EquationClass::Trivial;
  std::optional<RiemannScheme> riemann_scheme;
};

inline const char* to_string(EquationClass c) {
  switch (c) {
    case EquationClass::Trivial: return "trivial";
    case EquationClass::Elementary: return "elementary";
    case EquationClass::ConfluentHypergeometric: return "confluent-hypergeometric";
    case EquationClass::Hypergeometric: return "hypergeometric";
  }
  return "?";
}

namespace detail {

inline bool near_zero(double v, double scale) {
  return std::fabs(v) <= 1e-12 * std::max(1.0, scale);
}

// roots of z^2 - z + p = 0, real only
inline std::optional<std::pair<double, double>> unit_sum_roots(double p) {
  const double disc = 1.0 - 4.0 * p;
  if (disc < 0.0) return std::nullopt;
  const double r = std::sqrt(disc);
  return std::make_pair(0.5 * (1.0 + r), 0.5 * (1.0 - r));
}

}  // namespace detail

/// Classify the kernel ODE of the family: singular points, their kinds and
/// the reduction class (trivial, elementary, confluent or full
/// hypergeometric). For the Q family the ODE is analysed in the additive
/// variable; for H in the multiplicative variable x = e^{-tu}; for C in
/// tau = tan u.
inline SingularityReport classify(const CoefficientFamily& fam) {
  SingularityReport rep;
  const auto scale_q = std::max({std::fabs(fam.q2), std::fabs(fam.q1),
                                 std::fabs(fam.b2), std::fabs(fam.b1)});
  const auto scale_p = std::max({std::fabs(fam.p1), std::fabs(fam.p2),
                                 std::fabs(fam.p4), std::fabs(fam.p5)});
  using detail::near_zero;
  switch (fam.tag) {
    case FamilyTag::Q: {
      const bool q2z = near_zero(fam.q2, scale_q), q1z = near_zero(fam.q1, scale_q);
      const bool b2z = near_zero(fam.b2, scale_q), b1z = near_zero(fam.b1, scale_q);
      if (q2z && q1z) {  // a = 0, b constant: nothing to solve
        rep.equation_class = EquationClass::Trivial;
        return rep;
      }
      if (q2z) {
        if (b2z && b1z) {  // phi'' = 0
          rep.equation_class = EquationClass::Trivial;
          return rep;
        }
        if (b2z) {  // constant-coefficient: exponential/trigonometric solutions
          rep.points.push_back({0.0, true, PointKind::Irregular, std::nullopt});
          rep.equation_class = EquationClass::Elementary;
          return rep;
        }
        // Airy type
        rep.points.push_back({0.0, true, PointKind::Irregular, std::nullopt});
        rep.equation_class = EquationClass::ConfluentHypergeometric;
        return rep;
      }
      const double pole = -fam.q1 / fam.q2;
      if (b2z && b1z) {  // phi'' + alpha phi' = 0, solutions 1 and 1/(q2 u + q1)
        rep.points.push_back({pole, false, PointKind::Regular,
                              std::make_pair(0.0, -1.0)});
        rep.points.push_back({0.0, true, PointKind::Regular, std::nullopt});
        rep.equation_class = EquationClass::Elementary;
        return rep;
      }
      rep.points.push_back({pole, false, PointKind::Regular, std::nullopt});
      rep.points.push_back({0.0, true, PointKind::Irregular, std::nullopt});
      rep.equation_class = EquationClass::ConfluentHypergeometric;
      return rep;
    }
    case FamilyTag::H: {
      const double h1 = fam.p1, h2 = fam.p2, h4 = fam.p4, h5 = fam.p5;
      const bool sum_a = near_zero(h1 + h2, scale_p);   // h1 = -h2
      const bool dif_a = near_zero(h2 - h1, scale_p);   // h1 = h2
      const bool sum_b = near_zero(h4 + h5, scale_p);
      const bool dif_b = near_zero(h5 - h4, scale_p);
      const bool b_zero = near_zero(h4, scale_p) && near_zero(h5, scale_p);
      if (dif_a && dif_b) {  // H(i): x^p solutions (includes b = 0)
        rep.points.push_back({0.0, false, PointKind::Regular, std::nullopt});
        rep.points.push_back({0.0, true, PointKind::Regular, std::nullopt});
        rep.equation_class = EquationClass::Elementary;
        return rep;
      }
      if (dif_a) {  // H(ii): 0 regular, infinity irregular
        rep.points.push_back({0.0, false, PointKind::Regular, std::nullopt});
        rep.points.push_back({0.0, true, PointKind::Irregular, std::nullopt});
        rep.equation_class = EquationClass::ConfluentHypergeometric;
        return rep;
      }
      if (sum_a && sum_b) {  // H(iii)
        rep.points.push_back({0.0, false, PointKind::Regular, std::nullopt});
        rep.points.push_back({0.0, true, PointKind::Regular, std::nullopt});
        rep.equation_class = EquationClass::Elementary;
        return rep;
      }
      if (sum_a) {  // H(iv): 0 irregular, infinity regular
        rep.points.push_back({0.0, false, PointKind::Irregular, std::nullopt});
        rep.points.push_back({0.0, true, PointKind::Regular, std::nullopt});
        rep.equation_class = EquationClass::ConfluentHypergeometric;
        return rep;
      }
      const double zeta = -(h1 + h2) / (h2 - h1);
      if (b_zero) {  // H(vii): elementary, two regular points
        rep.points.push_back({zeta, false, PointKind::Regular,
                              std::make_pair(0.0, -1.0)});
        rep.points.push_back({0.0, true, PointKind::Regular, std::nullopt});
        rep.equation_class = EquationClass::Elementary;
        return rep;
      }
      // H(v)/H(vi): three regular points 0, zeta, infinity
      RiemannScheme rs;
      rs.zeta = zeta;
      const double aprod = -(h4 + h5) / (4.0 * (h1 + h2));
      const double bprod = -(h5 - h4) / (4.0 * (h2 - h1));
      const auto ar = detail::unit_sum_roots(aprod);
      const auto br = detail::unit_sum_roots(bprod);
      SingularPoint p0{0.0, false, PointKind::Regular, ar};
      SingularPoint pz{zeta, false, PointKind::Regular, std::make_pair(-1.0, 0.0)};
      SingularPoint pi{0.0, true, PointKind::Regular, br};
      rep.points = {p0, pz, pi};
      if (ar && br) {
        rs.alpha1 = ar->first;
        rs.alpha2 = ar->second;
        rs.beta1 = br->first;
        rs.beta2 = br->second;
        rep.riemann_scheme = rs;
      }
      rep.equation_class = EquationClass::Hypergeometric;
      return rep;
    }
    case FamilyTag::C: {
      const double c1 = fam.p1, c2 = fam.p2, c4 = fam.p4, c5 = fam.p5;
      const bool b_zero = near_zero(c4, scale_p) && near_zero(c5, scale_p);
      // in tau = tan u: a regular point at c2/c1 (or infinity when c1 = 0),
      // plus a complex-conjugate pair at +-i whenever b is non-trivial
      if (!near_zero(c1, scale_p)) {
        rep.points.push_back({c2 / c1, false, PointKind::Regular, std::nullopt});
      } else {
        rep.points.push_back({0.0, true, PointKind::Regular, std::nullopt});
      }
      rep.equation_class =
          b_zero ? EquationClass::Elementary : EquationClass::Hypergeometric;
      return rep;
    }
  }
  throw InvalidParams("classify: unknown family");
}

// --- catalogued kernel cases --------------------------------------------------

enum class CaseId {
  Q3, Q4, Q5_airy, Q5_oscillatory, Q6_plus, Q6_minus, Q7_plus, Q7_minus,
  Q8_laguerre, H1, H2_plus, H2_minus, H3, H4_plus, H4_minus, H5, H6, H7,
  C_general
};

enum class IntegrabilityClass { BoundedOnly, HilbertSchmidt, FiniteRank };

enum class DomainKind { HalfLine, UnitIntervalMultiplicative, Periodic };

struct DecayInfo {
  double eps = 0.0;    // exponential rate: |phi(x) e^{eps x}| <= bound
  double delta = 0.0;  // half-plane margin of analyticity
  double strip = 0.0;  // strip half-width (two-sided decay cases)
  double bound = 0.0;
};

struct KernelCase {
  CaseId id;
  std::string name;
  std::map<std::string, double> params;
  CoefficientFamily family;
  DomainKind domain = DomainKind::HalfLine;
  IntegrabilityClass iclass = IntegrabilityClass::BoundedOnly;
  int rank = 0;  // for FiniteRank
  std::optional<DecayInfo> decay;

  // additive-variable kernel and analytic derivatives
  std::function<double(double)> phi, dphi, d2phi;
  // multiplicative kernel rho (H cases only; phi(u) = rho(e^{-2u}))
  std::function<double(double)> rho, drho, d2rho;

  std::pair<double, double> probe_box{0.1, 5.0};  // per-coordinate range for Phi probes
  std::pair<double, double> ode_range{0.1, 5.0};  // u-range for residual probes
};

namespace detail {

// distance from u to the nearest pole of alpha/beta (and of phi where the
// catalogued solution itself has poles)
inline double pole_distance(const CoefficientFamily& fam, double u) {
  switch (fam.tag) {
    case FamilyTag::Q:
      if (fam.q2 == 0.0) return std::numeric_limits<double>::infinity();
      return std::fabs(u + fam.q1 / fam.q2);
    case FamilyTag::H: {
      // zeros of h1 sinh w + h2 cosh w, w = t u / 2
      if (std::fabs(fam.p2) >= std::fabs(fam.p1))
        return std::numeric_limits<double>::infinity();  // no real zero
      const double w0 = std::atanh(-fam.p2 / fam.p1);
      return std::fabs(u - 2.0 * w0 / fam.t);
    }
    case FamilyTag::C: {
      // zeros of -c1 sin w + c2 cos w: w0 = atan2(c2, c1) + k pi
      const double w = 0.5 * fam.t * u;
      const double w0 = std::atan2(fam.p2, fam.p1);
      const double k = std::round((w - w0) / std::numbers::pi);
      const double dw = std::fabs(w - (w0 + k * std::numbers::pi));
      return 2.0 * dw / fam.t;
    }
  }
  return std::numeric_limits<double>::infinity();
}

inline double get_param(const std::map<std::string, double>& p, const std::string& k,
                        double dflt) {
  auto it = p.find(k);
  return it == p.end() ? dflt : it->second;
}

// wire a multiplicative kernel into the additive slots
inline void attach_multiplicative(KernelCase& kc) {
  auto rho = kc.rho;
  auto drho = kc.drho;
  auto d2rho = kc.d2rho;
  kc.phi = [rho](double u) { return rho(std::exp(-2.0 * u)); };
  kc.dphi = [drho](double u) {
    const double x = std::exp(-2.0 * u);
    return -2.0 * x * drho(x);
  };
  kc.d2phi = [drho, d2rho](double u) {
    const double x = std::exp(-2.0 * u);
    return 4.0 * x * x * d2rho(x) + 4.0 * x * drho(x);
  };
}

}  // namespace detail

/// phi''(u) + alpha(u) phi'(u) - beta(u) phi(u), analytic derivatives.
inline double ode_residual(const KernelCase& kc, double u) {
  if (detail::pole_distance(kc.family, u) < 1e-8)
    throw PoleProximity("ode_residual: u within 1e-8 of a coefficient pole");
  if (kc.id == CaseId::C_general && kc.params.at("c8") != 0.0) {
    // cosec term of the general circular solution
    const double d = std::fabs(std::remainder(u, std::numbers::pi));
    if (d < 1e-8) throw PoleProximity("ode_residual: u within 1e-8 of a kernel pole");
  }
  const auto alpha = alpha_of(kc.family);
  const auto beta = beta_of(kc.family);
  return kc.d2phi(u) + alpha(u) * kc.dphi(u) - beta(u) * kc.phi(u);
}

inline KernelCase build_case(CaseId id, std::map<std::string, double> params = {});

namespace detail {

inline void finalize(KernelCase& kc) {
  // consistency probes: a 50-point residual sweep of the kernel ODE plus a
  // finite-difference check of the stored first derivative
  const auto [lo, hi] = kc.ode_range;
  for (int i = 0; i < 50; ++i) {
    const double u = lo + (hi - lo) * (i + 0.5) / 50.0;
    if (pole_distance(kc.family, u) < 1e-6) continue;
    const double scale =
        std::fabs(kc.phi(u)) + std::fabs(kc.dphi(u)) + std::fabs(kc.d2phi(u));
    const double r = ode_residual(kc, u);
    if (!(std::fabs(r) <= 1e-8 * std::max(1.0, scale)))
      throw InvalidParams(kc.name + ": kernel fails its own ODE (residual " +
                          std::to_string(r) + " at u = " + std::to_string(u) + ")");
    const double h = 1e-5;
    if (u - h > lo && u + h < hi) {
      const double fd = (kc.phi(u + h) - kc.phi(u - h)) / (2.0 * h);
      if (!(std::fabs(fd - kc.dphi(u)) <= 1e-6 * std::max(1.0, std::fabs(fd)) + 1e-6))
        throw InvalidParams(kc.name + ": phi' inconsistent with phi");
    }
  }
}

}  // namespace detail

inline KernelCase build_case(CaseId id, std::map<std::string, double> params) {
  using detail::get_param;
  KernelCase kc;
  kc.id = id;
  switch (id) {
    case CaseId::Q3: {
      const double C1 = get_param(params, "C1", 0.0);
      const double C2 = get_param(params, "C2", 1.0);
      const double q2 = get_param(params, "q2", 1.0);
      const double q1 = get_param(params, "q1", 0.0);
      if (!(q2 > 0.0) || q1 < 0.0)
        throw InvalidParams("Q3: requires q2 > 0 and q1 >= 0");
      kc.name = "Q3";
      kc.params = {{"C1", C1}, {"C2", C2}, {"q2", q2}, {"q1", q1}};
      kc.family = make_q_family(q2, q1, 0.0, 0.0);
      kc.iclass = IntegrabilityClass::BoundedOnly;
      kc.phi = [=](double u) { return C1 + C2 / (q2 * u + q1); };
      kc.dphi = [=](double u) {
        const double d = q2 * u + q1;
        return -C2 * q2 / (d * d);
      };
      kc.d2phi = [=](double u) {
        const double d = q2 * u + q1;
        return 2.0 * C2 * q2 * q2 / (d * d * d);
      };
      kc.probe_box = {0.1, 5.0};
      kc.ode_range = {0.1, 8.0};
      break;
    }
    case CaseId::Q4: {
      const double rate = get_param(params, "rate", 1.0);
      if (!(rate > 0.0)) throw InvalidParams("Q4: requires rate > 0");
      kc.name = "Q4";
      kc.params = {{"rate", rate}};
      kc.family = make_q_family(0.0, 1.0, 0.0, rate * rate);
      kc.iclass = IntegrabilityClass::FiniteRank;
      kc.rank = 1;
      kc.decay = DecayInfo{0.5 * rate, 1.0, 0.0, 1.0};
      kc.phi = [=](double u) { return std::exp(-rate * u); };
      kc.dphi = [=](double u) { return -rate * std::exp(-rate * u); };
      kc.d2phi = [=](double u) { return rate * rate * std::exp(-rate * u); };
      kc.probe_box = {0.1, 5.0};
      kc.ode_range = {0.0, 8.0};
      break;
    }
    case CaseId::Q5_airy: {
      const double s = get_param(params, "shift", 0.0);
      kc.name = "Q5_airy";
      kc.params = {{"shift", s}};
      kc.family = make_q_family(0.0, 1.0, 1.0, s);
      kc.iclass = IntegrabilityClass::HilbertSchmidt;
      kc.decay = DecayInfo{1.0, 1.0, 0.0, 0.0};  // bound filled below
      kc.phi = [=](double u) { return specfun::airy_ai(u + s).value; };
      kc.dphi = [=](double u) { return specfun::airy_ai_prime(u + s).value; };
      kc.d2phi = [=](double u) { return specfun::airy_ai_second(u + s); };
      double bound = 0.0;
      for (int i = 0; i <= 80; ++i) {
        const double x = i * 0.5;
        bound = std::max(bound, std::fabs(kc.phi(x)) * std::exp(x));
      }
      kc.decay->bound = bound * 1.01;
      kc.probe_box = {0.1, 5.0};
      kc.ode_range = {0.0, 5.0};
      break;
    }
    case CaseId::Q5_oscillatory: {
      const double C1 = get_param(params, "C1", 1.0);
      const double C2 = get_param(params, "C2", 1.0);
      kc.name = "Q5_oscillatory";
      kc.params = {{"C1", C1}, {"C2", C2}};
      kc.family = make_q_family(0.0, 1.0, -1.0, 0.0);
      kc.iclass = IntegrabilityClass::BoundedOnly;
      // phi = sum_i C_i sqrt(u) J_{+-1/3}((2/3) u^{3/2}); second derivative via
      // Bessel identities so the residual check stays a genuine cross-check
      auto eval = [=](double u, int want) {
        const double w = (2.0 / 3.0) * u * std::sqrt(u);
        double out = 0.0;
        const double nus[2] = {1.0 / 3.0, -1.0 / 3.0};
        const double cs[2] = {C1, C2};
        for (int i = 0; i < 2; ++i) {
          if (cs[i] == 0.0) continue;
          const double nu = nus[i];
          const double J = specfun::detail::bessel_j_any(nu, w).value;
          const double Jp = (nu / w) * J - specfun::detail::bessel_j_any(nu + 1.0, w).value;
          const double su = std::sqrt(u);
          if (want == 0) {
            out += cs[i] * su * J;
          } else if (want == 1) {
            out += cs[i] * (J / (2.0 * su) + u * Jp);
          } else {
            const double Jpp = -Jp / w - (1.0 - nu * nu / (w * w)) * J;
            out += cs[i] * (-J / (4.0 * u * su) + 1.5 * Jp + u * su * Jpp);
          }
        }
        return out;
      };
      kc.phi = [eval](double u) { return eval(u, 0); };
      kc.dphi = [eval](double u) { return eval(u, 1); };
      kc.d2phi = [eval](double u) { return eval(u, 2); };
      kc.probe_box = {0.2, 5.0};
      kc.ode_range = {0.2, 8.0};
      break;
    }
    case CaseId::Q6_plus:
    case CaseId::Q6_minus: {
      const bool plus = (id == CaseId::Q6_plus);
      const double s = get_param(params, "shift", 0.0);
      if (s < 0.0) throw InvalidParams("Q6: requires shift >= 0");
      kc.name = plus ? "Q6_plus" : "Q6_minus";
      kc.params = {{"shift", s}};
      kc.family = make_q_family(1.0, s, 0.0, plus ? 0.25 : -0.25);
      kc.iclass = (plus && s > 0.0) ? IntegrabilityClass::HilbertSchmidt
                                    : IntegrabilityClass::BoundedOnly;
      auto eval = [=](double u, int want) {
        const double v = u + s;
        const double w = std::sqrt(v);
        double Z, Zp, Zpp;
        if (plus) {
          Z = specfun::detail::bessel_k_impl(1.0, w).value;
          Zp = (1.0 / w) * Z - specfun::detail::bessel_k_impl(2.0, w).value;
          Zpp = -Zp / w + (1.0 + 1.0 / (w * w)) * Z;
        } else {
          Z = specfun::detail::bessel_j_any(1.0, w).value;
          Zp = (1.0 / w) * Z - specfun::detail::bessel_j_any(2.0, w).value;
          Zpp = -Zp / w - (1.0 - 1.0 / (w * w)) * Z;
        }
        if (want == 0) return Z / w;
        if (want == 1) return -0.5 * Z / (v * w) + 0.5 * Zp / v;
        return 0.75 * Z / (v * v * w) - 0.75 * Zp / (v * v) + 0.25 * Zpp / (v * w);
      };
      kc.phi = [eval](double u) { return eval(u, 0); };
      kc.dphi = [eval](double u) { return eval(u, 1); };
      kc.d2phi = [eval](double u) { return eval(u, 2); };
      kc.probe_box = {0.2, 5.0};
      kc.ode_range = {0.2, 8.0};
      break;
    }
    case CaseId::Q7_plus: {
      const double s = get_param(params, "shift", 0.0);
      if (s < 0.0) throw InvalidParams("Q7_plus: requires shift >= 0");
      kc.name = "Q7_plus";
      kc.params = {{"shift", s}};
      kc.family = make_q_family(1.0, s, 1.0, s);
      kc.iclass = (s > 0.0) ? IntegrabilityClass::HilbertSchmidt
                            : IntegrabilityClass::BoundedOnly;
      if (s > 0.0) kc.decay = DecayInfo{1.0, 0.5 * s, 0.0, std::exp(-s) / s * 1.01};
      kc.phi = [=](double u) {
        const double v = u + s;
        return std::exp(-v) / v;
      };
      kc.dphi = [=](double u) {
        const double v = u + s;
        return -std::exp(-v) * (1.0 / v + 1.0 / (v * v));
      };
      kc.d2phi = [=](double u) {
        const double v = u + s;
        return std::exp(-v) * (1.0 / v + 2.0 / (v * v) + 2.0 / (v * v * v));
      };
      kc.probe_box = {0.1, 5.0};
      kc.ode_range = {0.1, 8.0};
      break;
    }
    case CaseId::Q7_minus: {
      const double k1 = get_param(params, "kappa1", 1.0);
      const double k2 = get_param(params, "kappa2", 0.0);
      kc.name = "Q7_minus";
      kc.params = {{"kappa1", k1}, {"kappa2", k2}};
      kc.family = make_q_family(1.0, 0.0, -1.0, 0.0);
      kc.iclass = IntegrabilityClass::BoundedOnly;
      kc.phi = [=](double u) { return (k1 * std::cos(u) + k2 * std::sin(u)) / u; };
      kc.dphi = [=](double u) {
        const double c = std::cos(u), s_ = std::sin(u);
        return (-k1 * s_ + k2 * c) / u - (k1 * c + k2 * s_) / (u * u);
      };
      kc.d2phi = [=](double u) {
        const double c = std::cos(u), s_ = std::sin(u);
        return (-k1 * c - k2 * s_) / u - 2.0 * (-k1 * s_ + k2 * c) / (u * u) +
               2.0 * (k1 * c + k2 * s_) / (u * u * u);
      };
      kc.probe_box = {0.1, 5.0};
      kc.ode_range = {0.1, 8.0};
      break;
    }
    case CaseId::Q8_laguerre: {
      const double nd = get_param(params, "n", 2.0);
      const int n = static_cast<int>(std::lround(nd));
      if (n < 0 || std::fabs(nd - n) > 1e-12)
        throw InvalidParams("Q8: requires integer degree n >= 0");
      kc.name = "Q8_laguerre";
      kc.params = {{"n", static_cast<double>(n)}};
      kc.family = make_q_family(1.0, 0.0, 1.0, -2.0 * (n + 1.0));
      kc.iclass = IntegrabilityClass::FiniteRank;
      kc.rank = n + 1;
      kc.phi = [=](double u) {
        return std::exp(-u) * specfun::laguerre(n, 1.0, 2.0 * u).value;
      };
      kc.dphi = [=](double u) {
        const double L = specfun::laguerre(n, 1.0, 2.0 * u).value;
        const double Lp = specfun::laguerre_deriv(n, 1.0, 2.0 * u);
        return std::exp(-u) * (2.0 * Lp - L);
      };
      kc.d2phi = [=](double u) {
        const double L = specfun::laguerre(n, 1.0, 2.0 * u).value;
        const double Lp = specfun::laguerre_deriv(n, 1.0, 2.0 * u);
        const double Lpp =
            (n >= 2) ? specfun::laguerre(n - 2, 3.0, 2.0 * u).value : 0.0;
        return std::exp(-u) * (L - 4.0 * Lp + 4.0 * Lpp);
      };
      double bound = 0.0;
      for (int i = 0; i <= 80; ++i) {
        const double x = i * 0.5;
        bound = std::max(bound, std::fabs(kc.phi(x)) * std::exp(0.5 * x));
      }
      kc.decay = DecayInfo{0.5, 1.0, 0.0, bound * 1.01};
      kc.probe_box = {0.1, 5.0};
      kc.ode_range = {0.1, 6.0};
      break;
    }
    case CaseId::H1: {
      const double p = get_param(params, "p", 1.0);
      if (!(p > 0.0)) throw InvalidParams("H1: requires p > 0");
      kc.name = "H1";
      kc.params = {{"p", p}};
      const double h4 = 4.0 * p * (p - 1.0);
      kc.family = make_h_family(2.0, 1.0, 1.0, h4, h4, -h4);
      kc.domain = DomainKind::UnitIntervalMultiplicative;
      kc.iclass = IntegrabilityClass::HilbertSchmidt;
      kc.decay = DecayInfo{p, 1.0, 0.0, 1.0};  // phi(u) = e^{-2pu}
      kc.rho = [=](double x) { return std::pow(x, p); };
      kc.drho = [=](double x) { return p * std::pow(x, p - 1.0); };
      kc.d2rho = [=](double x) { return p * (p - 1.0) * std::pow(x, p - 2.0); };
      detail::attach_multiplicative(kc);
      kc.probe_box = {0.05, 1.25};
      kc.ode_range = {0.05, 2.5};
      break;
    }
    case CaseId::H2_plus:
    case CaseId::H2_minus: {
      const bool plus = (id == CaseId::H2_plus);
      const double nu = get_param(params, "nu", 1.0);
      if (!(nu > 0.0)) throw InvalidParams("H2: requires nu > 0");
      kc.name = plus ? "H2_plus" : "H2_minus";
      kc.params = {{"nu", nu}};
      const double n2 = nu * nu;
      kc.family = plus ? make_h_family(2.0, -1.0, -1.0, 5.0 - n2, -3.0 - n2)
                       : make_h_family(2.0, -1.0, -1.0, -3.0 - n2, 5.0 - n2);
      kc.domain = DomainKind::UnitIntervalMultiplicative;
      kc.iclass = (plus && nu >= 1.0) ? IntegrabilityClass::BoundedOnly
                                      : IntegrabilityClass::HilbertSchmidt;
      auto eval = [=](double x, int want) {
        const double w = 2.0 * std::sqrt(x);
        double Z, Zp, Zpp;
        if (plus) {
          Z = specfun::detail::bessel_k_impl(nu, w).value;
          Zp = (nu / w) * Z - specfun::detail::bessel_k_impl(nu + 1.0, w).value;
          Zpp = -Zp / w + (1.0 + n2 / (w * w)) * Z;
        } else {
          Z = specfun::detail::bessel_j_any(nu, w).value;
          Zp = (nu / w) * Z - specfun::detail::bessel_j_any(nu + 1.0, w).value;
          Zpp = -Zp / w - (1.0 - n2 / (w * w)) * Z;
        }
        const double sx = std::sqrt(x);
        if (want == 0) return sx * Z;
        if (want == 1) return Z / (2.0 * sx) + Zp;  // d/dx [sqrt(x) Z(2 sqrt x)]
        return -Z / (4.0 * x * sx) + Zp / (2.0 * x) + Zpp / sx;
      };
      kc.rho = [eval](double x) { return eval(x, 0); };
      kc.drho = [eval](double x) { return eval(x, 1); };
      kc.d2rho = [eval](double x) { return eval(x, 2); };
      detail::attach_multiplicative(kc);
      kc.probe_box = {0.05, 1.25};
      kc.ode_range = {0.05, 2.5};
      break;
    }
    case CaseId::H3: {
      const double p = get_param(params, "p", 0.5);
      if (!(p > 0.0)) throw InvalidParams("H3: requires p > 0");
      kc.name = "H3";
      kc.params = {{"p", p}};
      const double h5 = 4.0 * p * p + 4.0 * p;
      kc.family = make_h_family(2.0, -1.0, 1.0, -h5, h5, 0.0);
      kc.domain = DomainKind::UnitIntervalMultiplicative;
      kc.iclass = IntegrabilityClass::HilbertSchmidt;
      kc.decay = DecayInfo{p, 1.0, 0.0, 1.0};
      kc.rho = [=](double x) { return std::pow(x, p); };
      kc.drho = [=](double x) { return p * std::pow(x, p - 1.0); };
      kc.d2rho = [=](double x) { return p * (p - 1.0) * std::pow(x, p - 2.0); };
      detail::attach_multiplicative(kc);
      kc.probe_box = {0.05, 1.25};
      kc.ode_range = {0.05, 2.5};
      break;
    }
    case CaseId::H4_plus:
    case CaseId::H4_minus: {
      const bool plus = (id == CaseId::H4_plus);
      const double nu = get_param(params, "nu", 1.0);
      if (!(nu > 0.0)) throw InvalidParams("H4: requires nu > 0");
      kc.name = plus ? "H4_plus" : "H4_minus";
      kc.params = {{"nu", nu}};
      const double n2 = nu * nu;
      kc.family = plus ? make_h_family(2.0, -1.0, 1.0, 5.0 - n2, 3.0 + n2)
                       : make_h_family(2.0, -1.0, 1.0, -3.0 - n2, n2 - 5.0);
      kc.domain = DomainKind::UnitIntervalMultiplicative;
      kc.iclass = plus ? IntegrabilityClass::HilbertSchmidt
                       : IntegrabilityClass::BoundedOnly;
      // rho = x^{-1/2} Z(2 x^{-1/2}); with w = 2 x^{-1/2}, dw/dx = -x^{-3/2}:
      //   rho'  = -1/2 x^{-3/2} Z - x^{-2} Z'
      //   rho'' =  3/4 x^{-5/2} Z + 5/2 x^{-3} Z' + x^{-7/2} Z''
      auto eval = [=](double x, int want) {
        const double w = 2.0 / std::sqrt(x);
        double Z, Zp, Zpp;
        if (plus) {
          Z = specfun::detail::bessel_k_impl(nu, w).value;
          Zp = (nu / w) * Z - specfun::detail::bessel_k_impl(nu + 1.0, w).value;
          Zpp = -Zp / w + (1.0 + n2 / (w * w)) * Z;
        } else {
          Z = specfun::detail::bessel_j_any(nu, w).value;
          Zp = (nu / w) * Z - specfun::detail::bessel_j_any(nu + 1.0, w).value;
          Zpp = -Zp / w - (1.0 - n2 / (w * w)) * Z;
        }
        const double sx = std::sqrt(x);
        const double x2 = x * x;
        if (want == 0) return Z / sx;
        if (want == 1) return -0.5 * Z / (x * sx) - Zp / x2;
        return 0.75 * Z / (x2 * sx) + 2.5 * Zp / (x2 * x) + Zpp / (x2 * x * sx);
      };
      kc.rho = [eval](double x) { return eval(x, 0); };
      kc.drho = [eval](double x) { return eval(x, 1); };
      kc.d2rho = [eval](double x) { return eval(x, 2); };
      detail::attach_multiplicative(kc);
      kc.probe_box = {0.05, 1.0};
      kc.ode_range = {0.05, 1.5};
      break;
    }
    case CaseId::H5: {
      const double mu = get_param(params, "mu", 0.25);
      const double nu = 1.0 - mu;
      kc.name = "H5";
      kc.params = {{"mu", mu}};
      const double h4 = -0.5 * mu * nu;
      kc.family = make_h_family(2.0, 0.25, 0.0, h4, -h4, 0.0);
      kc.domain = DomainKind::UnitIntervalMultiplicative;
      kc.iclass = IntegrabilityClass::BoundedOnly;
      const double a = mu + 1.0, b = nu + 1.0;
      kc.rho = [=](double x) { return x * specfun::gauss_2f1(a, b, 2.0, x).value; };
      kc.drho = [=](double x) {
        return specfun::gauss_2f1(a, b, 2.0, x).value +
               x * (a * b / 2.0) * specfun::gauss_2f1(a + 1.0, b + 1.0, 3.0, x).value;
      };
      kc.d2rho = [=](double x) {
        return a * b * specfun::gauss_2f1(a + 1.0, b + 1.0, 3.0, x).value +
               x * (a * b * (a + 1.0) * (b + 1.0) / 6.0) *
                   specfun::gauss_2f1(a + 2.0, b + 2.0, 4.0, x).value;
      };
      detail::attach_multiplicative(kc);
      kc.probe_box = {0.1, 1.1};  // keeps e^{-2(x+y)} within the series disc
      kc.ode_range = {0.1, 2.0};
      break;
    }
    case CaseId::H6: {
      throw UnsupportedCase(
          "H6: no closed-form kernel is catalogued; use classify() for the "
          "singularity data and Riemann scheme");
    }
    case CaseId::H7: {
      const double C1 = get_param(params, "C1", 0.0);
      const double C2 = get_param(params, "C2", 1.0);
      const double h1 = get_param(params, "h1", 0.0);
      const double h2 = get_param(params, "h2", 1.0);
      if (h1 == h2) throw InvalidParams("H7: requires h1 != h2");
      kc.name = "H7";
      kc.params = {{"C1", C1}, {"C2", C2}, {"h1", h1}, {"h2", h2}};
      kc.family = make_h_family(2.0, h1, h2, 0.0, 0.0, 0.0);
      kc.domain = DomainKind::UnitIntervalMultiplicative;
      kc.iclass = IntegrabilityClass::BoundedOnly;
      const double d = h2 - h1, ssum = h2 + h1;
      kc.rho = [=](double x) { return C1 + C2 / (d * x + ssum); };
      kc.drho = [=](double x) {
        const double den = d * x + ssum;
        return -C2 * d / (den * den);
      };
      kc.d2rho = [=](double x) {
        const double den = d * x + ssum;
        return 2.0 * C2 * d * d / (den * den * den);
      };
      detail::attach_multiplicative(kc);
      kc.probe_box = {0.05, 1.25};
      kc.ode_range = {0.05, 2.5};
      break;
    }
    case CaseId::C_general: {
      const double c7 = get_param(params, "c7", 1.0);
      const double c8 = get_param(params, "c8", 0.0);
      kc.name = "C_general";
      kc.params = {{"c7", c7}, {"c8", c8}};
      kc.family = make_c_family(2.0, -1.0, 0.0, 3.0, 0.0);
      kc.domain = DomainKind::Periodic;
      kc.iclass = (c8 == 0.0) ? IntegrabilityClass::FiniteRank
                              : IntegrabilityClass::BoundedOnly;
      kc.rank = (c8 == 0.0) ? 2 : 0;
      kc.phi = [=](double x) {
        double v = c7 * std::cos(x);
        if (c8 != 0.0) v -= c8 * (1.0 / std::sin(x) - 2.0 * std::sin(x));
        return v;
      };
      kc.dphi = [=](double x) {
        double v = -c7 * std::sin(x);
        if (c8 != 0.0) {
          const double s = std::sin(x), c = std::cos(x);
          v -= c8 * (-c / (s * s) - 2.0 * c);
        }
        return v;
      };
      kc.d2phi = [=](double x) {
        double v = -c7 * std::cos(x);
        if (c8 != 0.0) {
          const double s = std::sin(x), c = std::cos(x);
          v -= c8 * (2.0 * c * c / (s * s * s) + 1.0 / s + 2.0 * s);
        }
        return v;
      };
      kc.probe_box = {0.1, 1.3};
      kc.ode_range = {0.2, 2.9};
      break;
    }
  }
  detail::finalize(kc);
  return kc;
}

// --- registry (stable strings for the CLI) -----------------------------------

struct CaseInfo {
  std::string id;
  std::vector<std::string> param_names;
  std::string constraints;
  std::string anchor;
  char family;
};

inline const std::vector<CaseInfo>& case_registry() {
  static const std::vector<CaseInfo> reg = {
      {"Q3", {"C1", "C2", "q2", "q1"}, "q2 > 0, q1 >= 0", "Eq. 3.4", 'Q'},
      {"Q4", {"rate"}, "rate > 0", "Q(iv)", 'Q'},
      {"Q5_airy", {"shift"}, "", "Eq. 3.5", 'Q'},
      {"Q5_oscillatory", {"C1", "C2"}, "", "Eq. 3.6", 'Q'},
      {"Q6_plus", {"shift"}, "shift >= 0", "Eq. 3.8", 'Q'},
      {"Q6_minus", {"shift"}, "shift >= 0", "Eq. 3.8", 'Q'},
      {"Q7_plus", {"shift"}, "shift >= 0", "Eq. 3.12", 'Q'},
      {"Q7_minus", {"kappa1", "kappa2"}, "", "Eq. 3.12", 'Q'},
      {"Q8_laguerre", {"n"}, "integer n >= 0", "Eq. 3.17", 'Q'},
      {"H1", {"p"}, "p > 0", "Eq. 4.7", 'H'},
      {"H2_plus", {"nu"}, "nu > 0", "Eq. 4.9", 'H'},
      {"H2_minus", {"nu"}, "nu > 0", "Eq. 4.9", 'H'},
      {"H3", {"p"}, "p > 0", "Eq. 4.14", 'H'},
      {"H4_plus", {"nu"}, "nu > 0", "Eq. 4.15", 'H'},
      {"H4_minus", {"nu"}, "nu > 0", "Eq. 4.15", 'H'},
      {"H5", {"mu"}, "", "Eq. 4.16", 'H'},
      {"H6", {"h1", "h2", "h4", "h5"}, "classification only", "Eq. 4.18", 'H'},
      {"H7", {"C1", "C2", "h1", "h2"}, "h1 != h2", "Eq. 4.19", 'H'},
      {"C_general", {"c7", "c8"}, "", "Eq. 5.6", 'C'},
  };
  return reg;
}

inline CaseId case_id_from_string(const std::string& s) {
  static const std::map<std::string, CaseId> m = {
      {"Q3", CaseId::Q3},
      {"Q4", CaseId::Q4},
      {"Q5_airy", CaseId::Q5_airy},
      {"Q5_oscillatory", CaseId::Q5_oscillatory},
      {"Q6_plus", CaseId::Q6_plus},
      {"Q6_minus", CaseId::Q6_minus},
      {"Q7_plus", CaseId::Q7_plus},
      {"Q7_minus", CaseId::Q7_minus},
      {"Q8_laguerre", CaseId::Q8_laguerre},
      {"H1", CaseId::H1},
      {"H2_plus", CaseId::H2_plus},
      {"H2_minus", CaseId::H2_minus},
      {"H3", CaseId::H3},
      {"H4_plus", CaseId::H4_plus},
      {"H4_minus", CaseId::H4_minus},
      {"H5", CaseId::H5},
      {"H6", CaseId::H6},
      {"H7", CaseId::H7},
      {"C_general", CaseId::C_general},
  };
  auto it = m.find(s);
  if (it == m.end()) throw InvalidParams("unknown case id: " + s);
  return it->second;
}

}  // namespace hankel::catalogue
