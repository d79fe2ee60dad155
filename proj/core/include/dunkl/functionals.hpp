#pragma once

// Hardy, Rellich and Hardy-Rellich functionals against d mu_k, the
// remainder forms of the Hardy inequality on G-invariant domains, and the
// one-dimensional mode algebra behind the Hardy-Rellich constants.

#include <string>

#include "dunkl/domains.hpp"
#include "dunkl/dunklnum.hpp"
#include "dunkl/profiles.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/rational.hpp"
#include "dunkl/reflection.hpp"
#include "dunkl/report.hpp"

namespace dunkl {

struct Quotient {
  double value = 0.0;
  WeightedIntegral numerator;
  WeightedIntegral denominator;

  /// Absolute error of value propagated from both integrals.
  double error() const;
};

/// numerator / denominator; throws DegenerateInput when |denominator| < 1e-14.
Quotient make_quotient(const WeightedIntegral& numerator, const WeightedIntegral& denominator);

/// int |nabla_k u|^p d mu_k / int |u|^p / delta^p d mu_k. u must vanish
/// outside the domain (checked at the quadrature nodes).
Quotient hardy_quotient_p(const RootSystem& rs, const SmoothFunction& u, double p, const DistanceData& domain,
                          const RadialGrid& grid, const SphericalRule& rule, const MeasureOptions& opts = {});

/// int |Delta_k u|^2 d mu_k / int u^2 / |x|^4 d mu_k.
Quotient rellich_quotient(const RootSystem& rs, const SmoothFunction& u, const RadialGrid& grid,
                          const SphericalRule& rule, const MeasureOptions& opts = {});

/// int |x|^2 |Delta_k u|^2 d mu_k / int |nabla_k u|^2 d mu_k.
Quotient hr_weighted_quotient(const RootSystem& rs, const SmoothFunction& u, const RadialGrid& grid,
                              const SphericalRule& rule, const MeasureOptions& opts = {});

/// int |Delta_k u|^2 d mu_k / int |nabla_k u|^2 / |x|^2 d mu_k.
Quotient hr_quotient(const RootSystem& rs, const SmoothFunction& u, const RadialGrid& grid, const SphericalRule& rule,
                     const MeasureOptions& opts = {});

double hardy_constant(double p, double nbar);           // ((p - Nbar) / p)^p
double hardy2_constant(double nbar);                    // ((Nbar - 2) / 2)^2
double rellich_constant(double nbar);                   // Nbar^2 (Nbar - 4)^2 / 16
double hr_weighted_constant(double nbar);               // (Nbar - 2)^2 / 4
double hr_constant(double nbar);                        // Nbar^2 / 4

/// The four integrals entering the domain forms of the Hardy inequality.
struct HardyTerms {
  double p = 2.0;
  WeightedIntegral gradient;         // int |nabla_k u|^p
  WeightedIntegral hardy;            // int |u|^p / delta^p
  WeightedIntegral remainder;        // int [-Delta delta + (p/2-1)<rho,grad delta> - (p/2)|<rho,grad delta>|] |u|^p / delta^(p-1)
  WeightedIntegral dunkl_remainder;  // int Delta_k delta |u|^p / delta^(p-1)
};

HardyTerms hardy_terms(const RootSystem& rs, const SmoothFunction& u, double p, const DistanceData& domain,
                       const RadialGrid& grid, const SphericalRule& rule, const MeasureOptions& opts = {});

/// A lower bound for int |nabla_k u|^p together with its quadrature error.
struct Bound {
  double value = 0.0;
  double error = 0.0;
};

/// ((p-1)/p)^p int |u|^p/delta^p + ((p-1)/p)^(p-1) * remainder.
Bound remainder_bound(const HardyTerms& t);
/// ((p-1)/p)^p int |u|^p/delta^p (half-space and wedge forms).
Bound leading_bound(const HardyTerms& t);
/// (p-1)(eps^-p - eps^(-p^2/(p-1))) int |u|^p/delta^p - eps^-p int Delta_k delta |u|^p/delta^(p-1).
Bound epsilon_bound(const HardyTerms& t, double eps);
/// ((p - Nbar)/p)^p int |u|^p/delta^p, exterior ball with p > Nbar.
Bound exterior_ball_bound(const HardyTerms& t, double nbar);

/// (p-1)(eps^-p - eps^(-p^2/(p-1))).
double epsilon_constant(double p, double eps);
/// Maximiser (p/(p-1))^((p-1)/p) of epsilon_constant; the maximum is ((p-1)/p)^p.
double optimal_epsilon(double p);
/// (p/(p-Nbar))^((p-1)/p), where the exterior-ball combination attains ((p-Nbar)/p)^p.
double exterior_ball_epsilon(double p, double nbar);

/// Single-function report for the remainder form on the given domain.
VerificationReport remainder_check_thm34(const RootSystem& rs, const SmoothFunction& u, const DistanceData& domain,
                                         double p, const RadialGrid& grid, const SphericalRule& rule,
                                         const std::string& name = "u");

/// Single-function report for the epsilon form. Requires <rho, grad delta> >= 0
/// on the domain (exterior ball, half-space, wedge).
VerificationReport thm37_check(const RootSystem& rs, const SmoothFunction& u, const DistanceData& domain, double p,
                               double eps, const RadialGrid& grid, const SphericalRule& rule,
                               const std::string& name = "u");

// ---------------------------------------------------------------------------
// Mode algebra

template <class T>
struct BasicModeCoefficients {
  int n = 0;
  T C{};
  T lambda{};
  T A{};
  T B{};
  T D{};
  /// ((Nbar-2)^2/4 - C)(Nbar-2)^2/4 + lambda (lambda + C - (Nbar-2)^2/2).
  T weighted_certificate{};
};

using ModeCoefficients = BasicModeCoefficients<double>;
using ExactModeCoefficients = BasicModeCoefficients<Rational>;

template <class T>
BasicModeCoefficients<T> mode_coefficients(const T& nbar, const T& gamma, int n, const T& C) {
  BasicModeCoefficients<T> m;
  m.n = n;
  m.C = C;
  m.lambda = T(-n) * (T(n) + nbar - T(2));
  const T& l = m.lambda;
  m.A = nbar - T(2) * l - T(1) - C;
  if (n == 0)
    m.B = T(0);
  else
    m.B = l * (l - T(2) * (nbar - T(4)) + C) - T(4) * C * gamma;
  m.D = l * (l - (nbar * nbar - T(8) * nbar) / T(4)) - nbar * nbar * gamma;
  const T q = (nbar - T(2)) * (nbar - T(2)) / T(4);
  m.weighted_certificate = (q - C) * q + l * (l + C - T(2) * q);
  return m;
}

/// int u'^2 r^e dr / int u^2 r^(e-2) dr.
Quotient radial_hardy_1d(double exponent, const RadialProfile& u, const RadialGrid& grid);
/// (e - 1)^2 / 4.
double radial_hardy_1d_constant(double exponent);

struct ModeFunctional {
  double value = 0.0;   // I = int [u''^2 r^(Nbar-1) + A_n u'^2 r^(Nbar-3) + B_n u^2 r^(Nbar-5)] dr
  double mass = 0.0;    // int u^2 r^(Nbar-5) dr
  double error = 0.0;
  ModeCoefficients coefficients;

  /// I - D_n * mass.
  double margin() const { return value - coefficients.D * mass; }
};

ModeFunctional mode_functional_thm42(double nbar, double gamma, double C, int n, const RadialProfile& u,
                                     const RadialGrid& grid);

}  // namespace dunkl
