#pragma once

// Quadrature against d mu_k = r^{N+2 gamma-1} omega_k(xi) dr d nu(xi).

#include <functional>
#include <span>
#include <vector>

#include "dunkl/reflection.hpp"

namespace dunkl {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1].
const GaussRule& gauss_legendre(int n);

/// n-point Gauss rule for the weight (1 - t^2)^a on [-1, 1], a > -1.
GaussRule gauss_gegenbauer(int n, double a);

/// Surface measure of the unit sphere in R^N.
double sphere_area(int N);

struct SphericalRule {
  int dim = 0;
  int order = 0;
  std::vector<double> nodes;  // size() * dim entries
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
  std::span<const double> node(std::size_t j) const {
    return {nodes.data() + j * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }
};

/// Rule on S^{N-1} exact for polynomials of degree <= order, 1 <= N <= kMaxDim.
/// N = 1 is the two-point set {-1, 1}; N = 2 the uniform angular rule;
/// N >= 3 nests Gegenbauer rules in the polar angle.
SphericalRule sphere_rule(int N, int order);

/// sphere_rule rotated, if necessary, so no node is within 1e-9 of a
/// reflection hyperplane of rs.
SphericalRule sphere_rule_for(const RootSystem& rs, int order);

enum class EndMode { None, Power, Substitution };

/// Piecewise Gauss-Legendre grid on [0, R_max] with optional closed-form
/// treatment of (0, b_1) and (R_max, infinity).
struct RadialGrid {
  std::vector<double> breakpoints{0.0, 1.0};  // b_0 = 0 < b_1 < ... < b_m = R_max
  int nodes_per_interval = 64;
  EndMode head = EndMode::None;  // Power: fit c r^s on (0, b_1)
  EndMode tail = EndMode::None;

  double r_max() const { return breakpoints.back(); }
  void validate() const;

  /// [0, R] split into `intervals` equal pieces.
  static RadialGrid ball(double R, int intervals = 4, int nodes = 64);
  /// Geometric grading towards 0 (ratio 1/2 down to 2^-levels times the
  /// first kink), extra breakpoints at the kinks, and the given tail mode.
  static RadialGrid graded(const std::vector<double>& kinks, double r_max, EndMode tail, int levels = 40,
                           int nodes = 24);
};

struct WeightedIntegral {
  double value = 0.0;
  double estimated_error = 0.0;
};

/// g(r, out) fills one value per component.
using RadialIntegrand = std::function<void(double r, std::span<double> out)>;

/// Componentwise integral of g over (0, infinity) as described by the grid.
/// The error estimate compares with a half-density Gauss rule.
std::vector<WeightedIntegral> integrate_radial_multi(const RadialGrid& grid, int components, const RadialIntegrand& g,
                                                     bool estimate_error = true);

/// int g(r) r^exponent dr.
WeightedIntegral integrate_radial(const std::function<double(double)>& g, double exponent, const RadialGrid& grid);

/// f(x, out) fills one value per component.
using PointIntegrand = std::function<void(std::span<const double> x, std::span<double> out)>;

struct MeasureOptions {
  bool estimate_error = true;
  /// Order of the comparison sphere rule; 0 picks about two thirds of the rule order.
  int coarse_order = 0;
};

/// Componentwise int f d mu_k. The error estimate adds the radial estimate
/// and the change under a lower-order sphere rule.
std::vector<WeightedIntegral> integrate_measure_multi(const RootSystem& rs, int components, const PointIntegrand& f,
                                                      const RadialGrid& grid, const SphericalRule& rule,
                                                      const MeasureOptions& opts = {});

WeightedIntegral integrate_measure(const RootSystem& rs, const ScalarField& f, const RadialGrid& grid,
                                   const SphericalRule& rule, const MeasureOptions& opts = {});

/// int_{S^{N-1}} f omega_k d nu.
double integrate_sphere(const RootSystem& rs, const ScalarField& f, const SphericalRule& rule);

/// max over positive roots of |int f o sigma d mu_k - int f d mu_k| / max(1, |int f d mu_k|).
double reflected_measure_invariance(const RootSystem& rs, const ScalarField& f, const RadialGrid& grid,
                                    const SphericalRule& rule);

}  // namespace dunkl
