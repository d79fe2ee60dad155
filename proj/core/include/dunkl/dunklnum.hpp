#pragma once

// Numeric Dunkl calculus on functions with analytic classical derivatives.

#include <functional>
#include <memory>
#include <random>
#include <span>
#include <vector>

#include "dunkl/polynomial.hpp"
#include "dunkl/profiles.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/reflection.hpp"

namespace dunkl {

/// Radial extent of a function's support: f vanishes for |x| < inner and |x| > outer.
struct RadialSupport {
  double inner = 0.0;
  double outer = kInfinity;
};

class SmoothFunction {
 public:
  explicit SmoothFunction(int dim) : dim_(dim) {}
  virtual ~SmoothFunction() = default;

  int dim() const { return dim_; }
  virtual double value(std::span<const double> x) const = 0;
  virtual void gradient(std::span<const double> x, std::span<double> g) const = 0;
  virtual double laplacian(std::span<const double> x) const = 0;
  /// v^T (Hessian f)(x) v. The default differentiates the gradient numerically;
  /// it is only used on reflection hyperplanes.
  virtual double hessian_quadratic(std::span<const double> x, std::span<const double> v) const;

  /// Profile q with f(x) = q(|x|), when f is radial.
  virtual const RadialProfile* radial_profile() const { return nullptr; }
  virtual RadialSupport support() const { return {}; }
  /// Radii where second derivatives may jump (grid breakpoints).
  virtual std::vector<double> kinks() const { return {}; }

 private:
  int dim_;
};

using FunctionPtr = std::shared_ptr<const SmoothFunction>;

/// f(x) = q(|x|).
class RadialFunction final : public SmoothFunction {
 public:
  RadialFunction(int dim, ProfilePtr q) : SmoothFunction(dim), q_(std::move(q)) {}
  double value(std::span<const double> x) const override;
  void gradient(std::span<const double> x, std::span<double> g) const override;
  double laplacian(std::span<const double> x) const override;
  const RadialProfile* radial_profile() const override { return q_.get(); }
  RadialSupport support() const override;
  std::vector<double> kinks() const override { return q_->kinks(); }

 private:
  ProfilePtr q_;
};

/// f(x) = q(|x|) P(x).
class RadialTimesPolynomial final : public SmoothFunction {
 public:
  RadialTimesPolynomial(ProfilePtr q, const Polynomial& p);
  double value(std::span<const double> x) const override;
  void gradient(std::span<const double> x, std::span<double> g) const override;
  double laplacian(std::span<const double> x) const override;
  RadialSupport support() const override;
  std::vector<double> kinks() const override { return q_->kinks(); }
  const Polynomial& polynomial() const { return p_; }

 private:
  ProfilePtr q_;
  Polynomial p_;
  CompiledPolynomial pc_, lap_;
  std::vector<CompiledPolynomial> grad_;
};

/// b(x) = w^3 (1 + <a, x - c>) with w = 1 - |x - c|^2 / s^2 inside the ball B(c, s).
class ShiftedBump final : public SmoothFunction {
 public:
  ShiftedBump(std::vector<double> center, double radius, std::vector<double> tilt = {});
  double value(std::span<const double> x) const override;
  void gradient(std::span<const double> x, std::span<double> g) const override;
  double laplacian(std::span<const double> x) const override;
  RadialSupport support() const override;
  std::vector<double> kinks() const override;

 private:
  std::vector<double> c_, a_;
  double s_;
};

/// exp(-|x - c|^2 / s^2).
class ShiftedGaussian final : public SmoothFunction {
 public:
  ShiftedGaussian(std::vector<double> center, double scale);
  double value(std::span<const double> x) const override;
  void gradient(std::span<const double> x, std::span<double> g) const override;
  double laplacian(std::span<const double> x) const override;

 private:
  std::vector<double> c_;
  double s_;
};

/// Function assembled from callables.
class LambdaFunction final : public SmoothFunction {
 public:
  using Value = std::function<double(std::span<const double>)>;
  using Gradient = std::function<void(std::span<const double>, std::span<double>)>;
  LambdaFunction(int dim, Value f, Gradient g, Value lap) : SmoothFunction(dim), f_(std::move(f)), g_(std::move(g)), lap_(std::move(lap)) {}
  double value(std::span<const double> x) const override { return f_(x); }
  void gradient(std::span<const double> x, std::span<double> g) const override { g_(x, g); }
  double laplacian(std::span<const double> x) const override { return lap_(x); }

 private:
  Value f_;
  Gradient g_;
  Value lap_;
};

struct GradientCheck {
  bool ok = true;
  double worst_relative = 0.0;
};

/// Compares the analytic gradient against central differences at the probes.
GradientCheck check_gradient(const SmoothFunction& f, const std::vector<std::vector<double>>& probes,
                             double tol = 1e-5);

/// Random probe points in the shell inner <= |x| <= outer.
std::vector<std::vector<double>> random_probes(int dim, int count, double inner, double outer, std::mt19937_64& rng);

/// Runs check_gradient on random probes inside the support and throws
/// InvalidInput on a mismatch.
void register_function(const SmoothFunction& f, std::uint64_t seed = 1);

/// nabla_k f(x).
void dunkl_gradient(const RootSystem& rs, const SmoothFunction& f, std::span<const double> x, std::span<double> out);
std::vector<double> dunkl_gradient(const RootSystem& rs, const SmoothFunction& f, std::span<const double> x);

/// Delta_k f(x) through the gradient / difference-quotient formula.
double dunkl_laplacian_num(const RootSystem& rs, const SmoothFunction& f, std::span<const double> x);

/// Sum of modes q_j(r) Y_j(xi) with Y_j an h-harmonic of degree n_j.
struct PolarTerm {
  ProfilePtr coefficient;
  std::function<double(std::span<const double>)> harmonic;
  int degree = 0;
};

using PolarRepresentation = std::vector<PolarTerm>;

/// Delta_k in polar form: sum [q'' + (Nbar-1) q'/r + lambda_n q / r^2] Y(xi).
double polar_laplacian(const RootSystem& rs, const PolarRepresentation& u, double r, std::span<const double> xi);

/// |int T_i(u) v d mu + int u T_i(v) d mu| / (|int T_i(u) v d mu| + 1).
double integration_by_parts_residual(const RootSystem& rs, const SmoothFunction& u, const SmoothFunction& v, int i,
                                     const RadialGrid& grid, const SphericalRule& rule);

}  // namespace dunkl
