#include "dunkl/functionals.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "dunkl/errors.hpp"

namespace dunkl {

double Quotient::error() const {
  const double n = std::abs(numerator.value), d = std::abs(denominator.value);
  if (d == 0.0) return 0.0;
  return std::abs(value) * (numerator.estimated_error / std::max(n, 1e-300) + denominator.estimated_error / d);
}

Quotient make_quotient(const WeightedIntegral& numerator, const WeightedIntegral& denominator) {
  if (!(std::abs(denominator.value) >= 1e-14)) throw DegenerateInput("quotient denominator below 1e-14");
  return {numerator.value / denominator.value, numerator, denominator};
}

namespace {

constexpr int kMaxComponents = 2;

struct NodeData {
  double r = 0.0;
  double value = 0.0;
  std::array<double, kMaxDim> grad{};
  double grad_sq = 0.0;
  double lap = 0.0;
};

enum Need : unsigned { kValue = 1, kGrad = 2, kLap = 4 };

// Integrates two derived quantities of u against d mu_k. Nodes outside the
// radial support of u contribute zero without evaluating u.
template <class Select>
std::array<WeightedIntegral, kMaxComponents> integrate_pair(const RootSystem& rs, const SmoothFunction& u,
                                                            unsigned need, Select select, const RadialGrid& grid,
                                                            const SphericalRule& rule, const MeasureOptions& opts) {
  const int N = rs.dim();
  if (u.dim() != N) throw InvalidInput("function and root system dimensions differ");
  const RadialSupport supp = u.support();
  auto vals = integrate_measure_multi(
      rs, kMaxComponents,
      [&](std::span<const double> x, std::span<double> out) {
        NodeData nd;
        nd.r = norm(x);
        if (nd.r < supp.inner || nd.r > supp.outer) return;
        if (need & kValue) nd.value = u.value(x);
        if (need & kGrad) {
          dunkl_gradient(rs, u, x, {nd.grad.data(), static_cast<std::size_t>(N)});
          for (int i = 0; i < N; ++i) nd.grad_sq += nd.grad[i] * nd.grad[i];
        }
        if (need & kLap) nd.lap = dunkl_laplacian_num(rs, u, x);
        select(nd, out);
      },
      grid, rule, opts);
  return {vals[0], vals[1]};
}

}  // namespace

Quotient hardy_quotient_p(const RootSystem& rs, const SmoothFunction& u, double p, const DistanceData& domain,
                          const RadialGrid& grid, const SphericalRule& rule, const MeasureOptions& opts) {
  if (!(p > 1.0)) throw InvalidInput("Hardy exponent must exceed 1");
  const int N = rs.dim();
  const RadialSupport supp = u.support();
  auto vals = integrate_measure_multi(
      rs, 2,
      [&](std::span<const double> x, std::span<double> out) {
        const double r = norm(x);
        if (r < supp.inner || r > supp.outer) return;
        const double v = u.value(x);
        if (!domain.contains(x)) {
          if (v != 0.0) throw InvalidInput("function does not vanish outside the domain");
          return;
        }
        std::array<double, kMaxDim> g{};
        dunkl_gradient(rs, u, x, {g.data(), static_cast<std::size_t>(N)});
        double g2 = 0.0;
        for (int i = 0; i < N; ++i) g2 += g[i] * g[i];
        out[0] = std::pow(g2, 0.5 * p);
        if (v != 0.0) out[1] = std::pow(std::abs(v) / domain.delta(x), p);
      },
      grid, rule, opts);
  return make_quotient(vals[0], vals[1]);
}

Quotient rellich_quotient(const RootSystem& rs, const SmoothFunction& u, const RadialGrid& grid,
                          const SphericalRule& rule, const MeasureOptions& opts) {
  auto v = integrate_pair(
      rs, u, kValue | kLap,
      [](const NodeData& d, std::span<double> out) {
        const double r2 = d.r * d.r;
        out[0] = d.lap * d.lap;
        out[1] = d.value * d.value / (r2 * r2);
      },
      grid, rule, opts);
  return make_quotient(v[0], v[1]);
}

Quotient hr_weighted_quotient(const RootSystem& rs, const SmoothFunction& u, const RadialGrid& grid,
                              const SphericalRule& rule, const MeasureOptions& opts) {
  auto v = integrate_pair(
      rs, u, kGrad | kLap,
      [](const NodeData& d, std::span<double> out) {
        out[0] = d.r * d.r * d.lap * d.lap;
        out[1] = d.grad_sq;
      },
      grid, rule, opts);
  return make_quotient(v[0], v[1]);
}

Quotient hr_quotient(const RootSystem& rs, const SmoothFunction& u, const RadialGrid& grid, const SphericalRule& rule,
                     const MeasureOptions& opts) {
  auto v = integrate_pair(
      rs, u, kGrad | kLap,
      [](const NodeData& d, std::span<double> out) {
        out[0] = d.lap * d.lap;
        out[1] = d.grad_sq / (d.r * d.r);
      },
      grid, rule, opts);
  return make_quotient(v[0], v[1]);
}

double hardy_constant(double p, double nbar) { return std::pow((p - nbar) / p, p); }
double hardy2_constant(double nbar) { return 0.25 * (nbar - 2.0) * (nbar - 2.0); }
double rellich_constant(double nbar) { return nbar * nbar * (nbar - 4.0) * (nbar - 4.0) / 16.0; }
double hr_weighted_constant(double nbar) { return 0.25 * (nbar - 2.0) * (nbar - 2.0); }
double hr_constant(double nbar) { return 0.25 * nbar * nbar; }

HardyTerms hardy_terms(const RootSystem& rs, const SmoothFunction& u, double p, const DistanceData& domain,
                       const RadialGrid& grid, const SphericalRule& rule, const MeasureOptions& opts) {
  if (!(p > 1.0)) throw InvalidInput("Hardy exponent must exceed 1");
  const int N = rs.dim();
  if (u.dim() != N) throw InvalidInput("function and root system dimensions differ");
  const RadialSupport supp = u.support();
  auto vals = integrate_measure_multi(
      rs, 4,
      [&](std::span<const double> x, std::span<double> out) {
        const double r = norm(x);
        if (r < supp.inner || r > supp.outer) return;
        const double v = u.value(x);
        if (!domain.contains(x)) {
          if (v != 0.0) throw InvalidInput("function does not vanish outside the domain");
          return;
        }
        std::array<double, kMaxDim> g{};
        dunkl_gradient(rs, u, x, {g.data(), static_cast<std::size_t>(N)});
        double g2 = 0.0;
        for (int i = 0; i < N; ++i) g2 += g[i] * g[i];
        out[0] = std::pow(g2, 0.5 * p);
        if (v == 0.0) return;
        const double delta = domain.delta(x);
        const double up = std::pow(std::abs(v), p);
        const double pairing = rho_pairing(domain, rs, x);
        const double bracket = -domain.laplacian_delta(x) + (0.5 * p - 1.0) * pairing - 0.5 * p * std::abs(pairing);
        const double q = up / std::pow(delta, p - 1.0);
        out[1] = q / delta;
        out[2] = bracket * q;
        out[3] = domain.dunkl_laplacian_delta(x) * q;
      },
      grid, rule, opts);
  return {p, vals[0], vals[1], vals[2], vals[3]};
}

namespace {

Bound combine(double c1, const WeightedIntegral& a, double c2, const WeightedIntegral& b) {
  return {c1 * a.value + c2 * b.value, std::abs(c1) * a.estimated_error + std::abs(c2) * b.estimated_error};
}

}  // namespace

Bound remainder_bound(const HardyTerms& t) {
  const double q = (t.p - 1.0) / t.p;
  return combine(std::pow(q, t.p), t.hardy, std::pow(q, t.p - 1.0), t.remainder);
}

Bound leading_bound(const HardyTerms& t) {
  const double c = std::pow((t.p - 1.0) / t.p, t.p);
  return {c * t.hardy.value, c * t.hardy.estimated_error};
}

double epsilon_constant(double p, double eps) {
  if (!(eps > 0.0)) throw InvalidInput("epsilon must be positive");
  return (p - 1.0) * (std::pow(eps, -p) - std::pow(eps, -p * p / (p - 1.0)));
}

double optimal_epsilon(double p) { return std::pow(p / (p - 1.0), (p - 1.0) / p); }

double exterior_ball_epsilon(double p, double nbar) {
  if (!(p > nbar)) throw InvalidInput("the exterior-ball constant needs p > Nbar");
  return std::pow(p / (p - nbar), (p - 1.0) / p);
}

Bound epsilon_bound(const HardyTerms& t, double eps) {
  return combine(epsilon_constant(t.p, eps), t.hardy, -std::pow(eps, -t.p), t.dunkl_remainder);
}

Bound exterior_ball_bound(const HardyTerms& t, double nbar) {
  const double c = hardy_constant(t.p, nbar);
  return {c * t.hardy.value, c * t.hardy.estimated_error};
}

VerificationReport remainder_check_thm34(const RootSystem& rs, const SmoothFunction& u, const DistanceData& domain,
                                         double p, const RadialGrid& grid, const SphericalRule& rule,
                                         const std::string& name) {
  VerificationReport rep;
  rep.theorem = "hardy_remainder";
  rep.corpus = name;
  const HardyTerms t = hardy_terms(rs, u, p, domain, grid, rule);
  const Bound b = remainder_bound(t);
  rep.add(name, t.gradient.value, b.value, t.gradient.estimated_error + b.error);
  return rep;
}

VerificationReport thm37_check(const RootSystem& rs, const SmoothFunction& u, const DistanceData& domain, double p,
                               double eps, const RadialGrid& grid, const SphericalRule& rule,
                               const std::string& name) {
  VerificationReport rep;
  rep.theorem = "hardy_epsilon_form";
  rep.corpus = name;
  const HardyTerms t = hardy_terms(rs, u, p, domain, grid, rule);
  const Bound b = epsilon_bound(t, eps);
  rep.add(name, t.gradient.value, b.value, t.gradient.estimated_error + b.error);
  return rep;
}

Quotient radial_hardy_1d(double exponent, const RadialProfile& u, const RadialGrid& grid) {
  auto v = integrate_radial_multi(grid, 2, [&](double r, std::span<double> out) {
    const double d = u.d1(r), val = u.value(r);
    const double w = std::pow(r, exponent);
    out[0] = d * d * w;
    if (val != 0.0) out[1] = val * val * w / (r * r);
  });
  return make_quotient(v[0], v[1]);
}

double radial_hardy_1d_constant(double exponent) { return 0.25 * (exponent - 1.0) * (exponent - 1.0); }

ModeFunctional mode_functional_thm42(double nbar, double gamma, double C, int n, const RadialProfile& u,
                                     const RadialGrid& grid) {
  if (n < 0) throw InvalidInput("mode index must be nonnegative");
  ModeFunctional out;
  out.coefficients = mode_coefficients(nbar, gamma, n, C);
  const auto& m = out.coefficients;
  auto v = integrate_radial_multi(grid, 2, [&](double r, std::span<double> o) {
    const double u0 = u.value(r), u1 = u.d1(r), u2 = u.d2(r);
    const double w = std::pow(r, nbar - 5.0);
    o[0] = (u2 * u2 * r * r * r * r + m.A * u1 * u1 * r * r + m.B * u0 * u0) * w;
    o[1] = u0 * u0 * w;
  });
  out.value = v[0].value;
  out.mass = v[1].value;
  out.error = v[0].estimated_error + std::abs(m.D) * v[1].estimated_error;
  return out;
}

}  // namespace dunkl
