#include "dunkl/dunklnum.hpp"

#include <array>
#include <cmath>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

using Buffer = std::array<double, kMaxDim>;

double sq(double v) { return v * v; }

}  // namespace

double SmoothFunction::hessian_quadratic(std::span<const double> x, std::span<const double> v) const {
  const int n = dim();
  const double h = 1e-5 * std::max(1.0, norm(x));
  Buffer xp{}, xm{}, gp{}, gm{};
  for (int i = 0; i < n; ++i) {
    xp[i] = x[i] + h * v[i];
    xm[i] = x[i] - h * v[i];
  }
  gradient({xp.data(), static_cast<std::size_t>(n)}, {gp.data(), static_cast<std::size_t>(n)});
  gradient({xm.data(), static_cast<std::size_t>(n)}, {gm.data(), static_cast<std::size_t>(n)});
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += (gp[i] - gm[i]) * v[i];
  return s / (2.0 * h);
}

// ---------------------------------------------------------------------------
// Concrete functions

double RadialFunction::value(std::span<const double> x) const { return q_->value(norm(x)); }

void RadialFunction::gradient(std::span<const double> x, std::span<double> g) const {
  const double r = norm(x);
  const double c = r > 0.0 ? q_->d1(r) / r : 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) g[i] = c * x[i];
}

double RadialFunction::laplacian(std::span<const double> x) const {
  const double r = norm(x);
  if (r == 0.0) return dim() * q_->d2(0.0);
  return q_->d2(r) + (dim() - 1) * q_->d1(r) / r;
}

RadialSupport RadialFunction::support() const { return {q_->inner_radius(), q_->outer_radius()}; }

RadialTimesPolynomial::RadialTimesPolynomial(ProfilePtr q, const Polynomial& p)
    : SmoothFunction(p.dim()), q_(std::move(q)), p_(p), pc_(p) {
  Polynomial lap(p.dim());
  for (int i = 0; i < p.dim(); ++i) {
    grad_.emplace_back(p.derivative(i));
    lap += p.derivative(i).derivative(i);
  }
  lap_ = CompiledPolynomial(lap);
}

double RadialTimesPolynomial::value(std::span<const double> x) const { return q_->value(norm(x)) * pc_(x); }

void RadialTimesPolynomial::gradient(std::span<const double> x, std::span<double> g) const {
  const double r = norm(x);
  const double q = q_->value(r);
  const double c = r > 0.0 ? q_->d1(r) / r * pc_(x) : 0.0;
  for (int i = 0; i < dim(); ++i) g[i] = c * x[i] + q * grad_[i](x);
}

double RadialTimesPolynomial::laplacian(std::span<const double> x) const {
  const double r = norm(x);
  const double q = q_->value(r);
  const double P = pc_(x);
  if (r == 0.0) return dim() * q_->d2(0.0) * P + q * lap_(x);
  const double q1 = q_->d1(r), q2 = q_->d2(r);
  double xdp = 0.0;
  for (int i = 0; i < dim(); ++i) xdp += x[i] * grad_[i](x);
  return (q2 + (dim() - 1) * q1 / r) * P + 2.0 * q1 / r * xdp + q * lap_(x);
}

RadialSupport RadialTimesPolynomial::support() const { return {q_->inner_radius(), q_->outer_radius()}; }

ShiftedBump::ShiftedBump(std::vector<double> center, double radius, std::vector<double> tilt)
    : SmoothFunction(static_cast<int>(center.size())), c_(std::move(center)), a_(std::move(tilt)), s_(radius) {
  if (!(s_ > 0.0)) throw InvalidInput("bump radius must be positive");
  if (a_.empty()) a_.assign(c_.size(), 0.0);
  if (a_.size() != c_.size()) throw InvalidInput("tilt dimension mismatch");
}

double ShiftedBump::value(std::span<const double> x) const {
  double y2 = 0.0, ay = 0.0;
  for (int i = 0; i < dim(); ++i) {
    const double y = x[i] - c_[i];
    y2 += y * y;
    ay += a_[i] * y;
  }
  const double w = 1.0 - y2 / (s_ * s_);
  if (w <= 0.0) return 0.0;
  return w * w * w * (1.0 + ay);
}

void ShiftedBump::gradient(std::span<const double> x, std::span<double> g) const {
  double y2 = 0.0, ay = 0.0;
  for (int i = 0; i < dim(); ++i) {
    const double y = x[i] - c_[i];
    y2 += y * y;
    ay += a_[i] * y;
  }
  const double s2 = s_ * s_;
  const double w = 1.0 - y2 / s2;
  if (w <= 0.0) {
    for (int i = 0; i < dim(); ++i) g[i] = 0.0;
    return;
  }
  const double t = 1.0 + ay;
  for (int i = 0; i < dim(); ++i) g[i] = -6.0 * w * w * (x[i] - c_[i]) / s2 * t + w * w * w * a_[i];
}

double ShiftedBump::laplacian(std::span<const double> x) const {
  double y2 = 0.0, ay = 0.0;
  for (int i = 0; i < dim(); ++i) {
    const double y = x[i] - c_[i];
    y2 += y * y;
    ay += a_[i] * y;
  }
  const double s2 = s_ * s_;
  const double w = 1.0 - y2 / s2;
  if (w <= 0.0) return 0.0;
  const double lap_w3 = 24.0 * w * y2 / (s2 * s2) - 6.0 * dim() * w * w / s2;
  // Delta(w^3 t) = Delta(w^3) t + 2 grad(w^3).a, grad(w^3) = -6 w^2 y / s^2.
  return lap_w3 * (1.0 + ay) + 2.0 * (-6.0 * w * w / s2) * ay;
}

RadialSupport ShiftedBump::support() const {
  const double c = norm(c_);
  return {std::max(0.0, c - s_), c + s_};
}

std::vector<double> ShiftedBump::kinks() const {
  auto s = support();
  std::vector<double> k;
  if (s.inner > 0.0) k.push_back(s.inner);
  k.push_back(s.outer);
  return k;
}

ShiftedGaussian::ShiftedGaussian(std::vector<double> center, double scale)
    : SmoothFunction(static_cast<int>(center.size())), c_(std::move(center)), s_(scale) {
  if (!(s_ > 0.0)) throw InvalidInput("Gaussian scale must be positive");
}

double ShiftedGaussian::value(std::span<const double> x) const {
  double y2 = 0.0;
  for (int i = 0; i < dim(); ++i) y2 += sq(x[i] - c_[i]);
  return std::exp(-y2 / (s_ * s_));
}

void ShiftedGaussian::gradient(std::span<const double> x, std::span<double> g) const {
  const double v = value(x);
  for (int i = 0; i < dim(); ++i) g[i] = -2.0 * (x[i] - c_[i]) / (s_ * s_) * v;
}

double ShiftedGaussian::laplacian(std::span<const double> x) const {
  double y2 = 0.0;
  for (int i = 0; i < dim(); ++i) y2 += sq(x[i] - c_[i]);
  const double s2 = s_ * s_;
  return (4.0 * y2 / (s2 * s2) - 2.0 * dim() / s2) * std::exp(-y2 / s2);
}

// ---------------------------------------------------------------------------
// Registration checks

GradientCheck check_gradient(const SmoothFunction& f, const std::vector<std::vector<double>>& probes, double tol) {
  GradientCheck out;
  const int n = f.dim();
  std::vector<double> g(n), xp(n), xm(n);
  for (const auto& x : probes) {
    f.gradient(x, g);
    const double h = 1e-6 * std::max(1.0, norm(x));
    double diff2 = 0.0, fd2 = 0.0;
    for (int i = 0; i < n; ++i) {
      xp = x;
      xm = x;
      xp[i] += h;
      xm[i] -= h;
      const double fd = (f.value(xp) - f.value(xm)) / (2.0 * h);
      diff2 += sq(fd - g[i]);
      fd2 += sq(fd);
    }
    const double gn = norm(g);
    if (gn < 1e-10 && std::sqrt(fd2) < 1e-8) continue;
    const double rel = std::sqrt(diff2) / std::max(gn, 1e-8);
    out.worst_relative = std::max(out.worst_relative, rel);
  }
  out.ok = out.worst_relative <= tol;
  return out;
}

std::vector<std::vector<double>> random_probes(int dim, int count, double inner, double outer, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unif(inner, outer);
  std::vector<std::vector<double>> out;
  for (int c = 0; c < count; ++c) {
    std::vector<double> x(dim);
    double n2 = 0.0;
    do {
      n2 = 0.0;
      for (double& v : x) {
        v = normal(rng);
        n2 += v * v;
      }
    } while (n2 < 1e-12);
    const double r = unif(rng) / std::sqrt(n2);
    for (double& v : x) v *= r;
    out.push_back(std::move(x));
  }
  return out;
}

void register_function(const SmoothFunction& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto s = f.support();
  const double inner = s.inner;
  const double outer = std::isinf(s.outer) ? inner + 3.0 : s.outer;
  auto probes = random_probes(f.dim(), 20, inner + 0.02 * (outer - inner), outer - 0.02 * (outer - inner), rng);
  auto check = check_gradient(f, probes);
  if (!check.ok)
    throw InvalidInput("analytic gradient disagrees with finite differences (relative error " +
                       std::to_string(check.worst_relative) + ")");
}

// ---------------------------------------------------------------------------
// Dunkl operators

void dunkl_gradient(const RootSystem& rs, const SmoothFunction& f, std::span<const double> x, std::span<double> out) {
  const int n = rs.dim();
  f.gradient(x, out);
  const double r = norm(x);
  double fx = 0.0;
  bool have_fx = false;
  Buffer y{}, g{};
  auto pos = rs.positive_roots();
  for (std::size_t a = 0; a < pos.size(); ++a) {
    const double k = rs.k(a);
    if (k == 0.0) continue;
    const Root& alpha = pos[a];
    const double t = alpha.pairing(x);
    double dq;
    if (std::abs(t) < kHyperplaneTolerance * r || r == 0.0) {
      // (f(x) - f(sigma x)) / <alpha,x> -> <alpha, grad f(x)>
      dq = 0.0;
      for (int i = 0; i < n; ++i) dq += alpha.vector[i] * out[i];
    } else {
      if (!have_fx) {
        fx = f.value(x);
        have_fx = true;
      }
      reflect_into(alpha, x, {y.data(), static_cast<std::size_t>(n)});
      dq = (fx - f.value({y.data(), static_cast<std::size_t>(n)})) / t;
    }
    // Accumulated apart from `out`, which still holds the classical gradient.
    for (int i = 0; i < n; ++i) g[i] += k * dq * alpha.vector[i];
  }
  for (int i = 0; i < n; ++i) out[i] += g[i];
}

std::vector<double> dunkl_gradient(const RootSystem& rs, const SmoothFunction& f, std::span<const double> x) {
  std::vector<double> out(rs.dim());
  dunkl_gradient(rs, f, x, out);
  return out;
}

double dunkl_laplacian_num(const RootSystem& rs, const SmoothFunction& f, std::span<const double> x) {
  const int n = rs.dim();
  double lap = f.laplacian(x);
  auto pos = rs.positive_roots();
  if (rs.trivial_multiplicity()) return lap;
  Buffer grad{}, y{};
  f.gradient(x, {grad.data(), static_cast<std::size_t>(n)});
  const double fx = f.value(x);
  const double r = norm(x);
  for (std::size_t a = 0; a < pos.size(); ++a) {
    const double k = rs.k(a);
    if (k == 0.0) continue;
    const Root& alpha = pos[a];
    const double t = alpha.pairing(x);
    double bracket;
    if (std::abs(t) < kHyperplaneTolerance * r || r == 0.0) {
      bracket = 0.5 * f.hessian_quadratic(x, alpha.vector);
    } else {
      double ga = 0.0;
      for (int i = 0; i < n; ++i) ga += grad[i] * alpha.vector[i];
      reflect_into(alpha, x, {y.data(), static_cast<std::size_t>(n)});
      bracket = ga / t - (fx - f.value({y.data(), static_cast<std::size_t>(n)})) / (t * t);
    }
    lap += 2.0 * k * bracket;
  }
  return lap;
}

double polar_laplacian(const RootSystem& rs, const PolarRepresentation& u, double r, std::span<const double> xi) {
  if (!(r > 0.0)) throw InvalidInput("the polar form of the Dunkl Laplacian is not defined at the origin");
  const double nbar = rs.effective_dim();
  double s = 0.0;
  for (const auto& term : u) {
    const double lambda = -term.degree * (term.degree + nbar - 2.0);
    const auto& q = *term.coefficient;
    s += (q.d2(r) + (nbar - 1.0) * q.d1(r) / r + lambda * q.value(r) / (r * r)) * term.harmonic(xi);
  }
  return s;
}

double integration_by_parts_residual(const RootSystem& rs, const SmoothFunction& u, const SmoothFunction& v, int i,
                                     const RadialGrid& grid, const SphericalRule& rule) {
  if (i < 0 || i >= rs.dim()) throw InvalidInput("coordinate index out of range");
  std::vector<double> gu(rs.dim()), gv(rs.dim());
  auto vals = integrate_measure_multi(
      rs, 2,
      [&](std::span<const double> x, std::span<double> out) {
        dunkl_gradient(rs, u, x, gu);
        dunkl_gradient(rs, v, x, gv);
        out[0] = gu[i] * v.value(x);
        out[1] = u.value(x) * gv[i];
      },
      grid, rule, {.estimate_error = false});
  return std::abs(vals[0].value + vals[1].value) / (std::abs(vals[0].value) + 1.0);
}

}  // namespace dunkl
