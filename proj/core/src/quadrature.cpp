#include "dunkl/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "dunkl/errors.hpp"

namespace dunkl {

// ---------------------------------------------------------------------------
// One-dimensional Gauss rules

namespace {

GaussRule compute_gauss_legendre(int n) {
  GaussRule g;
  g.nodes.resize(n);
  g.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) {
        p1 = x;
        p0 = 1.0;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    g.nodes[i] = -x;
    g.nodes[n - 1 - i] = x;
    g.weights[i] = w;
    g.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) g.nodes[n / 2] = 0.0;
  return g;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1) throw InvalidInput("Gauss rule needs at least one node");
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

GaussRule gauss_gegenbauer(int n, double a) {
  if (n < 1) throw InvalidInput("Gauss rule needs at least one node");
  if (!(a > -1.0)) throw InvalidInput("Gegenbauer exponent must exceed -1");
  if (a == 0.0) return gauss_legendre(n);
  // Golub-Welsch on the Jacobi matrix of the monic orthogonal polynomials.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    // k = 1 with the common factor 1 + 2a cancelled, which vanishes at a = -1/2
    const double beta = k == 1 ? 1.0 / (2.0 * a + 3.0)
                               : k * (k + 2.0 * a) / ((2.0 * k + 2.0 * a + 1.0) * (2.0 * k + 2.0 * a - 1.0));
    J(k, k - 1) = J(k - 1, k) = std::sqrt(beta);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  const double mu0 = std::sqrt(std::numbers::pi) * std::tgamma(a + 1.0) / std::tgamma(a + 1.5);
  GaussRule g;
  g.nodes.resize(n);
  g.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    g.nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    g.weights[i] = mu0 * v0 * v0;
  }
  // Symmetrise: the weight is even, so nodes come in +- pairs.
  for (int i = 0; i < n / 2; ++i) {
    const double x = 0.5 * (g.nodes[n - 1 - i] - g.nodes[i]);
    const double w = 0.5 * (g.weights[i] + g.weights[n - 1 - i]);
    g.nodes[i] = -x;
    g.nodes[n - 1 - i] = x;
    g.weights[i] = g.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) g.nodes[n / 2] = 0.0;
  return g;
}

double sphere_area(int N) { return 2.0 * std::pow(std::numbers::pi, 0.5 * N) / std::tgamma(0.5 * N); }

// ---------------------------------------------------------------------------
// Spherical rules

namespace {

SphericalRule build_sphere_rule(int N, int order) {
  SphericalRule rule;
  rule.dim = N;
  rule.order = order;
  if (N == 1) {
    rule.nodes = {1.0, -1.0};
    rule.weights = {1.0, 1.0};
    return rule;
  }
  if (N == 2) {
    const int M = order + 1;
    for (int j = 0; j < M; ++j) {
      const double t = 2.0 * std::numbers::pi * (j + 0.5) / M;
      rule.nodes.push_back(std::cos(t));
      rule.nodes.push_back(std::sin(t));
      rule.weights.push_back(2.0 * std::numbers::pi / M);
    }
    return rule;
  }
  const int n = (order + 2) / 2;
  const GaussRule g = gauss_gegenbauer(n, 0.5 * (N - 3));
  const SphericalRule sub = build_sphere_rule(N - 1, order);
  for (int i = 0; i < n; ++i) {
    const double t = g.nodes[i];
    const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
    for (std::size_t j = 0; j < sub.size(); ++j) {
      rule.nodes.push_back(t);
      for (double c : sub.node(j)) rule.nodes.push_back(s * c);
      rule.weights.push_back(g.weights[i] * sub.weights[j]);
    }
  }
  return rule;
}

double min_hyperplane_distance(const RootSystem& rs, const SphericalRule& rule) {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < rule.size(); ++j)
    for (const auto& a : rs.positive_roots()) d = std::min(d, std::abs(a.pairing(rule.node(j))));
  return d;
}

void rotate(SphericalRule& rule, double angle) {
  // Givens rotations in every coordinate plane, with distinct angles so that
  // no symmetric configuration survives.
  const int N = rule.dim;
  for (int i = 0; i < N; ++i)
    for (int k = i + 1; k < N; ++k) {
      const double t = angle * (1.0 + 0.37 * i + 0.61 * k);
      const double c = std::cos(t), s = std::sin(t);
      for (std::size_t j = 0; j < rule.size(); ++j) {
        double* x = rule.nodes.data() + j * N;
        const double a = x[i], b = x[k];
        x[i] = c * a - s * b;
        x[k] = s * a + c * b;
      }
    }
}

}  // namespace

SphericalRule sphere_rule(int N, int order) {
  if (N < 1 || N > kMaxDim) throw InvalidInput("sphere rules are available for 1 <= N <= " + std::to_string(kMaxDim));
  if (order < 0) throw InvalidInput("sphere rule order must be nonnegative");
  static std::mutex mu;
  static std::map<std::pair<int, int>, SphericalRule> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(N, order);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_sphere_rule(N, order)).first;
  return it->second;
}

SphericalRule sphere_rule_for(const RootSystem& rs, int order) {
  SphericalRule rule = sphere_rule(rs.dim(), order);
  if (rs.dim() == 1) return rule;
  for (int attempt = 0; attempt < 8 && min_hyperplane_distance(rs, rule) < 1e-9; ++attempt) rotate(rule, 1e-3);
  if (min_hyperplane_distance(rs, rule) < 1e-9) throw InvariantBreach("could not move sphere nodes off the hyperplanes");
  return rule;
}

// ---------------------------------------------------------------------------
// Radial grids

void RadialGrid::validate() const {
  if (breakpoints.size() < 2 || breakpoints.front() != 0.0)
    throw InvalidInput("radial grid must start at 0 and contain at least one interval");
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    if (!(breakpoints[i] > breakpoints[i - 1])) throw InvalidInput("radial breakpoints must increase strictly");
  if (nodes_per_interval < 8) throw InvalidInput("radial grid needs at least 8 nodes per interval");
}

RadialGrid RadialGrid::ball(double R, int intervals, int nodes) {
  RadialGrid g;
  g.breakpoints.clear();
  for (int i = 0; i <= intervals; ++i) g.breakpoints.push_back(R * i / intervals);
  g.nodes_per_interval = nodes;
  return g;
}

RadialGrid RadialGrid::graded(const std::vector<double>& kinks, double r_max, EndMode tail, int levels, int nodes) {
  std::vector<double> k = kinks;
  std::sort(k.begin(), k.end());
  if (k.empty() || k.front() <= 0.0) throw InvalidInput("graded grid needs positive kinks");
  RadialGrid g;
  g.breakpoints = {0.0};
  for (int j = levels; j >= 1; --j) g.breakpoints.push_back(std::ldexp(k.front(), -j));
  for (double v : k)
    if (v > g.breakpoints.back()) g.breakpoints.push_back(v);
  if (r_max > g.breakpoints.back()) g.breakpoints.push_back(r_max);
  g.nodes_per_interval = nodes;
  g.head = EndMode::Power;
  g.tail = tail;
  return g;
}

namespace {

void check_finite(std::span<const double> v, double r) {
  for (double x : v)
    if (!std::isfinite(x)) {
      std::ostringstream os;
      os << "integrand is not finite at radial node r=" << r;
      throw InvalidInput(os.str());
    }
}

// Gauss-Legendre sum of g over [a, b], accumulated into acc.
void gauss_interval(double a, double b, int n, int comps, const RadialIntegrand& g, std::vector<double>& buf,
                    std::vector<double>& acc) {
  const GaussRule& rule = gauss_legendre(n);
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  for (int q = 0; q < n; ++q) {
    const double r = mid + half * rule.nodes[q];
    std::span<double> out(buf.data(), comps);
    std::fill(out.begin(), out.end(), 0.0);
    g(r, out);
    check_finite(out, r);
    for (int c = 0; c < comps; ++c) acc[c] += half * rule.weights[q] * out[c];
  }
}

struct PowerFit {
  double c = 0.0;
  double s = 0.0;
  double mismatch = 0.0;  // relative error at the check point
  bool zero = false;
};

// Fit c r^s through (r1, g1), (r2, g2) and test at (r3, g3).
PowerFit fit_power(double r1, double g1, double r2, double g2, double r3, double g3) {
  PowerFit f;
  if (g1 == 0.0 && g2 == 0.0 && g3 == 0.0) {
    f.zero = true;
    return f;
  }
  if (g1 == 0.0 || g2 == 0.0 || (g1 > 0) != (g2 > 0))
    throw InvalidInput("integrand does not behave like a power law at the grid end");
  f.s = std::log(g2 / g1) / std::log(r2 / r1);
  f.c = g1 / std::pow(r1, f.s);
  const double pred = f.c * std::pow(r3, f.s);
  f.mismatch = std::abs(pred - g3) / std::abs(g3 == 0.0 ? pred : g3);
  if (f.mismatch > 1e-6) throw InvalidInput("integrand does not behave like a power law at the grid end");
  return f;
}

std::vector<double> sample(const RadialIntegrand& g, int comps, double r) {
  std::vector<double> out(comps, 0.0);
  g(r, out);
  check_finite(out, r);
  return out;
}

std::vector<double> substitution_tail(double R, int n, int comps, const RadialIntegrand& g) {
  // int_R^inf g(r) dr = int_0^{1/R} g(1/t) t^-2 dt on geometric pieces.
  RadialIntegrand h = [&](double t, std::span<double> out) {
    g(1.0 / t, out);
    for (double& v : out) v /= t * t;
  };
  std::vector<double> acc(comps, 0.0), buf(comps);
  double hi = 1.0 / R;
  for (int j = 0; j < 40; ++j) {
    const double lo = 0.5 * hi;
    gauss_interval(lo, hi, n, comps, h, buf, acc);
    hi = lo;
  }
  return acc;
}

std::vector<double> radial_pass(const RadialGrid& grid, int n, int comps, const RadialIntegrand& g,
                                std::vector<double>* end_errors) {
  std::vector<double> acc(comps, 0.0), buf(comps);
  const auto& b = grid.breakpoints;
  const std::size_t first = grid.head == EndMode::Power ? 1 : 0;
  for (std::size_t i = first; i + 1 < b.size(); ++i) gauss_interval(b[i], b[i + 1], n, comps, g, buf, acc);

  if (grid.head == EndMode::Power) {
    const double a = b[1];
    auto g1 = sample(g, comps, a), g2 = sample(g, comps, 0.5 * a), g3 = sample(g, comps, 0.25 * a);
    for (int c = 0; c < comps; ++c) {
      PowerFit f = fit_power(a, g1[c], 0.5 * a, g2[c], 0.25 * a, g3[c]);
      if (f.zero) continue;
      if (!(f.s > -1.0)) throw Divergence("integral diverges at the origin (power " + std::to_string(f.s) + ")");
      const double v = f.c * std::pow(a, f.s + 1.0) / (f.s + 1.0);
      acc[c] += v;
      if (end_errors) (*end_errors)[c] += f.mismatch * std::abs(v);
    }
  } else if (grid.head == EndMode::Substitution) {
    throw InvalidInput("substitution is only available for the tail");
  }

  const double R = b.back();
  if (grid.tail == EndMode::Power) {
    auto g1 = sample(g, comps, R), g2 = sample(g, comps, 2 * R), g3 = sample(g, comps, 4 * R);
    for (int c = 0; c < comps; ++c) {
      PowerFit f = fit_power(R, g1[c], 2 * R, g2[c], 4 * R, g3[c]);
      if (f.zero) continue;
      if (!(f.s < -1.0)) throw Divergence("integral diverges at infinity (power " + std::to_string(f.s) + ")");
      const double v = -f.c * std::pow(R, f.s + 1.0) / (f.s + 1.0);
      acc[c] += v;
      if (end_errors) (*end_errors)[c] += f.mismatch * std::abs(v);
    }
  } else if (grid.tail == EndMode::Substitution) {
    auto t = substitution_tail(R, n, comps, g);
    for (int c = 0; c < comps; ++c) acc[c] += t[c];
  }
  return acc;
}

}  // namespace

std::vector<WeightedIntegral> integrate_radial_multi(const RadialGrid& grid, int components, const RadialIntegrand& g,
                                                     bool estimate_error) {
  grid.validate();
  std::vector<double> end_err(components, 0.0);
  auto fine = radial_pass(grid, grid.nodes_per_interval, components, g, &end_err);
  std::vector<WeightedIntegral> out(components);
  for (int c = 0; c < components; ++c) out[c].value = fine[c];
  if (estimate_error) {
    auto coarse = radial_pass(grid, grid.nodes_per_interval / 2, components, g, nullptr);
    for (int c = 0; c < components; ++c) out[c].estimated_error = std::abs(fine[c] - coarse[c]) + end_err[c];
  }
  return out;
}

WeightedIntegral integrate_radial(const std::function<double(double)>& g, double exponent, const RadialGrid& grid) {
  return integrate_radial_multi(grid, 1, [&](double r, std::span<double> out) {
    out[0] = g(r) * std::pow(r, exponent);
  })[0];
}

// ---------------------------------------------------------------------------
// Integration against mu_k

namespace {

std::vector<double> measure_pass(const RootSystem& rs, int comps, const PointIntegrand& f, const RadialGrid& grid,
                                 const SphericalRule& rule, int nodes, std::vector<double>* end_err) {
  const int N = rs.dim();
  const double radial_power = rs.effective_dim() - 1.0;
  std::vector<double> wsph(rule.size());
  for (std::size_t j = 0; j < rule.size(); ++j) wsph[j] = rule.weights[j] * weight(rs, rule.node(j));
  std::vector<double> x(N), vals(comps);
  RadialIntegrand g = [&](double r, std::span<double> out) {
    for (std::size_t j = 0; j < rule.size(); ++j) {
      if (wsph[j] == 0.0) continue;
      auto xi = rule.node(j);
      for (int i = 0; i < N; ++i) x[i] = r * xi[i];
      std::fill(vals.begin(), vals.end(), 0.0);
      f(x, vals);
      for (int c = 0; c < comps; ++c) {
        if (!std::isfinite(vals[c])) {
          std::ostringstream os;
          os << "integrand is not finite at node r=" << r << ", sphere node " << j;
          throw InvalidInput(os.str());
        }
        out[c] += wsph[j] * vals[c];
      }
    }
    const double rp = std::pow(r, radial_power);
    for (double& v : out) v *= rp;
  };
  return radial_pass(grid, nodes, comps, g, end_err);
}

}  // namespace

std::vector<WeightedIntegral> integrate_measure_multi(const RootSystem& rs, int components, const PointIntegrand& f,
                                                      const RadialGrid& grid, const SphericalRule& rule,
                                                      const MeasureOptions& opts) {
  grid.validate();
  if (rule.dim != rs.dim()) throw InvalidInput("sphere rule dimension does not match the root system");
  std::vector<double> end_err(components, 0.0);
  auto fine = measure_pass(rs, components, f, grid, rule, grid.nodes_per_interval, &end_err);
  std::vector<WeightedIntegral> out(components);
  for (int c = 0; c < components; ++c) out[c].value = fine[c];
  if (!opts.estimate_error) return out;

  auto coarse_r = measure_pass(rs, components, f, grid, rule, grid.nodes_per_interval / 2, nullptr);
  const int lower = opts.coarse_order > 0 ? opts.coarse_order : std::max(1, (2 * rule.order) / 3);
  std::vector<double> coarse_s = fine;
  if (lower < rule.order && rs.dim() > 1) {
    SphericalRule coarse_rule = sphere_rule_for(rs, lower);
    coarse_s = measure_pass(rs, components, f, grid, coarse_rule, grid.nodes_per_interval, nullptr);
  }
  for (int c = 0; c < components; ++c)
    out[c].estimated_error = std::abs(fine[c] - coarse_r[c]) + std::abs(fine[c] - coarse_s[c]) + end_err[c];
  return out;
}

WeightedIntegral integrate_measure(const RootSystem& rs, const ScalarField& f, const RadialGrid& grid,
                                   const SphericalRule& rule, const MeasureOptions& opts) {
  return integrate_measure_multi(
      rs, 1, [&](std::span<const double> x, std::span<double> out) { out[0] = f(x); }, grid, rule, opts)[0];
}

double integrate_sphere(const RootSystem& rs, const ScalarField& f, const SphericalRule& rule) {
  double s = 0.0;
  for (std::size_t j = 0; j < rule.size(); ++j) s += rule.weights[j] * weight(rs, rule.node(j)) * f(rule.node(j));
  return s;
}

double reflected_measure_invariance(const RootSystem& rs, const ScalarField& f, const RadialGrid& grid,
                                    const SphericalRule& rule) {
  auto pos = rs.positive_roots();
  const int comps = static_cast<int>(pos.size()) + 1;
  std::vector<double> y(rs.dim());
  auto vals = integrate_measure_multi(
      rs, comps,
      [&](std::span<const double> x, std::span<double> out) {
        out[0] = f(x);
        for (std::size_t a = 0; a < pos.size(); ++a) {
          reflect_into(pos[a], x, y);
          out[a + 1] = f(y);
        }
      },
      grid, rule, {.estimate_error = false});
  double worst = 0.0;
  const double scale = std::max(1.0, std::abs(vals[0].value));
  for (int c = 1; c < comps; ++c) worst = std::max(worst, std::abs(vals[c].value - vals[0].value) / scale);
  return worst;
}

}  // namespace dunkl
