#include "dunkl/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "dunkl/errors.hpp"
#include "dunkl/harmonics.hpp"

namespace dunkl {

Polynomial random_polynomial(int dim, int max_degree, std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<int> nterms(1, std::max(1, terms));
  std::uniform_int_distribution<int> degree(0, max_degree);
  std::uniform_int_distribution<int> coord(0, dim - 1);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  Polynomial p(dim);
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Exponent e(dim, 0);
    const int d = degree(rng);
    for (int j = 0; j < d; ++j) ++e[coord(rng)];
    int a = 0;
    while (a == 0) a = num(rng);
    Rational c(a, den(rng));
    c.canonicalize();
    p.add_term(e, c);
  }
  if (p.is_zero()) p = Polynomial::constant(dim, 1);
  return p;
}

Rational random_multiplicity(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> den(1, 6);
  const int b = den(rng);
  std::uniform_int_distribution<int> num(0, 2 * b);
  Rational r(num(rng), b);
  r.canonicalize();
  return r;
}

std::shared_ptr<const PiecewisePowerProfile> quintic_bump_profile(double a, double m, double b) {
  if (!(a >= 0.0 && m > a && b > m)) throw InvalidInput("quintic bump needs 0 <= a < m < b");
  using Piece = PiecewisePowerProfile::Piece;
  const double zero[3] = {0.0, 0.0, 0.0}, one[3] = {1.0, 0.0, 0.0};
  std::vector<Piece> pieces;
  if (a > 0.0) {
    pieces.push_back({0.0, a, PowerSum()});
    pieces.push_back({a, m, quintic_join(a, m, zero, one)});
  } else {
    pieces.push_back({0.0, m, PowerSum(1.0, 0.0)});
  }
  pieces.push_back({m, b, quintic_join(m, b, one, zero)});
  pieces.push_back({b, kInfinity, PowerSum()});
  return std::make_shared<const PiecewisePowerProfile>(std::move(pieces));
}

RadialGrid grid_for(const SmoothFunction& f, int nodes, double r_max, double max_length) {
  const RadialSupport s = f.support();
  std::vector<double> pts{0.0};
  if (s.inner > 0.0) pts.push_back(s.inner);
  const double outer = std::isfinite(s.outer) ? s.outer : r_max;
  for (double k : f.kinks())
    if (k > s.inner && k < outer) pts.push_back(k);
  pts.push_back(outer);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(), [](double x, double y) { return y - x < 1e-12; }), pts.end());
  RadialGrid g;
  g.breakpoints = {0.0};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double len = pts[i] - pts[i - 1];
    const int pieces = pts[i - 1] >= s.inner ? std::max(2, static_cast<int>(std::ceil(len / max_length))) : 1;
    for (int j = 1; j < pieces; ++j) g.breakpoints.push_back(pts[i - 1] + len * j / pieces);
    g.breakpoints.push_back(pts[i]);
  }
  g.nodes_per_interval = nodes;
  return g;
}

Polynomial random_harmonic(const RootSystem& rs, int n, std::mt19937_64& rng) {
  const auto kernel = hharmonic_kernel(rs, n);
  std::uniform_int_distribution<int> c(-3, 3);
  Polynomial p(rs.dim());
  while (p.is_zero())
    for (const auto& y : kernel) p += y * Rational(c(rng));
  return p;
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

std::vector<double> random_direction(int N, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<double> v(N);
  double n = 0.0;
  while (n < 1e-6) {
    for (double& x : v) x = g(rng);
    n = norm(v);
  }
  for (double& x : v) x /= n;
  return v;
}

// Direction whose pairing with every root is at least 0.1 in size.
std::vector<double> off_hyperplane_direction(const RootSystem& rs, std::mt19937_64& rng) {
  for (;;) {
    auto v = random_direction(rs.dim(), rng);
    bool ok = true;
    for (const auto& a : rs.positive_roots()) ok = ok && std::abs(a.pairing(v)) >= 0.1;
    if (ok) return v;
  }
}

CorpusMember bump_times_harmonic(const RootSystem& rs, double a, double m, double b, int n, std::mt19937_64& rng,
                                 int nodes) {
  auto q = quintic_bump_profile(a, m, b);
  auto f = std::make_shared<RadialTimesPolynomial>(q, random_harmonic(rs, n, rng));
  return {"bump[" + fmt(a) + "," + fmt(b) + "]*Y" + std::to_string(n), f, grid_for(*f, nodes)};
}

}  // namespace

Corpus hardy_rellich_corpus(const RootSystem& rs, int count, int max_degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::uniform_int_distribution<int> deg(0, max_degree);
  Corpus out;
  for (int i = 0; i < count; ++i) {
    switch (i % 4) {
      case 0: {
        const double a = 0.05 + 2.5 * U(rng), w = 0.3 + 1.2 * U(rng);
        out.push_back(bump_times_harmonic(rs, a, a + 0.5 * w, a + w, deg(rng), rng, 12));
        break;
      }
      case 1: {
        const double m = 0.2 + 0.8 * U(rng), b = m + 0.3 + 0.7 * U(rng);
        out.push_back(bump_times_harmonic(rs, 0.0, m, b, deg(rng), rng, 12));
        break;
      }
      case 2: {
        const double s = 0.5 + U(rng);
        const int n = deg(rng);
        auto f = std::make_shared<RadialTimesPolynomial>(std::make_shared<GaussianProfile>(s), random_harmonic(rs, n, rng));
        out.push_back({"gauss(" + fmt(s) + ")*Y" + std::to_string(n), f, grid_for(*f, 12, 6.0 * s)});
        break;
      }
      default: {
        auto c = off_hyperplane_direction(rs, rng);
        const double r = 0.3 + 0.7 * U(rng), s = 1.2 + 0.8 * U(rng);
        for (double& x : c) x *= r;
        auto f = std::make_shared<ShiftedGaussian>(c, s);
        out.push_back({"gauss@" + fmt(r) + "(" + fmt(s) + ")", f, grid_for(*f, 12, r + 6.0 * s)});
        break;
      }
    }
  }
  return out;
}

Corpus domain_corpus(const RootSystem& rs, const DistanceData& d, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::normal_distribution<double> G;
  const int N = rs.dim();
  const DomainSpec& spec = d.spec();
  Corpus out;
  for (int i = 0; i < count; ++i) {
    if (spec.kind == DomainKind::ExteriorBall && i % 2 == 1) {
      const double a = spec.radius + 0.1 + 1.4 * U(rng), w = 0.3 + 0.9 * U(rng);
      out.push_back(bump_times_harmonic(rs, a, a + 0.5 * w, a + w, static_cast<int>(U(rng) * 3.0), rng, 16));
      continue;
    }
    std::vector<double> c(N);
    double dist = 0.0;
    switch (spec.kind) {
      case DomainKind::Halfspace:
        for (double& x : c) x = 0.8 * G(rng);
        c[spec.axis] = dist = 0.7 + 1.3 * U(rng);
        break;
      case DomainKind::WedgeSN: {
        for (double& x : c) x = 0.8 * G(rng);
        dist = 0.7 + 1.3 * U(rng);
        const double shift = (dist - d.delta(c)) / std::sqrt(static_cast<double>(N));
        for (double& x : c) x += shift;
        break;
      }
      case DomainKind::ExteriorBall: {
        c = random_direction(N, rng);
        const double r = spec.radius + 0.6 + 1.9 * U(rng);
        for (double& x : c) x *= r;
        dist = r - spec.radius;
        break;
      }
      case DomainKind::PuncturedSpace: {
        c = random_direction(N, rng);
        const double r = 0.5 + 2.0 * U(rng);
        for (double& x : c) x *= r;
        dist = r;
        break;
      }
    }
    const double s = (0.5 + 0.45 * U(rng)) * dist;
    std::vector<double> tilt(N);
    for (double& x : tilt) x = 0.4 * G(rng) / s;
    auto f = std::make_shared<ShiftedBump>(c, s, tilt);
    out.push_back({"bump@" + fmt(norm(c)) + "(" + fmt(s) + ")", f, grid_for(*f, 16)});
  }
  return out;
}

Corpus damped_polynomial_corpus(const RootSystem& rs, int count, int max_degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  Corpus out;
  for (int i = 0; i < count; ++i) {
    const double s = 0.6 + 0.6 * U(rng);
    auto f = std::make_shared<RadialTimesPolynomial>(std::make_shared<GaussianProfile>(s),
                                                     random_polynomial(rs.dim(), max_degree, rng, 4));
    out.push_back({"gauss(" + fmt(s) + ")*P" + std::to_string(i), f, grid_for(*f, 24, 7.0 * s)});
  }
  return out;
}

std::vector<ProfileMember> profile_corpus(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::vector<ProfileMember> out;
  for (int i = 0; i < count; ++i) {
    const double a = 0.05 + 1.5 * U(rng), m = a + 0.1 + 0.8 * U(rng), b = m + 0.1 + 0.8 * U(rng);
    RadialGrid g;
    g.breakpoints = {0.0, a, m, b};
    g.nodes_per_interval = 24;
    out.push_back({"bump[" + fmt(a) + "," + fmt(b) + "]", quintic_bump_profile(a, m, b), g});
  }
  return out;
}

}  // namespace dunkl
