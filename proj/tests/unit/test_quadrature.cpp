#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dunkl/corpus.hpp"
#include "dunkl/dunklnum.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/quadrature.hpp"

using namespace dunkl;

namespace {

// int_{S^{N-1}} prod x_i^{2 a_i} d nu = 2 prod Gamma(a_i + 1/2) / Gamma(sum a_i + N/2)
double sphere_moment(const std::vector<int>& a) {
  double num = 2.0, s = 0.0;
  for (int e : a) {
    num *= std::tgamma(e + 0.5);
    s += e + 0.5;
  }
  return num / std::tgamma(s);
}

double integrate_monomial(const SphericalRule& rule, const std::vector<int>& a) {
  double sum = 0.0;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    double v = rule.weights[j];
    for (std::size_t i = 0; i < a.size(); ++i) v *= std::pow(rule.node(j)[i], 2 * a[i]);
    sum += v;
  }
  return sum;
}

}  // namespace

TEST_CASE("Gauss-Legendre and Gauss-Gegenbauer rules") {
  const auto& g = gauss_legendre(5);
  double s = 0.0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * std::pow(g.nodes[i], 8);
  CHECK(s == doctest::Approx(2.0 / 9.0).epsilon(1e-14));

  // int t^{2m} (1-t^2)^a dt = B(m + 1/2, a + 1)
  for (double a : {-0.5, 0.0, 0.5, 1.5, 2.7}) {
    const auto r = gauss_gegenbauer(6, a);
    for (int m = 0; m <= 5; ++m) {
      double v = 0.0;
      for (std::size_t i = 0; i < r.nodes.size(); ++i) v += r.weights[i] * std::pow(r.nodes[i], 2 * m);
      CHECK(v == doctest::Approx(std::beta(m + 0.5, a + 1.0)).epsilon(1e-12));
    }
  }
}

TEST_CASE("sphere rules integrate even monomials exactly") {
  CHECK(sphere_area(3) == doctest::Approx(4.0 * std::numbers::pi));
  CHECK(sphere_area(2) == doctest::Approx(2.0 * std::numbers::pi));
  for (int N = 1; N <= kMaxDim; ++N) {
    const int order = N <= 4 ? 8 : 6;
    const auto rule = sphere_rule(N, order);
    CAPTURE(N);
    CHECK(integrate_monomial(rule, std::vector<int>(N, 0)) == doctest::Approx(sphere_area(N)).epsilon(1e-12));
    std::vector<int> a(N, 0);
    a[0] = 2;
    CHECK(integrate_monomial(rule, a) == doctest::Approx(sphere_moment(a)).epsilon(1e-12));
    if (N >= 2) {
      a[0] = 1;
      a[N - 1] = 1;
      CHECK(integrate_monomial(rule, a) == doctest::Approx(sphere_moment(a)).epsilon(1e-12));
    }
    if (N >= 3) {
      std::vector<int> b(N, 0);
      b[0] = 1;
      b[1] = 1;
      b[2] = 1;
      CHECK(integrate_monomial(rule, b) == doctest::Approx(sphere_moment(b)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(sphere_rule(kMaxDim + 1, 4), InvalidInput);
}

TEST_CASE("sphere_rule_for keeps nodes off the hyperplanes") {
  for (const auto& rs : {build_root_system(Family::A, 1, {Rational(1)}, 7),
                         build_root_system(Family::B, 3, {Rational(1), Rational(1)}),
                         build_root_system(Family::Z2, 2, {Rational(1), Rational(1)})}) {
    const int order = 6 + static_cast<int>(2 * rs.gamma());  // exact for the polynomial weight
    const auto rule = sphere_rule_for(rs, order);
    for (std::size_t j = 0; j < rule.size(); ++j)
      for (const auto& a : rs.positive_roots()) REQUIRE(std::abs(a.pairing(rule.node(j))) > 1e-9);
    CHECK(integrate_sphere(rs, [](std::span<const double>) { return 1.0; }, sphere_rule(rs.dim(), order)) ==
          doctest::Approx(integrate_sphere(rs, [](std::span<const double>) { return 1.0; }, rule)).epsilon(1e-10));
  }
}

TEST_CASE("integrate_measure: Gaussian and homogeneity") {
  const auto rs = build_root_system(Family::A, 2, {Rational(0)});
  const auto rule = sphere_rule_for(rs, 4);
  const auto grid = RadialGrid::ball(8.0, 8, 32);
  const auto gauss = integrate_measure(
      rs, [](std::span<const double> x) { return std::exp(-dot(x, x)); }, grid, rule);
  CHECK(std::abs(gauss.value - std::pow(std::numbers::pi, 1.5)) < 1e-8);

  // x_1^2 over balls of radius 2 and 1: ratio 2^(2 + Nbar)
  const auto a2 = build_root_system(Family::A, 2, {Rational(1)});
  const auto r8 = sphere_rule_for(a2, 10);
  const ScalarField f = [](std::span<const double> x) { return x[0] * x[0]; };
  const double i2 = integrate_measure(a2, f, RadialGrid::ball(2.0, 2, 16), r8).value;
  const double i1 = integrate_measure(a2, f, RadialGrid::ball(1.0, 1, 16), r8).value;
  CHECK(i2 / i1 == doctest::Approx(std::pow(2.0, 2.0 + a2.effective_dim())).epsilon(1e-10));
}

TEST_CASE("integrate_radial: closed forms and divergence") {
  RadialGrid unit;
  unit.breakpoints = {0.0, 1.0};
  unit.nodes_per_interval = 8;
  CHECK(integrate_radial([](double) { return 1.0; }, 2.0, unit).value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  const double eps = 0.05;
  RadialGrid tail;
  tail.breakpoints = {0.0, 1.0, 3.0};
  tail.nodes_per_interval = 32;
  tail.tail = EndMode::Power;
  const auto v = integrate_radial([&](double r) { return r < 1.0 ? 0.0 : std::pow(r, -1.0 - eps); }, 0.0, tail);
  CHECK(v.value == doctest::Approx(1.0 / eps).epsilon(1e-10));

  CHECK_THROWS_AS(integrate_radial([](double r) { return r < 1.0 ? 0.0 : std::pow(r, -0.5); }, 0.0, tail),
                  Divergence);

  RadialGrid head = RadialGrid::graded({1.0}, 2.0, EndMode::None, 30, 16);
  CHECK(integrate_radial([](double r) { return r <= 2.0 ? 1.0 : 0.0; }, -0.5, head).value ==
        doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-10));
  CHECK_THROWS_AS(integrate_radial([](double) { return 1.0; }, -1.5, head), Divergence);
}

TEST_CASE("reflected measure invariance") {
  const auto z1 = build_root_system(Family::Z2, 1, {Rational(1, 2)});
  const auto rule1 = sphere_rule_for(z1, 1);
  const auto grid = RadialGrid::ball(7.0, 7, 24);
  const ScalarField odd = [](std::span<const double> x) { return x[0] * std::exp(-x[0] * x[0]); };
  CHECK(std::abs(integrate_measure(z1, odd, grid, rule1).value) < 1e-12);
  CHECK(reflected_measure_invariance(z1, odd, grid, rule1) < 1e-10);

  const auto a2 = build_root_system(Family::A, 2, {Rational(1)});
  const auto rule = sphere_rule_for(a2, 14);
  for (const auto& m : damped_polynomial_corpus(a2, 3, 3, 9)) {
    const ScalarField f = [&](std::span<const double> x) { return m.f->value(x); };
    CHECK(reflected_measure_invariance(a2, f, m.grid, rule) < 1e-6);
  }
  const ScalarField radial = [](std::span<const double> x) { return std::exp(-dot(x, x)); };
  CHECK(reflected_measure_invariance(a2, radial, grid, rule) < 1e-12);
}

TEST_CASE("integration by parts") {
  const auto z1 = build_root_system(Family::Z2, 1, {Rational(1, 2)});
  const auto g = std::make_shared<GaussianProfile>(1.0);
  const RadialTimesPolynomial u(g, Polynomial::variable(1, 0));
  const RadialFunction v(1, g);
  const auto grid = RadialGrid::ball(7.0, 7, 24);
  CHECK(integration_by_parts_residual(z1, u, v, 0, grid, sphere_rule_for(z1, 1)) < 1e-8);

  const auto a0 = build_root_system(Family::A, 2, {Rational(0)});
  const auto a2 = build_root_system(Family::A, 2, {Rational(1)});
  const auto c0 = damped_polynomial_corpus(a0, 2, 3, 4);
  const auto c2 = damped_polynomial_corpus(a2, 2, 3, 4);
  for (int i = 0; i < 3; ++i) {
    CHECK(integration_by_parts_residual(a0, *c0[0].f, *c0[1].f, i, c0[0].grid, sphere_rule_for(a0, 8)) < 1e-8);
    CHECK(integration_by_parts_residual(a2, *c2[0].f, *c2[1].f, i, c2[0].grid, sphere_rule_for(a2, 14)) < 1e-6);
  }
}

TEST_CASE("non-finite integrands are reported") {
  const auto rs = build_root_system(Family::A, 1, {Rational(0)});
  const auto rule = sphere_rule_for(rs, 2);
  CHECK_THROWS_AS(integrate_measure(
                      rs, [](std::span<const double>) { return std::nan(""); }, RadialGrid::ball(1.0), rule),
                  InvalidInput);
}
