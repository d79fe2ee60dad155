#include <doctest.h>

#include <cmath>

#include "dunkl/corpus.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/functionals.hpp"
#include "dunkl/sweeps.hpp"
#include "dunkl/verification.hpp"

using namespace dunkl;

TEST_CASE("sharp constants") {
  CHECK(hardy_constant(4.0, 3.0) == doctest::Approx(std::pow(0.25, 4)));
  CHECK(hardy2_constant(3.0) == doctest::Approx(0.25));
  CHECK(rellich_constant(5.0) == doctest::Approx(1.5625));
  CHECK(hr_weighted_constant(5.0) == doctest::Approx(9.0 / 4.0));
  CHECK(hr_constant(5.0) == doctest::Approx(25.0 / 4.0));
  CHECK(radial_hardy_1d_constant(5.0) == doctest::Approx(4.0));
}

TEST_CASE("epsilon constants") {
  for (double p : {1.5, 2.0, 3.0, 4.5}) {
    const double e = optimal_epsilon(p);
    const double best = std::pow((p - 1.0) / p, p);
    CHECK(epsilon_constant(p, e) == doctest::Approx(best).epsilon(1e-12));
    CHECK(epsilon_constant(p, e * 1.05) < best);
    CHECK(epsilon_constant(p, e * 0.95) < best);
  }
  CHECK(optimal_epsilon(2.0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(epsilon_constant(2.0, std::sqrt(2.0)) == doctest::Approx(0.25));
}

TEST_CASE("Hardy quotient of a radial bump stays above the constant") {
  const auto rs = build_root_system(Family::A, 2, {Rational(0)});
  const auto d = distance_data({DomainKind::PuncturedSpace, 3, 1.0, 0}, rs);
  const RadialFunction u(3, quintic_bump_profile(0.5, 1.0, 2.0));
  const auto grid = grid_for(u, 24);
  const auto rule = sphere_rule_for(rs, 4);
  const auto q = hardy_quotient_p(rs, u, 2.0, d, grid, rule);
  CHECK(q.value >= 0.25);
  CHECK(q.error() < 1e-6);
}

TEST_CASE("extremizing family approaches the Hardy constant") {
  const auto rs = build_root_system(Family::A, 2, {Rational(0)});
  const auto f = make_family(FamilyKind::Hardy2, rs);
  CHECK(f.target() == doctest::Approx(0.25));
  const double q1 = oracle_quotient(f, 0.1);
  CHECK(std::abs(q1 - 0.25) / 0.25 < 0.15);
  CHECK(oracle_quotient(f, 0.05) < q1);
  const auto qq = quadrature_quotient(f, rs, 0.1);
  CHECK(qq.value == doctest::Approx(q1).epsilon(1e-6));
}

TEST_CASE("Rellich functional in R^5") {
  const auto rs = build_root_system(Family::A, 1, {Rational(0)}, 5);
  const auto f = make_family(FamilyKind::Rellich, rs);
  CHECK(f.target() == doctest::Approx(1.5625));
  CHECK(make_family(FamilyKind::Thm41, rs).target() == doctest::Approx(9.0 / 4.0));
  CHECK(make_family(FamilyKind::Thm42, rs).target() == doctest::Approx(25.0 / 4.0));

  const RadialFunction u(5, quintic_bump_profile(0.5, 1.0, 2.0));
  const auto q = rellich_quotient(rs, u, grid_for(u, 24), sphere_rule_for(rs, 2));
  CHECK(q.value >= 1.5625);
}

TEST_CASE("scale invariance") {
  const auto rs = build_root_system(Family::B, 2, {Rational(1), Rational(1, 2)});
  const auto rule = sphere_rule_for(rs, 10);
  const RadialTimesPolynomial u(quintic_bump_profile(0.5, 1.0, 2.0), Polynomial::variable(2, 0));
  const RadialTimesPolynomial v(quintic_bump_profile(1.0, 2.0, 4.0),
                                Polynomial::variable(2, 0) * Rational(1, 2));  // u(x/2)
  const auto a = hr_quotient(rs, u, grid_for(u, 24), rule);
  const auto b = hr_quotient(rs, v, grid_for(v, 24), rule);
  CHECK(a.value == doctest::Approx(b.value).epsilon(1e-8));
}

TEST_CASE("degenerate denominators") {
  WeightedIntegral num{1.0, 0.0}, den{0.0, 0.0};
  CHECK_THROWS_AS(make_quotient(num, den), DegenerateInput);
  const auto rs = build_root_system(Family::A, 1, {Rational(0)}, 5);
  const LambdaFunction zero(
      5, [](std::span<const double>) { return 0.0; },
      [](std::span<const double>, std::span<double> g) {
        for (double& v : g) v = 0.0;
      },
      [](std::span<const double>) { return 0.0; });
  CHECK_THROWS_AS(rellich_quotient(rs, zero, RadialGrid::ball(2.0), sphere_rule_for(rs, 2)), DegenerateInput);
}

TEST_CASE("mode coefficients") {
  // N = 7, gamma = 1: D_1 = 1
  const auto m1 = mode_coefficients<Rational>(Rational(9), Rational(1), 1, Rational(81, 4));
  CHECK(m1.D == Rational(1));
  // N = 5, gamma = 0: D_2 = 125/2
  const auto m2 = mode_coefficients<Rational>(Rational(5), Rational(0), 2, Rational(25, 4));
  CHECK(m2.D == Rational(125, 2));
  CHECK(m2.lambda == Rational(-10));
  const auto m0 = mode_coefficients<Rational>(Rational(5), Rational(1, 2), 0, Rational(3));
  CHECK(m0.B == Rational(0));
  CHECK(m0.lambda == Rational(0));

  const auto md = mode_coefficients<double>(9.0, 1.0, 1, 81.0 / 4.0);
  CHECK(md.D == doctest::Approx(1.0));
}

TEST_CASE("one-dimensional weighted Hardy") {
  for (double e : {3.0, 4.5, 7.0}) {
    const double eps = 0.05;
    const auto u = truncated_power_profile(e, eps);
    const auto grid = RadialGrid::graded({1.0}, 2.0, EndMode::Power, 30, 24);
    const auto q = radial_hardy_1d(e, *u, grid);
    CHECK(q.value == doctest::Approx(truncated_power_oracle(e, eps)).epsilon(1e-8));
    CHECK(q.value >= radial_hardy_1d_constant(e));
  }
  const auto corpus = profile_corpus(10, 5);
  CHECK(radial_hardy_report(4.0, corpus).pass());
  CHECK(radial_hardy_report(6.0, corpus).pass());
}

TEST_CASE("mode functional on the profile corpus") {
  const double nbar = 7.0, gamma = 0.0;
  const auto corpus = profile_corpus(10, 5);
  const auto r = mode_functional_report(nbar, gamma, nbar * nbar / 4.0, {0, 1, 2, 3}, corpus);
  CHECK(r.entries.size() == 40);
  CHECK(r.pass());
}
