#include <doctest.h>

#include <cmath>
#include <random>

#include "dunkl/corpus.hpp"
#include "dunkl/harmonics.hpp"
#include "dunkl/polyalg.hpp"

using namespace dunkl;

TEST_CASE("random polynomials and multiplicities") {
  std::mt19937_64 a(3), b(3);
  for (int i = 0; i < 10; ++i) {
    const auto p = random_polynomial(3, 4, a);
    CHECK(p == random_polynomial(3, 4, b));
    CHECK(p.degree() <= 4);
    CHECK(p.dim() == 3);
  }
  for (int i = 0; i < 50; ++i) {
    const Rational k = random_multiplicity(a);
    CHECK(k >= 0);
    CHECK(k <= 2);
    CHECK(k.get_den() <= 6);
  }
}

TEST_CASE("quintic bump profile is C^2") {
  const auto q = quintic_bump_profile(0.5, 1.0, 2.0);
  CHECK(q->value(0.2) == 0.0);
  CHECK(q->value(1.0) == doctest::Approx(1.0));
  CHECK(q->value(2.5) == 0.0);
  for (double r : {0.5, 1.0, 2.0}) {
    const double h = 1e-7;
    CHECK(q->value(r - h) == doctest::Approx(q->value(r + h)).epsilon(1e-6));
    CHECK(q->d1(r - h) == doctest::Approx(q->d1(r + h)).scale(1.0).epsilon(1e-5));
    CHECK(q->d2(r - h) == doctest::Approx(q->d2(r + h)).scale(1.0).epsilon(1e-4));
  }
  const auto flat = quintic_bump_profile(0.0, 1.0, 2.0);
  CHECK(flat->value(0.3) == doctest::Approx(1.0));
}

TEST_CASE("random harmonics are h-harmonic") {
  const auto rs = build_root_system(Family::B, 2, {Rational(1, 2), Rational(3)});
  std::mt19937_64 rng(9);
  for (int n = 0; n <= 4; ++n) {
    const auto y = random_harmonic(rs, n, rng);
    CHECK_FALSE(y.is_zero());
    CHECK(dunkl_laplacian_sym(rs, y).is_zero());
  }
}

TEST_CASE("corpora are deterministic and well formed") {
  const auto rs = build_root_system(Family::A, 2, {Rational(1, 2)});
  const auto c1 = hardy_rellich_corpus(rs, 12, 2, 7);
  const auto c2 = hardy_rellich_corpus(rs, 12, 2, 7);
  REQUIRE(c1.size() == 12);
  const std::vector<double> x{0.31, 0.77, -0.52};
  for (std::size_t i = 0; i < c1.size(); ++i) {
    CHECK(c1[i].name == c2[i].name);
    CHECK(c1[i].f->value(x) == c2[i].f->value(x));
    CHECK_NOTHROW(c1[i].grid.validate());
  }

  const auto d = distance_data({DomainKind::ExteriorBall, 3, 1.0, 0}, rs);
  const auto dc = domain_corpus(rs, d, 10, 11);
  REQUIRE(dc.size() == 10);
  std::mt19937_64 rng(1);
  for (const auto& m : dc)
    for (const auto& p : random_probes(3, 40, 0.05, 0.999, rng)) CHECK(m.f->value(p) == 0.0);

  const auto pc = profile_corpus(8, 5);
  REQUIRE(pc.size() == 8);
  for (const auto& m : pc) CHECK(m.q->inner_radius() > 0.0);
}

TEST_CASE("grid_for follows the support") {
  const RadialFunction u(3, quintic_bump_profile(1.0, 2.0, 4.5));
  const auto g = grid_for(u, 16, 9.0, 1.0);
  CHECK(g.breakpoints.front() == 0.0);
  CHECK(g.r_max() == doctest::Approx(4.5));
  for (std::size_t i = 2; i < g.breakpoints.size(); ++i)
    CHECK(g.breakpoints[i] - g.breakpoints[i - 1] <= 1.0 + 1e-12);
}
