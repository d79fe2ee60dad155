#include <doctest.h>

#include <cmath>
#include <random>

#include "dunkl/corpus.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/polyalg.hpp"

using namespace dunkl;

namespace {

RootSystem rank_one(const Rational& k) { return build_root_system(Family::Z2, 1, {k}); }

Polynomial xpow(int n) { return Polynomial::monomial({n}); }

}  // namespace

TEST_CASE("divided differences in rank one") {
  const auto rs = rank_one(Rational(1));
  const Root& a = rs.positive_roots()[0];
  CHECK(divided_difference(Polynomial::constant(1, 5), a).poly.is_zero());
  CHECK(divided_difference(xpow(2), a).poly.is_zero());
  const auto d = divided_difference(xpow(1), a);
  const std::vector<double> x{0.7};
  CHECK(d.evaluate(x) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("Dunkl operator on monomials in rank one") {
  // T x^n = (n + k (1 - (-1)^n)) x^(n-1) for the root sqrt(2) e_1.
  for (const Rational& k : {Rational(0), Rational(1, 2), Rational(3, 7)}) {
    const auto rs = rank_one(k);
    for (int n = 1; n <= 7; ++n) {
      const Rational c = Rational(n) + k * (n % 2 == 1 ? 2 : 0);
      CHECK(dunkl_apply(rs, 0, xpow(n)) == xpow(n - 1) * c);
    }
    CHECK(dunkl_apply(rs, 0, xpow(1)) == Polynomial::constant(1, 1 + 2 * k));
  }
}

TEST_CASE("Dunkl Laplacian of |x|^2 is 2 Nbar") {
  for (const auto& rs : {build_root_system(Family::A, 2, {Rational(1, 3)}),
                         build_root_system(Family::B, 2, {Rational(1, 2), Rational(2)}),
                         build_root_system(Family::Z2, 3, {Rational(1), Rational(0), Rational(5, 2)})}) {
    const Rational nbar = Rational(rs.dim()) + 2 * rs.summary().gamma;
    CHECK(dunkl_laplacian_sym(rs, Polynomial::norm_squared(rs.dim())) == Polynomial::constant(rs.dim(), 2 * nbar));
  }
}

TEST_CASE("Laplacian formulas agree and reduce to the classical one at k = 0") {
  std::mt19937_64 rng(11);
  const auto b2 = build_root_system(Family::B, 2, {Rational(1, 2), Rational(1, 3)});
  const auto b0 = build_root_system(Family::B, 2, {Rational(0), Rational(0)});
  for (int i = 0; i < 15; ++i) {
    const auto p = random_polynomial(2, 6, rng);
    CHECK(dunkl_laplacian_via_operators(b2, p) == dunkl_laplacian_via_formula(b2, p));
    CHECK(dunkl_laplacian_sym(b0, p) == p.derivative(0).derivative(0) + p.derivative(1).derivative(1));
  }
}

TEST_CASE("Leibniz rules") {
  const auto rs = rank_one(Rational(1, 2));
  const auto one = Polynomial::constant(1, 1);
  CHECK(leibniz_check(rs, one, one, 0).ok());

  const auto even = leibniz_check(rs, xpow(2), xpow(1), 0);
  CHECK(even.short_rule_applies);
  CHECK(even.ok());
  CHECK(even.short_residual.is_zero());

  const auto odd = leibniz_check(rs, xpow(1), xpow(1), 0);
  CHECK(odd.general_residual.is_zero());
  CHECK_FALSE(odd.short_rule_applies);
  CHECK_FALSE(odd.short_residual.is_zero());
  CHECK(odd.ok());

  std::mt19937_64 rng(5);
  const auto a3 = build_root_system(Family::A, 3, {Rational(2, 3)});
  for (int t = 0; t < 5; ++t) {
    const auto u = random_polynomial(4, 3, rng), v = random_polynomial(4, 3, rng);
    for (int i = 0; i < 4; ++i) CHECK(leibniz_check(a3, u, v, i).ok());
  }
}

TEST_CASE("commutativity") {
  std::mt19937_64 rng(17);
  const auto a0 = build_root_system(Family::A, 2, {Rational(0)});
  const auto a2 = build_root_system(Family::A, 2, {Rational(1, 2)});
  const auto b2 = build_root_system(Family::B, 2, {Rational(1, 3), Rational(2)});
  for (int t = 0; t < 5; ++t) {
    const auto p4 = random_polynomial(3, 4, rng);
    CHECK(commutativity_check(a0, 0, 2, p4).commute);
    CHECK(commutativity_check(a2, 0, 1, p4).commute);
    CHECK(commutativity_check(a2, 1, 2, p4).commute);
    CHECK(commutativity_check(b2, 0, 1, random_polynomial(2, 5, rng)).commute);
  }
}

TEST_CASE("independence of the positive subsystem") {
  const auto rs = rank_one(Rational(3, 4));
  CHECK(positive_subsystem_independence(rs, {true}, xpow(3), 0));

  std::mt19937_64 rng(23);
  const auto a2 = build_root_system(Family::A, 2, {Rational(1)});
  const auto a0 = build_root_system(Family::A, 2, {Rational(0)});
  for (int t = 0; t < 5; ++t) {
    const auto p = random_polynomial(3, 3, rng);
    for (int i = 0; i < 3; ++i) {
      CHECK(positive_subsystem_independence(a2, {false, true, false}, p, i));
      CHECK(positive_subsystem_independence(a0, {true, true, true}, p, i));
    }
  }
}

TEST_CASE("invariance and inexact roots") {
  const auto a2 = build_root_system(Family::A, 2, {Rational(1)});
  CHECK(is_invariant(a2, Polynomial::norm_squared(3)));
  CHECK_FALSE(is_invariant(a2, Polynomial::variable(3, 0)));
  const auto i3 = build_root_system(Family::I2, 2, {Rational(1)}, 0, 3);
  CHECK_THROWS_AS(dunkl_apply(i3, 0, Polynomial::variable(2, 0)), InvalidInput);
}
