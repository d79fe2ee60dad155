#include <doctest.h>

#include <cmath>
#include <random>

#include "dunkl/corpus.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/harmonics.hpp"
#include "dunkl/polyalg.hpp"

using namespace dunkl;

namespace {

// dim ker of the Laplacian matrix through a floating-point rank computation.
long long nullity(const RootSystem& rs, int n) {
  const auto rows = dunkl_laplacian_matrix(rs, n);
  const auto cols = static_cast<Eigen::Index>(monomials_of_degree(rs.dim(), n).size());
  if (rows.empty()) return cols;
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(static_cast<Eigen::Index>(i), j) = rows[i][j].get_d();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-10);
  return cols - lu.rank();
}

ScalarField field(const SmoothFunction& f) {
  return [&f](std::span<const double> x) { return f.value(x); };
}

}  // namespace

TEST_CASE("dimension formula") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(1, 2) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(hharmonic_dim(0, 3) == 1);
  CHECK(hharmonic_dim(1, 3) == 3);
  CHECK(hharmonic_dim(2, 3) == 5);
  CHECK(hharmonic_dim(4, 2) == 2);
  CHECK(hharmonic_dim(3, 1) == 0);
  CHECK(hharmonic_eigenvalue(3, Rational(13, 2)) == Rational(-3) * (Rational(3) + Rational(13, 2) - 2));
  CHECK(hharmonic_eigenvalue(2, 5.0) == doctest::Approx(-10.0));
}

TEST_CASE("kernel dimensions agree with a floating-point rank oracle") {
  for (const auto& rs : {build_root_system(Family::A, 2, {Rational(1, 2)}),
                         build_root_system(Family::B, 2, {Rational(1), Rational(1, 3)}),
                         build_root_system(Family::Z2, 3, {Rational(0), Rational(1), Rational(2, 5)})})
    for (int n = 0; n <= 5; ++n) {
      const auto kernel = hharmonic_kernel(rs, n);
      CHECK(static_cast<long long>(kernel.size()) == hharmonic_dim(n, rs.dim()));
      CHECK(static_cast<long long>(kernel.size()) == nullity(rs, n));
      for (const auto& y : kernel) {
        CHECK(y.is_homogeneous());
        CHECK(y.degree() == n);
        CHECK(dunkl_laplacian_sym(rs, y).is_zero());
        CHECK(sphere_eigencheck(rs, y).is_zero());
      }
    }
}

TEST_CASE("linear forms are always h-harmonic") {
  const auto rs = build_root_system(Family::B, 3, {Rational(3, 2), Rational(1, 4)});
  const auto b = build_basis(rs, 1, sphere_rule_for(rs, 6));
  CHECK(b.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(dunkl_laplacian_sym(rs, Polynomial::variable(3, i)).is_zero());
}

TEST_CASE("degree two kernels of Z2^2 depend on k") {
  const auto equal = build_root_system(Family::Z2, 2, {Rational(1, 2), Rational(1, 2)});
  CHECK(hharmonic_kernel(equal, 2).size() == 2);

  // Delta_k x_i^2 = 2 + 4 k_i, so 3 x_1^2 - 2 x_2^2 is harmonic for k = (1/2, 1).
  const auto mixed = build_root_system(Family::Z2, 2, {Rational(1, 2), Rational(1)});
  const auto x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  CHECK(dunkl_laplacian_sym(mixed, x * x * Rational(3) - y * y * Rational(2)).is_zero());
  CHECK_FALSE(dunkl_laplacian_sym(mixed, x * x - y * y).is_zero());
  CHECK_FALSE(sphere_eigencheck(mixed, x * x).is_zero());
}

TEST_CASE("orthonormal bases") {
  const auto rs = build_root_system(Family::A, 2, {Rational(1)});
  const auto rule = sphere_rule_for(rs, 16);
  const auto b = build_basis(rs, 3, rule);
  REQUIRE(b.orthonormalized);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double g = integrate_sphere(
          rs, [&](std::span<const double> xi) { return b.evaluate(i, xi) * b.evaluate(j, xi); }, rule);
      CHECK(g == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10));
    }
  CHECK(b.eigenvalue == doctest::Approx(hharmonic_eigenvalue(3, rs.effective_dim())));
}

TEST_CASE("spectral expansion") {
  const auto grid = RadialGrid::ball(6.0, 6, 24);

  const auto a2 = build_root_system(Family::A, 2, {Rational(1)});
  const auto rule = sphere_rule_for(a2, 16);
  const auto bases = build_bases(a2, 3, rule);
  const RadialFunction radial(3, std::make_shared<GaussianProfile>(1.0));
  const auto c = expand(a2, field(radial), bases, grid, rule);
  for (int n = 1; n <= 3; ++n)
    for (const auto& per : c.values[n])
      for (double v : per) CHECK(std::abs(v) < 1e-8);
  CHECK(parseval_residual(a2, field(radial), c, grid, rule) < 1e-8);

  // x_1 e^{-|x|^2}, k = 0: only the degree-one modes, each proportional to r e^{-r^2}
  const auto k0 = build_root_system(Family::A, 2, {Rational(0)});
  const auto r0 = sphere_rule_for(k0, 12);
  const auto b0 = build_bases(k0, 3, r0);
  const RadialTimesPolynomial u(std::make_shared<GaussianProfile>(1.0), Polynomial::variable(3, 0));
  const auto cu = expand(k0, field(u), b0, grid, r0);
  for (int n : {0, 2, 3})
    for (const auto& per : cu.values[n])
      for (double v : per) CHECK(std::abs(v) < 1e-8);
  for (const auto& per : cu.values[1]) {
    const double ratio = per[3] / (cu.radii[3] * std::exp(-cu.radii[3] * cu.radii[3]));
    for (std::size_t q = 0; q < per.size(); ++q)
      CHECK(per[q] == doctest::Approx(ratio * cu.radii[q] * std::exp(-cu.radii[q] * cu.radii[q])).epsilon(1e-9));
  }
  CHECK(parseval_residual(k0, field(u), cu, grid, r0) < 1e-6);

  std::vector<double> xi{0.48, 0.6, 0.64};
  CHECK(reconstruct(cu, b0, 1.1, xi) == doctest::Approx(u.value(std::vector<double>{0.528, 0.66, 0.704})).epsilon(1e-6));
}

TEST_CASE("Parseval on damped polynomials") {
  const auto a2 = build_root_system(Family::A, 2, {Rational(1)});
  const auto rule = sphere_rule_for(a2, 20);
  const auto bases = build_bases(a2, 3, rule);
  for (const auto& m : damped_polynomial_corpus(a2, 3, 3, 21)) {
    const auto c = expand(a2, field(*m.f), bases, m.grid, rule);
    CHECK(parseval_residual(a2, field(*m.f), c, m.grid, rule) < 1e-5);
  }
}

TEST_CASE("mean projection and the cross-term bound") {
  const auto a2 = build_root_system(Family::A, 2, {Rational(1)});
  const auto rule = sphere_rule_for(a2, 16);
  const RadialFunction inv(3, std::make_shared<GaussianProfile>(1.2));
  const auto grid = RadialGrid::ball(6.0, 6, 16);
  CHECK(mean_projection_invariance(a2, field(inv), grid, rule) < 1e-12);
  const auto ct = cross_term_bound_check(a2, field(inv), grid, rule);
  CHECK(ct.holds);
  for (double v : ct.lhs) CHECK(std::abs(v) < 1e-12);

  for (const auto& m : damped_polynomial_corpus(a2, 3, 3, 8))
    CHECK(mean_projection_invariance(a2, field(*m.f), m.grid, rule) < 1e-8);

  const auto b2 = build_root_system(Family::B, 2, {Rational(1), Rational(2)});
  const auto rb = sphere_rule_for(b2, 20);
  for (const auto& m : damped_polynomial_corpus(b2, 4, 3, 8)) CHECK(cross_term_bound_check(b2, field(*m.f), m.grid, rb).holds);
}

TEST_CASE("inexact roots are rejected by the exact kernels") {
  const auto i3 = build_root_system(Family::I2, 2, {Rational(1)}, 0, 3);
  CHECK_THROWS_AS(hharmonic_kernel(i3, 2), InvalidInput);
}
