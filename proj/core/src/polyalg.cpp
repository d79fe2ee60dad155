#include "dunkl/polyalg.hpp"

#include <cmath>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

void require_exact(const Root& alpha) {
  if (!alpha.exact())
    throw InvalidInput("symbolic Dunkl calculus needs roots with rational directions");
}

bool is_square(const mpz_class& z) { return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0; }

// <grad p, v>
Polynomial directional(const Polynomial& p, const RationalVector& v) {
  Polynomial out(p.dim());
  for (int j = 0; j < p.dim(); ++j)
    if (v[j] != 0) out += p.derivative(j) * v[j];
  return out;
}

}  // namespace

double SurdPolynomial::evaluate(std::span<const double> x) const {
  return poly.evaluate(x) * std::sqrt(radicand.get_d());
}

Polynomial reflect_polynomial(const Polynomial& p, const Root& alpha) {
  require_exact(alpha);
  return p.compose_linear(alpha.reflection_matrix());
}

Polynomial rational_divided_difference(const Polynomial& p, const Root& alpha) {
  require_exact(alpha);
  Polynomial diff = p - reflect_polynomial(p, alpha);
  if (diff.is_zero()) return Polynomial(p.dim());
  return diff.divide_linear(alpha.direction);
}

SurdPolynomial divided_difference(const Polynomial& p, const Root& alpha) {
  // <alpha,x> = s <v,x> with s^2 = 2/|v|^2, so the quotient is q / s.
  SurdPolynomial out{rational_divided_difference(p, alpha), alpha.direction_norm2() / 2};
  const Rational r = out.radicand;
  if (is_square(r.get_num()) && is_square(r.get_den())) {
    Rational root(sqrt(r.get_num()), sqrt(r.get_den()));
    out.poly *= root;
    out.radicand = 1;
  }
  return out;
}

std::vector<Polynomial> dunkl_gradient_sym(const RootSystem& rs, const Polynomial& p) {
  const int n = rs.dim();
  std::vector<Polynomial> grad;
  grad.reserve(n);
  for (int i = 0; i < n; ++i) grad.push_back(p.derivative(i));
  auto pos = rs.positive_roots();
  for (std::size_t a = 0; a < pos.size(); ++a) {
    const Rational& k = rs.multiplicity(a);
    if (k == 0) continue;
    Polynomial q = rational_divided_difference(p, pos[a]);
    if (q.is_zero()) continue;
    for (int i = 0; i < n; ++i)
      if (pos[a].direction[i] != 0) grad[i] += q * (k * pos[a].direction[i]);
  }
  return grad;
}

Polynomial dunkl_apply(const RootSystem& rs, int i, const Polynomial& p) {
  if (i < 0 || i >= rs.dim()) throw InvalidInput("coordinate index out of range");
  if (!rs.exact()) throw InvalidInput("symbolic Dunkl calculus needs roots with rational directions");
  Polynomial out = p.derivative(i);
  auto pos = rs.positive_roots();
  for (std::size_t a = 0; a < pos.size(); ++a) {
    const Rational& k = rs.multiplicity(a);
    if (k == 0 || pos[a].direction.at(i) == 0) continue;
    out += rational_divided_difference(p, pos[a]) * (k * pos[a].direction[i]);
  }
  return out;
}

Polynomial dunkl_laplacian_via_operators(const RootSystem& rs, const Polynomial& p) {
  Polynomial out(p.dim());
  const auto grad = dunkl_gradient_sym(rs, p);
  for (int i = 0; i < rs.dim(); ++i) out += dunkl_apply(rs, i, grad[i]);
  return out;
}

Polynomial dunkl_laplacian_via_formula(const RootSystem& rs, const Polynomial& p) {
  const int n = p.dim();
  Polynomial out(n);
  for (int i = 0; i < n; ++i) out += p.derivative(i).derivative(i);
  auto pos = rs.positive_roots();
  for (std::size_t a = 0; a < pos.size(); ++a) {
    const Rational& k = rs.multiplicity(a);
    if (k == 0) continue;
    const Root& alpha = pos[a];
    require_exact(alpha);
    // <grad p,alpha>/<alpha,x> - (p - p o sigma)/<alpha,x>^2
    //   = [s^2 <v,x> <grad p,v> - (p - p o sigma)] / (s^2 <v,x>^2)
    const Rational s2 = Rational(2) / alpha.direction_norm2();
    const Polynomial lin = Polynomial::linear(alpha.direction);
    Polynomial num = lin * directional(p, alpha.direction) * s2 - (p - reflect_polynomial(p, alpha));
    if (num.is_zero()) continue;
    Polynomial q = num.divide_linear(alpha.direction).divide_linear(alpha.direction);
    out += q * (2 * k / s2);
  }
  return out;
}

Polynomial dunkl_laplacian_sym(const RootSystem& rs, const Polynomial& p) {
  Polynomial a = dunkl_laplacian_via_operators(rs, p);
  Polynomial b = dunkl_laplacian_via_formula(rs, p);
  if (!(a == b)) throw InvariantBreach("the two Dunkl Laplacian formulas disagree on " + p.to_string());
  return a;
}

bool is_invariant(const RootSystem& rs, const Polynomial& p) {
  for (const auto& alpha : rs.positive_roots())
    if (!(reflect_polynomial(p, alpha) == p)) return false;
  return true;
}

LeibnizReport leibniz_check(const RootSystem& rs, const Polynomial& u, const Polynomial& v, int i) {
  LeibnizReport rep;
  const Polynomial uv = u * v;
  const Polynomial tuv = dunkl_apply(rs, i, uv);
  const Polynomial tu = dunkl_apply(rs, i, u);
  const Polynomial tv = dunkl_apply(rs, i, v);
  Polynomial product = v * tu + u * tv;

  // Correction sum_alpha k alpha_i (u - u o sigma)(v - v o sigma) / <alpha,x>.
  // alpha_i / <alpha,x> = v_i / <v,x>; one factor is divided exactly, the
  // other is kept as a difference.
  Polynomial correction(u.dim());
  auto pos = rs.positive_roots();
  for (std::size_t a = 0; a < pos.size(); ++a) {
    const Rational& k = rs.multiplicity(a);
    if (k == 0 || pos[a].direction.at(i) == 0) continue;
    Polynomial du = rational_divided_difference(u, pos[a]);
    if (du.is_zero()) continue;
    Polynomial dv = v - reflect_polynomial(v, pos[a]);
    correction += du * dv * (k * pos[a].direction[i]);
  }
  rep.general_residual = tuv - (product - correction);
  rep.short_residual = tuv - product;
  rep.short_rule_applies = is_invariant(rs, u) || is_invariant(rs, v);
  return rep;
}

CommutatorReport commutativity_check(const RootSystem& rs, int i, int j, const Polynomial& p) {
  CommutatorReport rep;
  rep.difference = dunkl_apply(rs, i, dunkl_apply(rs, j, p)) - dunkl_apply(rs, j, dunkl_apply(rs, i, p));
  rep.commute = rep.difference.is_zero();
  return rep;
}

bool positive_subsystem_independence(const RootSystem& rs, const std::vector<bool>& flip, const Polynomial& p,
                                     int i) {
  const RootSystem alt = rs.with_flipped(flip);
  return dunkl_apply(rs, i, p) == dunkl_apply(alt, i, p);
}

}  // namespace dunkl
