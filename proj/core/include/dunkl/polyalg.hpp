#pragma once

// Symbolic Dunkl calculus on rational polynomials.
//
// Every root used here must have a rational direction v (Root::exact()).
// With alpha = s v, s = sqrt(2/|v|^2), the ratio alpha_i / <alpha,x> equals
// v_i / <v,x>, so T_i and Delta_k map rational polynomials to rational
// polynomials. Only the bare divided difference keeps a factor 1/s.

#include <vector>

#include "dunkl/polynomial.hpp"
#include "dunkl/reflection.hpp"

namespace dunkl {

/// poly * sqrt(radicand), radicand a positive rational.
struct SurdPolynomial {
  Polynomial poly;
  Rational radicand = 1;

  bool rational() const { return radicand == 1; }
  double evaluate(std::span<const double> x) const;
};

/// p o sigma_alpha, exactly.
Polynomial reflect_polynomial(const Polynomial& p, const Root& alpha);

/// (p - p o sigma_alpha) / <v,x>, the rational part of the divided difference.
Polynomial rational_divided_difference(const Polynomial& p, const Root& alpha);

/// (p(x) - p(sigma_alpha x)) / <alpha,x>.
SurdPolynomial divided_difference(const Polynomial& p, const Root& alpha);

/// T_i p.
Polynomial dunkl_apply(const RootSystem& rs, int i, const Polynomial& p);

/// (T_1 p, ..., T_N p) sharing the divided differences across coordinates.
std::vector<Polynomial> dunkl_gradient_sym(const RootSystem& rs, const Polynomial& p);

/// Delta_k p via sum_i T_i^2 p.
Polynomial dunkl_laplacian_via_operators(const RootSystem& rs, const Polynomial& p);

/// Delta_k p via the gradient / difference-quotient formula.
Polynomial dunkl_laplacian_via_formula(const RootSystem& rs, const Polynomial& p);

/// Delta_k p computed both ways; throws InvariantBreach if they differ.
Polynomial dunkl_laplacian_sym(const RootSystem& rs, const Polynomial& p);

/// p o g == p for every reflection (hence for the whole group).
bool is_invariant(const RootSystem& rs, const Polynomial& p);

struct LeibnizReport {
  Polynomial general_residual;
  Polynomial short_residual;  // T_i(uv) - u T_i v - v T_i u
  bool short_rule_applies = false;  // u or v is G-invariant
  bool ok() const { return general_residual.is_zero() && (!short_rule_applies || short_residual.is_zero()); }
};

LeibnizReport leibniz_check(const RootSystem& rs, const Polynomial& u, const Polynomial& v, int i);

struct CommutatorReport {
  bool commute = true;
  Polynomial difference;  // T_i T_j p - T_j T_i p
};

CommutatorReport commutativity_check(const RootSystem& rs, int i, int j, const Polynomial& p);

/// T_i p agrees under rs and under rs with the flagged positive roots negated.
bool positive_subsystem_independence(const RootSystem& rs, const std::vector<bool>& flip, const Polynomial& p,
                                     int i);

}  // namespace dunkl
