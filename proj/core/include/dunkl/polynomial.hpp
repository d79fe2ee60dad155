#pragma once

// Exact multivariate polynomials with rational coefficients.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dunkl/rational.hpp"

namespace dunkl {

using Exponent = std::vector<int>;

class Polynomial {
 public:
  using Terms = std::map<Exponent, Rational>;

  Polynomial() = default;
  explicit Polynomial(int dim) : dim_(dim) {}

  static Polynomial constant(int dim, const Rational& c);
  static Polynomial variable(int dim, int i);
  static Polynomial monomial(const Exponent& e, const Rational& c = 1);
  /// sum_j c_j x_j
  static Polynomial linear(const RationalVector& c);
  /// |x|^2
  static Polynomial norm_squared(int dim);

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Exponent& e) const;

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  Polynomial derivative(int i) const;
  Polynomial homogeneous_component(int n) const;

  /// p(M x) for a rational N x N matrix given by rows.
  Polynomial compose_linear(const std::vector<RationalVector>& rows) const;

  /// Quotient of p by the linear form sum_j c_j x_j. Throws InvariantBreach
  /// when the division leaves a remainder.
  Polynomial divide_linear(const RationalVector& c) const;

  double evaluate(std::span<const double> x) const;
  Rational evaluate(const RationalVector& x) const;

  std::string to_string() const;

 private:
  int dim_ = 0;
  Terms terms_;
};

Polynomial pow(const Polynomial& p, int e);

/// All exponent vectors of total degree n in `dim` variables, in a fixed
/// (lexicographically decreasing) order.
std::vector<Exponent> monomials_of_degree(int dim, int n);

nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j, int dim);

/// Floating-point snapshot of a polynomial for fast repeated evaluation.
class CompiledPolynomial {
 public:
  CompiledPolynomial() = default;
  explicit CompiledPolynomial(const Polynomial& p);

  int dim() const { return dim_; }
  double operator()(std::span<const double> x) const;

 private:
  int dim_ = 0;
  int max_exp_ = 0;
  std::vector<double> coef_;
  std::vector<std::uint8_t> exps_;  // row-major, dim_ entries per term
};

}  // namespace dunkl
