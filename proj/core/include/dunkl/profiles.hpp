#pragma once

// Radial profiles u(r) with first and second derivatives, and exact
// integration of sums of real powers of r.

#include <algorithm>
#include <limits>
#include <memory>
#include <vector>

namespace dunkl {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

class RadialProfile {
 public:
  virtual ~RadialProfile() = default;
  virtual double value(double r) const = 0;
  virtual double d1(double r) const = 0;
  virtual double d2(double r) const = 0;
  /// Radii where the second derivative may jump.
  virtual std::vector<double> kinks() const { return {}; }
  /// The profile vanishes on [0, inner_radius()) and beyond outer_radius().
  virtual double inner_radius() const { return 0.0; }
  virtual double outer_radius() const { return kInfinity; }
};

using ProfilePtr = std::shared_ptr<const RadialProfile>;

/// sum_i c_i r^{s_i} for real exponents.
class PowerSum {
 public:
  struct Term {
    double coef;
    double exponent;
  };

  PowerSum() = default;
  PowerSum(double coef, double exponent) { add(coef, exponent); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c r^s; terms whose exponents agree to 1e-13 are merged.
  void add(double coef, double exponent);

  double operator()(double r) const;
  PowerSum derivative() const;
  /// r^e times this.
  PowerSum shifted(double e) const;
  /// |this|^p for a single-term sum (p real).
  PowerSum abs_pow(double p) const;

  PowerSum& operator+=(const PowerSum& o);
  PowerSum& operator*=(double c);
  friend PowerSum operator+(PowerSum a, const PowerSum& b) { return a += b; }
  friend PowerSum operator*(PowerSum a, double c) { return a *= c; }
  friend PowerSum operator*(const PowerSum& a, const PowerSum& b);

  /// Exact integral over [a, b]; b may be infinite, a may be 0. Throws
  /// Divergence if a term is not integrable there.
  double integrate(double a, double b) const;

 private:
  std::vector<Term> terms_;
};

/// Profile given by a PowerSum on each interval of a partition of [0, inf).
class PiecewisePowerProfile final : public RadialProfile {
 public:
  struct Piece {
    double a;
    double b;
    PowerSum u;
  };

  explicit PiecewisePowerProfile(std::vector<Piece> pieces);

  double value(double r) const override;
  double d1(double r) const override;
  double d2(double r) const override;
  std::vector<double> kinks() const override;
  double inner_radius() const override;
  double outer_radius() const override;

  const std::vector<Piece>& pieces() const { return pieces_; }
  const PowerSum& derivative1(std::size_t i) const { return du_[i]; }
  const PowerSum& derivative2(std::size_t i) const { return ddu_[i]; }

  /// sum over pieces of int_a^b F_i(r) dr with F_i built from the piece data.
  template <class F>
  double integrate(F&& build) const {
    double s = 0.0;
    for (std::size_t i = 0; i < pieces_.size(); ++i) s += build(i).integrate(pieces_[i].a, pieces_[i].b);
    return s;
  }

 private:
  std::size_t locate(double r) const;
  std::vector<Piece> pieces_;
  std::vector<PowerSum> du_, ddu_;
};

/// Polynomial in r of degree 5 on [a, b] matching value, first and second
/// derivative at both ends, as a PowerSum with integer exponents.
PowerSum quintic_join(double a, double b, const double left[3], const double right[3]);

/// exp(-(r/scale)^2)
class GaussianProfile final : public RadialProfile {
 public:
  explicit GaussianProfile(double scale = 1.0) : scale_(scale) {}
  double value(double r) const override;
  double d1(double r) const override;
  double d2(double r) const override;

 private:
  double scale_;
};

/// (1 - ((r - center)/width)^2)^3 for |r - center| < width, else 0. C^2.
class AnnularBumpProfile final : public RadialProfile {
 public:
  AnnularBumpProfile(double center, double width) : center_(center), width_(width) {}
  double value(double r) const override;
  double d1(double r) const override;
  double d2(double r) const override;
  std::vector<double> kinks() const override;
  double inner_radius() const override { return std::max(0.0, center_ - width_); }
  double outer_radius() const override { return center_ + width_; }
  double inner() const { return center_ - width_; }
  double outer() const { return center_ + width_; }

 private:
  double center_, width_;
};

/// Natural cubic spline through (x_i, y_i); linear extrapolation outside.
class CubicSpline final : public RadialProfile {
 public:
  CubicSpline(std::vector<double> x, std::vector<double> y);
  double value(double r) const override;
  double d1(double r) const override;
  double d2(double r) const override;

 private:
  std::size_t locate(double r) const;
  std::vector<double> x_, y_, m_;  // m_ = second derivatives at knots
};

}  // namespace dunkl
