#include "dunkl/profiles.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/errors.hpp"

namespace dunkl {

// ---------------------------------------------------------------------------
// PowerSum

void PowerSum::add(double coef, double exponent) {
  if (coef == 0.0) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (std::abs(it->exponent - exponent) <= 1e-13) {
      it->coef += coef;
      if (it->coef == 0.0) terms_.erase(it);
      return;
    }
  }
  terms_.push_back({coef, exponent});
}

double PowerSum::operator()(double r) const {
  double s = 0.0;
  for (const auto& t : terms_) s += t.coef * (t.exponent == 0.0 ? 1.0 : std::pow(r, t.exponent));
  return s;
}

PowerSum PowerSum::derivative() const {
  PowerSum d;
  for (const auto& t : terms_)
    if (t.exponent != 0.0) d.add(t.coef * t.exponent, t.exponent - 1.0);
  return d;
}

PowerSum PowerSum::shifted(double e) const {
  PowerSum d;
  for (const auto& t : terms_) d.add(t.coef, t.exponent + e);
  return d;
}

PowerSum PowerSum::abs_pow(double p) const {
  if (terms_.empty()) return {};
  if (terms_.size() != 1) throw InvalidInput("abs_pow needs a single power");
  return PowerSum(std::pow(std::abs(terms_[0].coef), p), terms_[0].exponent * p);
}

PowerSum& PowerSum::operator+=(const PowerSum& o) {
  for (const auto& t : o.terms_) add(t.coef, t.exponent);
  return *this;
}

PowerSum& PowerSum::operator*=(double c) {
  if (c == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

PowerSum operator*(const PowerSum& a, const PowerSum& b) {
  PowerSum out;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) out.add(s.coef * t.coef, s.exponent + t.exponent);
  return out;
}

double PowerSum::integrate(double a, double b) const {
  if (!(b > a)) return 0.0;
  double total = 0.0;
  for (const auto& t : terms_) {
    const double e = t.exponent + 1.0;
    if (std::abs(e) < 1e-14) {
      if (a == 0.0 || std::isinf(b)) throw Divergence("logarithmically divergent power integral");
      total += t.coef * std::log(b / a);
      continue;
    }
    if (std::isinf(b) && e >= 0.0) throw Divergence("power integral diverges at infinity");
    if (a == 0.0 && e <= 0.0) throw Divergence("power integral diverges at the origin");
    double v;
    if (a == 0.0) {
      v = std::pow(b, e) / e;
    } else if (std::isinf(b)) {
      v = -std::pow(a, e) / e;
    } else {
      // a^e (exp(e log(b/a)) - 1) / e, accurate when e is small.
      v = std::pow(a, e) * std::expm1(e * std::log(b / a)) / e;
    }
    total += t.coef * v;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Piecewise profiles

PiecewisePowerProfile::PiecewisePowerProfile(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty() || pieces_.front().a != 0.0) throw InvalidInput("pieces must start at r = 0");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (!(pieces_[i].b > pieces_[i].a)) throw InvalidInput("empty profile piece");
    if (i + 1 < pieces_.size() && pieces_[i + 1].a != pieces_[i].b) throw InvalidInput("profile pieces must be contiguous");
    du_.push_back(pieces_[i].u.derivative());
    ddu_.push_back(du_.back().derivative());
  }
  if (!std::isinf(pieces_.back().b)) throw InvalidInput("last piece must extend to infinity");
}

std::size_t PiecewisePowerProfile::locate(double r) const {
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    if (r < pieces_[i].b) return i;
  return pieces_.size() - 1;
}

double PiecewisePowerProfile::inner_radius() const {
  std::size_t i = 0;
  while (i + 1 < pieces_.size() && pieces_[i].u.is_zero()) ++i;
  return pieces_[i].a;
}

double PiecewisePowerProfile::outer_radius() const {
  std::size_t i = pieces_.size();
  while (i > 1 && pieces_[i - 1].u.is_zero()) --i;
  return pieces_[i - 1].b;
}

double PiecewisePowerProfile::value(double r) const { return pieces_[locate(r)].u(r); }
double PiecewisePowerProfile::d1(double r) const { return du_[locate(r)](r); }
double PiecewisePowerProfile::d2(double r) const { return ddu_[locate(r)](r); }

std::vector<double> PiecewisePowerProfile::kinks() const {
  std::vector<double> k;
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) k.push_back(pieces_[i].b);
  return k;
}

PowerSum quintic_join(double a, double b, const double left[3], const double right[3]) {
  const double L = b - a;
  double c[6];
  c[0] = left[0];
  c[1] = left[1] * L;
  c[2] = 0.5 * left[2] * L * L;
  const double A = right[0] - c[0] - c[1] - c[2];
  const double B = right[1] * L - c[1] - 2.0 * c[2];
  const double C = right[2] * L * L - 2.0 * c[2];
  c[3] = 10.0 * A - 4.0 * B + 0.5 * C;
  c[4] = -15.0 * A + 7.0 * B - C;
  c[5] = 6.0 * A - 3.0 * B + 0.5 * C;

  // sum_j c_j ((r - a)/L)^j expanded in powers of r.
  double coef[6] = {0, 0, 0, 0, 0, 0};
  for (int j = 0; j < 6; ++j) {
    const double cj = c[j] / std::pow(L, j);
    double binom = 1.0;
    for (int m = 0; m <= j; ++m) {
      if (m > 0) binom = binom * (j - m + 1) / m;
      coef[m] += cj * binom * std::pow(-a, j - m);
    }
  }
  PowerSum p;
  for (int m = 0; m < 6; ++m) p.add(coef[m], m);
  return p;
}

// ---------------------------------------------------------------------------
// Simple profiles

double GaussianProfile::value(double r) const {
  const double t = r / scale_;
  return std::exp(-t * t);
}

double GaussianProfile::d1(double r) const { return -2.0 * r / (scale_ * scale_) * value(r); }

double GaussianProfile::d2(double r) const {
  const double s2 = scale_ * scale_;
  return (4.0 * r * r / (s2 * s2) - 2.0 / s2) * value(r);
}

double AnnularBumpProfile::value(double r) const {
  const double t = (r - center_) / width_;
  if (std::abs(t) >= 1.0) return 0.0;
  const double w = 1.0 - t * t;
  return w * w * w;
}

double AnnularBumpProfile::d1(double r) const {
  const double t = (r - center_) / width_;
  if (std::abs(t) >= 1.0) return 0.0;
  const double w = 1.0 - t * t;
  return -6.0 * t * w * w / width_;
}

double AnnularBumpProfile::d2(double r) const {
  const double t = (r - center_) / width_;
  if (std::abs(t) >= 1.0) return 0.0;
  const double w = 1.0 - t * t;
  return (24.0 * t * t * w - 6.0 * w * w) / (width_ * width_);
}

std::vector<double> AnnularBumpProfile::kinks() const {
  std::vector<double> k;
  if (center_ - width_ > 0.0) k.push_back(center_ - width_);
  k.push_back(center_ + width_);
  return k;
}

// ---------------------------------------------------------------------------
// Cubic spline

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 2 || y_.size() != n) throw InvalidInput("spline needs at least two matching knots");
  for (std::size_t i = 1; i < n; ++i)
    if (!(x_[i] > x_[i - 1])) throw InvalidInput("spline knots must increase");
  m_.assign(n, 0.0);
  if (n == 2) return;
  // Tridiagonal system for interior second derivatives (Thomas algorithm).
  std::vector<double> diag(n, 0.0), upper(n, 0.0), rhs(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h0 = x_[i] - x_[i - 1], h1 = x_[i + 1] - x_[i];
    diag[i] = 2.0 * (h0 + h1);
    upper[i] = h1;
    rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
  }
  for (std::size_t i = 2; i + 1 < n; ++i) {
    const double lower = x_[i] - x_[i - 1];
    const double f = lower / diag[i - 1];
    diag[i] -= f * upper[i - 1];
    rhs[i] -= f * rhs[i - 1];
  }
  for (std::size_t i = n - 2; i >= 1; --i) {
    m_[i] = (rhs[i] - (i + 2 < n ? upper[i] * m_[i + 1] : 0.0)) / diag[i];
    if (i == 1) break;
  }
}

std::size_t CubicSpline::locate(double r) const {
  auto it = std::upper_bound(x_.begin(), x_.end(), r);
  std::size_t i = it == x_.begin() ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
  return std::min(i, x_.size() - 2);
}

double CubicSpline::value(double r) const {
  const std::size_t i = locate(r);
  const double h = x_[i + 1] - x_[i];
  if (r < x_.front() || r > x_.back()) {
    const double edge = r < x_.front() ? x_.front() : x_.back();
    const std::size_t j = r < x_.front() ? 0 : x_.size() - 1;
    return y_[j] + d1(edge) * (r - edge);
  }
  const double a = (x_[i + 1] - r) / h, b = (r - x_[i]) / h;
  return a * y_[i] + b * y_[i + 1] + ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
}

double CubicSpline::d1(double r) const {
  const double rc = std::clamp(r, x_.front(), x_.back());
  const std::size_t i = locate(rc);
  const double h = x_[i + 1] - x_[i];
  const double a = (x_[i + 1] - rc) / h, b = (rc - x_[i]) / h;
  return (y_[i + 1] - y_[i]) / h - (3.0 * a * a - 1.0) * h * m_[i] / 6.0 + (3.0 * b * b - 1.0) * h * m_[i + 1] / 6.0;
}

double CubicSpline::d2(double r) const {
  if (r < x_.front() || r > x_.back()) return 0.0;
  const std::size_t i = locate(r);
  const double h = x_[i + 1] - x_[i];
  const double a = (x_[i + 1] - r) / h, b = (r - x_[i]) / h;
  return a * m_[i] + b * m_[i + 1];
}

}  // namespace dunkl
