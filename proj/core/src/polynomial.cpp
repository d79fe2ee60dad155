#include "dunkl/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dunkl/errors.hpp"

namespace dunkl {

Polynomial Polynomial::constant(int dim, const Rational& c) {
  Polynomial p(dim);
  p.add_term(Exponent(dim, 0), c);
  return p;
}

Polynomial Polynomial::variable(int dim, int i) {
  Exponent e(dim, 0);
  e.at(i) = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::linear(const RationalVector& c) {
  const int n = static_cast<int>(c.size());
  Polynomial p(n);
  for (int i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = 1;
    p.add_term(e, c[i]);
  }
  return p;
}

Polynomial Polynomial::norm_squared(int dim) {
  Polynomial p(dim);
  for (int i = 0; i < dim; ++i) {
    Exponent e(dim, 0);
    e[i] = 2;
    p.add_term(e, 1);
  }
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

bool Polynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  if (dim_ == 0 && terms_.empty()) dim_ = static_cast<int>(e.size());
  if (static_cast<int>(e.size()) != dim_) throw InvalidInput("exponent length does not match polynomial dimension");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    it->second.canonicalize();
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (dim_ == 0) dim_ = o.dim_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (dim_ == 0) dim_ = o.dim_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [e, v] : p.terms_) v = -v;
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial p(std::max(a.dim_, b.dim_));
  Exponent e(p.dim_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < p.dim_; ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

Polynomial pow(const Polynomial& p, int e) {
  Polynomial r = Polynomial::constant(p.dim(), 1);
  Polynomial base = p;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

Polynomial Polynomial::derivative(int i) const {
  Polynomial p(dim_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent f = e;
    f[i] -= 1;
    p.add_term(f, c * e[i]);
  }
  return p;
}

Polynomial Polynomial::homogeneous_component(int n) const {
  Polynomial p(dim_);
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    if (s == n) p.add_term(e, c);
  }
  return p;
}

Polynomial Polynomial::compose_linear(const std::vector<RationalVector>& rows) const {
  const int n = dim_;
  if (static_cast<int>(rows.size()) != n) throw InvalidInput("substitution matrix has wrong size");
  std::vector<std::vector<Polynomial>> powers(n);
  for (int i = 0; i < n; ++i) powers[i].push_back(Polynomial::constant(n, 1));
  auto power = [&](int i, int k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.size() == 1) cache.push_back(Polynomial::linear(rows[i]));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * cache[1]);
    return cache[k];
  };

  Polynomial out(n);
  for (const auto& [e, c] : terms_) {
    Polynomial t = Polynomial::constant(n, c);
    for (int i = 0; i < n; ++i)
      if (e[i] > 0) t = t * power(i, e[i]);
    out += t;
  }
  return out;
}

Polynomial Polynomial::divide_linear(const RationalVector& c) const {
  const int n = dim_;
  int pivot = -1;
  for (int j = 0; j < n; ++j)
    if (c[j] != 0) {
      pivot = j;
      break;
    }
  if (pivot < 0) throw InvalidInput("division by the zero linear form");

  Polynomial rem = *this;
  Polynomial q(n);
  while (!rem.is_zero()) {
    // Term with the largest pivot exponent; ties broken by map order.
    auto best = rem.terms_.begin();
    for (auto it = rem.terms_.begin(); it != rem.terms_.end(); ++it)
      if (it->first[pivot] > best->first[pivot]) best = it;
    if (best->first[pivot] == 0) throw InvariantBreach("polynomial is not divisible by the linear form");
    Exponent e = best->first;
    e[pivot] -= 1;
    const Rational coef = best->second / c[pivot];
    q.add_term(e, coef);
    for (int j = 0; j < n; ++j) {
      if (c[j] == 0) continue;
      Exponent f = e;
      f[j] += 1;
      rem.add_term(f, -coef * c[j]);
    }
  }
  return q;
}

double Polynomial::evaluate(std::span<const double> x) const {
  double s = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (int i = 0; i < dim_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

Rational Polynomial::evaluate(const RationalVector& x) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < dim_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    bool any = false;
    for (int v : e) any = any || v > 0;
    if (a != 1 || !any) os << dunkl::to_string(a);
    for (int i = 0; i < dim_; ++i) {
      if (e[i] == 0) continue;
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

std::vector<Exponent> monomials_of_degree(int dim, int n) {
  std::vector<Exponent> out;
  Exponent e(dim, 0);
  // Recursive fill of the first coordinate downwards.
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == dim - 1) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
  };
  if (dim == 0) return out;
  rec(rec, 0, n);
  return out;
}

nlohmann::json to_json(const Polynomial& p) {
  auto arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json t;
    t["exponents"] = e;
    const mpz_class num = c.get_num(), den = c.get_den();
    if (num.fits_slong_p()) t["numerator"] = num.get_si();
    else t["numerator"] = num.get_str();
    if (den.fits_slong_p()) t["denominator"] = den.get_si();
    else t["denominator"] = den.get_str();
    arr.push_back(std::move(t));
  }
  return arr;
}

Polynomial polynomial_from_json(const nlohmann::json& j, int dim) {
  Polynomial p(dim);
  auto big = [](const nlohmann::json& v) {
    return v.is_string() ? mpz_class(v.get<std::string>()) : mpz_class(v.get<long>());
  };
  for (const auto& t : j) {
    Rational c(big(t.at("numerator")), big(t.at("denominator")));
    c.canonicalize();
    p.add_term(t.at("exponents").get<Exponent>(), c);
  }
  return p;
}

CompiledPolynomial::CompiledPolynomial(const Polynomial& p) : dim_(p.dim()) {
  for (const auto& [e, c] : p.terms()) {
    coef_.push_back(c.get_d());
    for (int v : e) {
      if (v > 255) throw InvalidInput("exponent too large for compiled evaluation");
      exps_.push_back(static_cast<std::uint8_t>(v));
      max_exp_ = std::max(max_exp_, v);
    }
  }
}

double CompiledPolynomial::operator()(std::span<const double> x) const {
  // Power table: pw[i * (max_exp_+1) + k] = x_i^k.
  constexpr int kStack = 8 * 16;
  double stack[kStack];
  std::vector<double> heap;
  const int stride = max_exp_ + 1;
  double* pw = stack;
  if (dim_ * stride > kStack) {
    heap.resize(static_cast<std::size_t>(dim_ * stride));
    pw = heap.data();
  }
  for (int i = 0; i < dim_; ++i) {
    pw[i * stride] = 1.0;
    for (int k = 1; k <= max_exp_; ++k) pw[i * stride + k] = pw[i * stride + k - 1] * x[i];
  }
  double s = 0.0;
  const std::uint8_t* e = exps_.data();
  for (double c : coef_) {
    double t = c;
    for (int i = 0; i < dim_; ++i) t *= pw[i * stride + e[i]];
    s += t;
    e += dim_;
  }
  return s;
}

}  // namespace dunkl
