#include "dunkl/reflection.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>

#include "dunkl/errors.hpp"

namespace dunkl {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

Family parse_family(std::string_view name) {
  if (name == "A") return Family::A;
  if (name == "B") return Family::B;
  if (name == "Z2") return Family::Z2;
  if (name == "I2") return Family::I2;
  throw InvalidInput("unknown root system family: " + std::string(name));
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::Z2: return "Z2";
    case Family::I2: return "I2";
  }
  return "?";
}

int orbit_count(Family family, int rank, int m) {
  switch (family) {
    case Family::A: return 1;
    case Family::B: return rank == 1 ? 1 : 2;
    case Family::Z2: return rank;
    case Family::I2: return (m % 2 == 1) ? 1 : 2;
  }
  return 0;
}

int natural_dimension(Family family, int rank) {
  switch (family) {
    case Family::A: return rank + 1;
    case Family::I2: return 2;
    default: return rank;
  }
}

// ---------------------------------------------------------------------------
// Root

double Root::pairing(std::span<const double> x) const { return dot(vector, x); }

Rational Root::direction_norm2() const {
  Rational s = 0;
  for (const auto& c : direction) s += c * c;
  return s;
}

std::vector<RationalVector> Root::reflection_matrix() const {
  if (!exact()) throw InvalidInput("root has no rational direction; exact reflection unavailable");
  const int n = static_cast<int>(direction.size());
  Rational scale = Rational(2) / direction_norm2();
  std::vector<RationalVector> m(n, RationalVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m[i][j] = (i == j ? Rational(1) : Rational(0)) - scale * direction[i] * direction[j];
    }
  return m;
}

Root Root::negated() const {
  Root r = *this;
  for (auto& v : r.vector) v = -v;
  for (auto& c : r.direction) c = -c;
  return r;
}

namespace {

Root make_root(int dim, const RationalVector& dir, int orbit) {
  Root r;
  r.direction = dir;
  r.direction.resize(dim, Rational(0));
  r.orbit = orbit;
  double n2 = r.direction_norm2().get_d();
  double s = std::sqrt(2.0 / n2);
  r.vector.resize(dim);
  for (int i = 0; i < dim; ++i) r.vector[i] = s * r.direction[i].get_d();
  return r;
}

RationalVector unit(int dim, int i, int sign = 1) {
  RationalVector v(dim, Rational(0));
  v[i] = sign;
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// RootSystem

RootSystem::RootSystem(RootSystemSpec spec, std::vector<Root> positive)
    : spec_(std::move(spec)), positive_(std::move(positive)) {
  gamma_ = 0.0;
  for (const auto& r : positive_) {
    k_exact_.push_back(spec_.multiplicities.at(r.orbit));
    k_.push_back(k_exact_.back().get_d());
  }
  Rational g = 0;
  for (const auto& k : k_exact_) g += k;
  gamma_ = g.get_d();
}

std::vector<Root> RootSystem::roots() const {
  std::vector<Root> all(positive_.begin(), positive_.end());
  for (const auto& r : positive_) all.push_back(r.negated());
  return all;
}

MultiplicitySummary RootSystem::summary() const {
  Rational g = 0;
  for (const auto& k : k_exact_) g += k;
  return {g, 2 * g};
}

bool RootSystem::exact() const {
  return std::all_of(positive_.begin(), positive_.end(), [](const Root& r) { return r.exact(); });
}

bool RootSystem::trivial_multiplicity() const {
  return std::all_of(k_exact_.begin(), k_exact_.end(), [](const Rational& k) { return k == 0; });
}

RootSystem RootSystem::with_flipped(const std::vector<bool>& flip) const {
  if (flip.size() != positive_.size()) throw InvalidInput("flip mask must have one entry per positive root");
  std::vector<Root> pos = positive_;
  for (std::size_t i = 0; i < pos.size(); ++i)
    if (flip[i]) pos[i] = pos[i].negated();
  return RootSystem(spec_, std::move(pos));
}

std::optional<std::size_t> RootSystem::find_root(std::span<const double> v, double tol) const {
  auto all = roots();
  for (std::size_t i = 0; i < all.size(); ++i) {
    double d = 0.0;
    for (int c = 0; c < dim(); ++c) d = std::max(d, std::abs(all[i].vector[c] - v[c]));
    if (d <= tol) return i;
  }
  return std::nullopt;
}

RootSystem build_root_system(const RootSystemSpec& in) {
  RootSystemSpec spec = in;
  if (spec.family == Family::I2) {
    if (spec.m < 1) throw InvalidInput("I2(m) requires m >= 1");
    if (spec.rank != 2) throw InvalidInput("I2(m) has rank 2");
  }
  if (spec.rank < 1) throw InvalidInput("rank must be at least 1");
  const int natural = natural_dimension(spec.family, spec.rank);
  if (spec.dim == 0) spec.dim = natural;
  if (spec.dim < natural) throw InvalidInput("ambient dimension smaller than the root system needs");
  if (spec.dim > kMaxDim) throw InvalidInput("ambient dimension exceeds " + std::to_string(kMaxDim));
  const int orbits = orbit_count(spec.family, spec.rank, spec.m);
  if (static_cast<int>(spec.multiplicities.size()) != orbits)
    throw InvalidInput("expected " + std::to_string(orbits) + " multiplicities for " + family_name(spec.family) +
                       ", got " + std::to_string(spec.multiplicities.size()));
  for (const auto& k : spec.multiplicities)
    if (k < 0) throw InvalidInput("multiplicities must be nonnegative");

  const int N = spec.dim;
  const int n = spec.rank;
  std::vector<Root> pos;
  switch (spec.family) {
    case Family::A:
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          RationalVector v(N, Rational(0));
          v[i] = 1;
          v[j] = -1;
          pos.push_back(make_root(N, v, 0));
        }
      break;
    case Family::B:
      for (int i = 0; i < n; ++i) pos.push_back(make_root(N, unit(N, i), 0));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          RationalVector minus(N, Rational(0)), plus(N, Rational(0));
          minus[i] = 1;
          minus[j] = -1;
          plus[i] = 1;
          plus[j] = 1;
          pos.push_back(make_root(N, minus, 1));
          pos.push_back(make_root(N, plus, 1));
        }
      break;
    case Family::Z2:
      for (int i = 0; i < n; ++i) pos.push_back(make_root(N, unit(N, i), i));
      break;
    case Family::I2: {
      const int m = spec.m;
      for (int j = 0; j < m; ++j) {
        const int orbit = (m % 2 == 1) ? 0 : j % 2;
        // Rational direction exists exactly when the angle j*pi/m is a
        // multiple of pi/4.
        if ((4 * j) % m == 0) {
          const int q = (4 * j) / m;  // angle = q * pi/4, q in 0..3
          RationalVector v(N, Rational(0));
          switch (q) {
            case 0: v[0] = 1; break;
            case 1: v[0] = 1; v[1] = 1; break;
            case 2: v[1] = 1; break;
            case 3: v[0] = -1; v[1] = 1; break;
          }
          pos.push_back(make_root(N, v, orbit));
        } else {
          Root r;
          r.orbit = orbit;
          r.vector.assign(N, 0.0);
          const double theta = std::numbers::pi * j / m;
          r.vector[0] = std::sqrt(2.0) * std::cos(theta);
          r.vector[1] = std::sqrt(2.0) * std::sin(theta);
          pos.push_back(std::move(r));
        }
      }
      break;
    }
  }
  return RootSystem(std::move(spec), std::move(pos));
}

RootSystem build_root_system(Family family, int rank, const std::vector<Rational>& k, int dim, int m) {
  RootSystemSpec spec;
  spec.family = family;
  spec.rank = family == Family::I2 ? 2 : rank;
  spec.m = m;
  spec.multiplicities = k;
  spec.dim = dim;
  return build_root_system(spec);
}

// ---------------------------------------------------------------------------
// Reflections and the group

void reflect_into(const Root& alpha, std::span<const double> x, std::span<double> out) {
  // |alpha|^2 = 2, so sigma x = x - <alpha,x> alpha.
  const double t = alpha.pairing(x);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - t * alpha.vector[i];
}

std::vector<double> reflect(const Root& alpha, std::span<const double> x) {
  std::vector<double> out(x.size());
  reflect_into(alpha, x, out);
  return out;
}

namespace {

std::vector<long long> matrix_key(const Eigen::MatrixXd& m) {
  std::vector<long long> key(m.size());
  for (Eigen::Index i = 0; i < m.size(); ++i) key[i] = std::llround(m.data()[i] * 1e6);
  return key;
}

}  // namespace

ReflectionGroup generate_group(const RootSystem& rs, std::size_t max_order) {
  const int N = rs.dim();
  ReflectionGroup g;
  g.dim = N;
  std::vector<Eigen::MatrixXd> gens;
  for (const auto& r : rs.positive_roots()) {
    Eigen::Map<const Eigen::VectorXd> a(r.vector.data(), N);
    gens.push_back(Eigen::MatrixXd::Identity(N, N) - a * a.transpose());
  }

  std::map<std::vector<long long>, std::size_t> seen;
  g.elements.push_back(Eigen::MatrixXd::Identity(N, N));
  seen.emplace(matrix_key(g.elements[0]), 0);
  for (const auto& s : gens) {
    auto key = matrix_key(s);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, g.elements.size());
      g.generators.push_back(g.elements.size());
      g.elements.push_back(s);
    } else {
      g.generators.push_back(it->second);
    }
  }

  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < g.elements.size(); ++i) queue.push_back(i);
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      Eigen::MatrixXd h = s * g.elements[cur];
      auto key = matrix_key(h);
      if (seen.count(key)) continue;
      if (g.elements.size() >= max_order)
        throw InvalidInput("reflection group closure exceeds max_order; root data is not a finite root system");
      seen.emplace(std::move(key), g.elements.size());
      g.elements.push_back(std::move(h));
      queue.push_back(g.elements.size() - 1);
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Weight, rho, Jacobian

double weight(const RootSystem& rs, std::span<const double> x) {
  double w = 1.0;
  auto pos = rs.positive_roots();
  for (std::size_t i = 0; i < pos.size(); ++i) {
    const double k = rs.k(i);
    if (k == 0.0) continue;
    w *= std::pow(std::abs(pos[i].pairing(x)), 2.0 * k);
  }
  return w;
}

std::vector<double> rho(const RootSystem& rs, std::span<const double> x) {
  const double r = norm(x);
  std::vector<double> out(x.size(), 0.0);
  auto pos = rs.positive_roots();
  for (std::size_t i = 0; i < pos.size(); ++i) {
    const double t = pos[i].pairing(x);
    if (!(std::abs(t) >= kHyperplaneTolerance * r) || r == 0.0)
      throw SingularPoint("rho evaluated on a reflection hyperplane");
    const double c = 2.0 * rs.k(i) / t;
    for (std::size_t j = 0; j < x.size(); ++j) out[j] += c * pos[i].vector[j];
  }
  return out;
}

double reflection_jacobian(const Root& alpha) {
  const int N = alpha.dim();
  Eigen::Map<const Eigen::VectorXd> a(alpha.vector.data(), N);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(N, N) - a * a.transpose();
  return m.determinant();
}

Rational reflection_jacobian_exact(const Root& alpha) {
  auto m = alpha.reflection_matrix();  // I - s^2 v v^T, identical to I - alpha alpha^T
  const int n = static_cast<int>(m.size());
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// Sign-flip fields

SignFlipReport sign_flip_field_check(const RootSystem& rs, const VectorField& field,
                                     const std::vector<std::vector<double>>& samples,
                                     const std::vector<ScalarField>& invariant_parts, double tol) {
  SignFlipReport rep;
  auto pos = rs.positive_roots();
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const auto& x = samples[s];
    const auto fx = field(x);
    const double scale = std::max(1.0, norm(fx));
    for (std::size_t a = 0; a < pos.size(); ++a) {
      const auto y = reflect(pos[a], x);
      const double res = std::abs(pos[a].pairing(field(y)) + pos[a].pairing(fx)) / scale;
      if (res > rep.worst_residual) {
        rep.worst_residual = res;
        rep.worst_sample = s;
        rep.worst_root = a;
      }
    }
  }
  rep.holds = rep.worst_residual <= tol;

  if (!invariant_parts.empty()) {
    const auto group = generate_group(rs);
    for (const auto& h : invariant_parts)
      for (const auto& x : samples) {
        const double hx = h(x);
        Eigen::Map<const Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(x.size()));
        for (const auto& g : group.elements) {
          Eigen::VectorXd gx = g * xv;
          if (std::abs(h(std::span<const double>(gx.data(), gx.size())) - hx) > tol * std::max(1.0, std::abs(hx)))
            rep.invariance_ok = false;
        }
      }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const RootSystem& rs) {
  nlohmann::json j;
  j["family"] = family_name(rs.family());
  j["rank"] = rs.rank();
  if (rs.family() == Family::I2) j["m"] = rs.spec().m;
  j["dim"] = rs.dim();
  auto& mult = j["multiplicities"] = nlohmann::json::array();
  for (const auto& k : rs.spec().multiplicities) mult.push_back(to_string(k));
  auto& roots = j["roots"] = nlohmann::json::array();
  for (const auto& r : rs.positive_roots()) roots.push_back(r.vector);
  return j;
}

RootSystem root_system_from_json(const nlohmann::json& j) {
  RootSystemSpec spec;
  spec.family = parse_family(j.at("family").get<std::string>());
  spec.rank = j.at("rank").get<int>();
  spec.m = j.value("m", 0);
  spec.dim = j.value("dim", 0);
  for (const auto& k : j.at("multiplicities")) {
    if (k.is_string())
      spec.multiplicities.push_back(parse_rational(k.get<std::string>()));
    else if (k.is_number_integer())
      spec.multiplicities.push_back(Rational(k.get<long>()));
    else
      spec.multiplicities.push_back(parse_rational(k.dump()));
  }
  return build_root_system(spec);
}

}  // namespace dunkl
