#include "dunkl/domains.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>

#include "dunkl/errors.hpp"

namespace dunkl {

std::string domain_name(DomainKind k) {
  switch (k) {
    case DomainKind::PuncturedSpace: return "punctured_space";
    case DomainKind::ExteriorBall: return "exterior_ball";
    case DomainKind::Halfspace: return "halfspace";
    case DomainKind::WedgeSN: return "wedge_SN";
  }
  return "?";
}

DomainKind parse_domain(std::string_view name) {
  if (name == "punctured_space") return DomainKind::PuncturedSpace;
  if (name == "exterior_ball") return DomainKind::ExteriorBall;
  if (name == "halfspace") return DomainKind::Halfspace;
  if (name == "wedge_SN") return DomainKind::WedgeSN;
  throw InvalidInput("unknown domain kind: " + std::string(name));
}

nlohmann::json to_json(const DomainSpec& d) {
  nlohmann::json j;
  j["kind"] = domain_name(d.kind);
  j["dim"] = d.dim;
  if (d.kind == DomainKind::ExteriorBall) j["radius"] = d.radius;
  if (d.kind == DomainKind::Halfspace) j["axis"] = d.axis;
  return j;
}

DomainSpec domain_from_json(const nlohmann::json& j) {
  DomainSpec d;
  d.kind = parse_domain(j.at("kind").get<std::string>());
  d.dim = j.value("dim", 0);
  d.radius = j.value("radius", 1.0);
  d.axis = j.value("axis", 0);
  return d;
}

DistanceData::DistanceData(DomainSpec spec, double nbar) : spec_(spec), nbar_(nbar) {
  const int N = spec_.dim;
  if (spec_.kind == DomainKind::Halfspace) {
    eta_.assign(N, 0.0);
    eta_.at(spec_.axis) = 1.0;
  } else if (spec_.kind == DomainKind::WedgeSN) {
    eta_.assign(N, 1.0 / std::sqrt(static_cast<double>(N)));
  }
}

bool DistanceData::contains(std::span<const double> x) const {
  switch (spec_.kind) {
    case DomainKind::PuncturedSpace: return norm(x) > 0.0;
    case DomainKind::ExteriorBall: return norm(x) > spec_.radius;
    default: return dot(x, eta_) > 0.0;
  }
}

double DistanceData::delta(std::span<const double> x) const {
  switch (spec_.kind) {
    case DomainKind::PuncturedSpace: return norm(x);
    case DomainKind::ExteriorBall: return norm(x) - spec_.radius;
    default: return dot(x, eta_);
  }
}

void DistanceData::grad_delta(std::span<const double> x, std::span<double> out) const {
  if (spec_.kind == DomainKind::PuncturedSpace || spec_.kind == DomainKind::ExteriorBall) {
    const double r = norm(x);
    if (r == 0.0) throw SingularPoint("distance gradient undefined at the origin");
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] / r;
  } else {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = eta_[i];
  }
}

std::vector<double> DistanceData::grad_delta(std::span<const double> x) const {
  std::vector<double> g(x.size());
  grad_delta(x, g);
  return g;
}

double DistanceData::laplacian_delta(std::span<const double> x) const {
  if (spec_.kind == DomainKind::PuncturedSpace || spec_.kind == DomainKind::ExteriorBall)
    return (spec_.dim - 1) / norm(x);
  return 0.0;
}

double DistanceData::dunkl_laplacian_delta(std::span<const double> x) const {
  if (spec_.kind == DomainKind::PuncturedSpace || spec_.kind == DomainKind::ExteriorBall)
    return (nbar_ - 1.0) / norm(x);
  return 0.0;
}

DistanceData distance_data(const DomainSpec& in, const RootSystem& rs) {
  DomainSpec spec = in;
  if (spec.dim == 0) spec.dim = rs.dim();
  if (spec.dim != rs.dim()) throw InvalidInput("domain and root system live in different dimensions");
  switch (spec.kind) {
    case DomainKind::ExteriorBall:
      if (!(spec.radius > 0.0)) throw InvalidInput("exterior ball radius must be positive");
      break;
    case DomainKind::Halfspace:
      if (spec.axis < 0 || spec.axis >= spec.dim) throw InvalidInput("halfspace axis out of range");
      for (const auto& a : rs.positive_roots())
        if (std::abs(a.vector[spec.axis]) > 1e-12)
          throw InvalidInput("halfspace needs every root orthogonal to the axis");
      break;
    case DomainKind::WedgeSN:
      if (rs.family() != Family::A || rs.rank() != rs.dim() - 1)
        throw InvalidInput("the symmetric-group wedge needs A(N-1) acting on R^N");
      break;
    case DomainKind::PuncturedSpace:
      break;
  }
  return DistanceData(spec, rs.effective_dim());
}

EquivarianceReport equivariance_check(const DistanceData& d, const RootSystem& rs,
                                      const std::vector<std::vector<double>>& samples) {
  EquivarianceReport rep;
  const auto group = generate_group(rs);
  const int N = rs.dim();
  for (const auto& x : samples) {
    Eigen::Map<const Eigen::VectorXd> xv(x.data(), N);
    const auto gx0 = d.grad_delta(x);
    Eigen::Map<const Eigen::VectorXd> grad(gx0.data(), N);
    const double dx = d.delta(x);
    for (const auto& g : group.elements) {
      Eigen::VectorXd y = g * xv;
      std::span<const double> ys(y.data(), N);
      const auto gy = d.grad_delta(ys);
      Eigen::VectorXd rotated = g * grad;
      for (int i = 0; i < N; ++i) rep.worst = std::max(rep.worst, std::abs(gy[i] - rotated(i)));
      rep.worst_delta = std::max(rep.worst_delta, std::abs(d.delta(ys) - dx));
    }
  }
  return rep;
}

double rho_pairing(const DistanceData& d, const RootSystem& rs, std::span<const double> x) {
  const auto r = rho(rs, x);
  const auto g = d.grad_delta(x);
  return dot(r, g);
}

std::vector<std::vector<double>> domain_samples(const DistanceData& d, const RootSystem& rs, int count, double inner,
                                                double outer, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unif(inner, outer);
  const int N = rs.dim();
  std::vector<std::vector<double>> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<double> x(N);
    for (double& v : x) v = normal(rng);
    const double n0 = norm(x);
    if (n0 < 1e-9) continue;
    const double r = unif(rng);
    for (double& v : x) v *= r / n0;
    if (!d.contains(x)) {
      const auto& s = d.spec();
      if (s.kind == DomainKind::Halfspace) x[s.axis] = -x[s.axis];
      else if (s.kind == DomainKind::WedgeSN) for (double& v : x) v = -v;
    }
    if (!d.contains(x)) continue;
    bool near = false;
    for (const auto& a : rs.positive_roots()) near = near || std::abs(a.pairing(x)) < 1e-3 * r;
    if (near) continue;
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace dunkl
