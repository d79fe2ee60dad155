#pragma once

// Distance functions of the supported G-invariant domains.

#include <nlohmann/json.hpp>

#include <span>
#include <vector>

#include "dunkl/reflection.hpp"

namespace dunkl {

enum class DomainKind { PuncturedSpace, ExteriorBall, Halfspace, WedgeSN };

struct DomainSpec {
  DomainKind kind = DomainKind::PuncturedSpace;
  int dim = 0;
  double radius = 1.0;  // exterior ball
  int axis = 0;         // halfspace: domain {x_axis > 0}
};

std::string domain_name(DomainKind k);
DomainKind parse_domain(std::string_view name);

nlohmann::json to_json(const DomainSpec& d);
DomainSpec domain_from_json(const nlohmann::json& j);

/// Closed-form distance data; construct through distance_data().
class DistanceData {
 public:
  DistanceData(DomainSpec spec, double nbar);

  const DomainSpec& spec() const { return spec_; }
  bool contains(std::span<const double> x) const;
  double delta(std::span<const double> x) const;
  void grad_delta(std::span<const double> x, std::span<double> out) const;
  std::vector<double> grad_delta(std::span<const double> x) const;
  double laplacian_delta(std::span<const double> x) const;
  double dunkl_laplacian_delta(std::span<const double> x) const;

 private:
  DomainSpec spec_;
  double nbar_;
  std::vector<double> eta_;  // unit normal for halfspace and wedge
};

/// Checks the compatibility conditions and returns the distance data.
/// Halfspace needs every root orthogonal to the axis; the wedge needs A(N-1)
/// in its natural dimension.
DistanceData distance_data(const DomainSpec& spec, const RootSystem& rs);

struct EquivarianceReport {
  double worst = 0.0;        // max |grad delta(g x) - g grad delta(x)|
  double worst_delta = 0.0;  // max |delta(g x) - delta(x)|
  bool holds(double tol = 1e-12) const { return worst < tol && worst_delta < tol; }
};

EquivarianceReport equivariance_check(const DistanceData& d, const RootSystem& rs,
                                      const std::vector<std::vector<double>>& samples);

/// <rho(x), grad delta(x)>.
double rho_pairing(const DistanceData& d, const RootSystem& rs, std::span<const double> x);

/// Random points inside the domain, off the hyperplanes, inner <= |x| <= outer.
std::vector<std::vector<double>> domain_samples(const DistanceData& d, const RootSystem& rs, int count, double inner,
                                                double outer, std::uint64_t seed);

}  // namespace dunkl
