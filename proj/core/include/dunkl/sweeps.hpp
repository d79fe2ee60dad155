#pragma once

// Extremizer families and epsilon-sweeps of their Rayleigh quotients.

#include <nlohmann/json.hpp>

#include <memory>
#include <string>
#include <vector>

#include "dunkl/functionals.hpp"
#include "dunkl/profiles.hpp"
#include "dunkl/reflection.hpp"

namespace dunkl {

enum class FamilyKind {
  HardyP,        // r^b (b = (p - Nbar + eps)/p) inside the unit ball, 1 outside
  Hardy2,        // 1 inside, r^-(Nbar-2+eps)/2 outside
  Rellich,       // mollified r^-a, a = (Nbar-4+eps)/2
  Thm41,         // mollified r^-a, a = (Nbar-2+eps)/2
  Thm42,         // mollified r^-a, a = (Nbar-4+eps)/2
  Thm42Printed,  // mollified r^-a, a = (N-4+eps)/2
};

std::string family_kind_name(FamilyKind k);
FamilyKind parse_family_kind(const std::string& name);

/// Which quotient a family is measured with.
enum class FunctionalId { Hardy, Rellich, HardyRellichWeighted, HardyRellich };
std::string functional_name(FunctionalId f);

struct ExtremizerFamily {
  FamilyKind kind = FamilyKind::Hardy2;
  int dim = 3;
  double gamma = 0.0;
  double p = 2.0;   // Hardy exponent (HardyP only)
  double h = 0.25;  // width of the quintic join for the mollified kinds

  double nbar() const { return dim + 2.0 * gamma; }
  FunctionalId functional() const;
  bool mollified() const;
  /// Power of the singular piece.
  double exponent(double eps) const;
  std::shared_ptr<const PiecewisePowerProfile> profile(double eps) const;
  /// The sharp constant the family is meant to approach.
  double target() const;
  /// Limit of the ratio of the power-law leading coefficients as eps -> 0.
  double formal_limit() const;
  std::vector<double> kinks() const;
};

/// Family for the given root system; p is only read for HardyP.
ExtremizerFamily make_family(FamilyKind kind, const RootSystem& rs, double p = 2.0);

/// Quotient from exact integrals of powers of r. Throws Divergence when an
/// integral is infinite.
double oracle_quotient(const ExtremizerFamily& f, double eps);

struct SweepOptions {
  int sphere_order = 2;
  int nodes = 24;
  int levels = 40;
  double r_max = 2.0;
  bool quadrature = true;
  double tolerance = 0.0;           // oracle path; 0 picks 1% (Hardy) or 2% (mollified)
  double quadrature_tolerance = 0.0;  // 0 picks 1.5% (Hardy) or 2% (mollified)
  double agreement = 1e-6;          // relative oracle/quadrature agreement for eps >= 1e-3
  double monotone_slack = 1e-8;
};

/// The quadrature quotient of the family member through the Cartesian functionals.
Quotient quadrature_quotient(const ExtremizerFamily& f, const RootSystem& rs, double eps,
                             const SweepOptions& opts = {});

struct SweepPoint {
  double eps = 0.0;
  double oracle = 0.0;  // +inf when the integrals diverge
  double quadrature = 0.0;
  double quadrature_error = 0.0;
};

struct RayleighSweep {
  FamilyKind kind = FamilyKind::Hardy2;
  FunctionalId functional = FunctionalId::Hardy;
  std::vector<SweepPoint> points;
  double target = 0.0;
  double formal_limit = 0.0;
  double extrapolated = 0.0;             // oracle path
  double extrapolated_quadrature = 0.0;  // quadrature path (NaN without quadrature)
  double tolerance = 0.0;
  double quadrature_tolerance = 0.0;
  double max_disagreement = 0.0;  // relative, over eps >= 1e-3
  bool monotone = true;
  bool finite = true;  // every oracle value finite

  double relative_gap() const;
  double relative_gap_quadrature() const;
  bool converged() const;
};

/// Quadratic through the three points with the smallest eps, evaluated at 0.
double richardson_limit(const std::vector<double>& eps, const std::vector<double>& q);

std::vector<double> default_epsilons();

/// Sweeps eps over a decreasing list (last >= 1e-4). Throws InvariantBreach
/// when the oracle and quadrature quotients disagree beyond opts.agreement.
RayleighSweep sharpness_sweep(const ExtremizerFamily& f, const RootSystem& rs, const std::vector<double>& epsilons,
                              const SweepOptions& opts = {});

/// Header epsilon,quotient_oracle,quotient_quadrature,target,rel_gap.
std::string to_csv(const RayleighSweep& s);
nlohmann::json to_json(const RayleighSweep& s);

/// 1 on [0, 1], r^-c with c = (e - 1 + eps)/2 beyond; approaches the
/// one-dimensional weighted Hardy constant (e-1)^2/4 for the weight r^e.
std::shared_ptr<const PiecewisePowerProfile> truncated_power_profile(double exponent, double eps);
/// Exact int u'^2 r^e / int u^2 r^(e-2) for truncated_power_profile.
double truncated_power_oracle(double exponent, double eps);

}  // namespace dunkl
