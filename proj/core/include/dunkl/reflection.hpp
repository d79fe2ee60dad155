#pragma once

// Root systems, the finite reflection groups they generate, and the
// pointwise objects attached to a multiplicity function: the weight
// omega_k, the degree gamma and the vector field rho.

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dunkl/rational.hpp"

namespace dunkl {

/// Largest ambient dimension supported by the numeric kernels.
inline constexpr int kMaxDim = 8;

/// Relative distance |<alpha,x>| / |x| below which a point counts as lying
/// on a reflection hyperplane.
inline constexpr double kHyperplaneTolerance = 1e-8;

enum class Family { A, B, Z2, I2 };

Family parse_family(std::string_view name);
std::string family_name(Family f);

/// A root normalised to |alpha|^2 = 2.
///
/// When the root line contains a rational vector, `direction` holds it and
/// alpha = direction * sqrt(2 / |direction|^2). The reflection and every
/// quotient alpha_i / <alpha, x> then only involve `direction`, which keeps
/// symbolic Dunkl calculus inside the rationals.
struct Root {
  std::vector<double> vector;
  RationalVector direction;
  int orbit = 0;

  bool exact() const { return !direction.empty(); }
  int dim() const { return static_cast<int>(vector.size()); }
  double pairing(std::span<const double> x) const;
  Rational direction_norm2() const;
  /// Exact matrix of the reflection (rows of rationals). Requires exact().
  std::vector<RationalVector> reflection_matrix() const;
  Root negated() const;
};

struct MultiplicitySummary {
  Rational gamma;
  Rational weight_degree;
};

/// Parameters of a supported root system.
struct RootSystemSpec {
  Family family = Family::A;
  int rank = 1;
  int m = 0;  // dihedral order, I2 only
  std::vector<Rational> multiplicities;  // one per orbit
  int dim = 0;  // ambient dimension; 0 selects the natural one
};

int orbit_count(Family family, int rank, int m);
int natural_dimension(Family family, int rank);

class RootSystem {
 public:
  RootSystem(RootSystemSpec spec, std::vector<Root> positive);

  const RootSystemSpec& spec() const { return spec_; }
  Family family() const { return spec_.family; }
  int rank() const { return spec_.rank; }
  int dim() const { return spec_.dim; }

  std::span<const Root> positive_roots() const { return positive_; }
  /// Positive roots followed by their negatives.
  std::vector<Root> roots() const;

  const Rational& multiplicity(std::size_t i) const { return k_exact_[i]; }
  double k(std::size_t i) const { return k_[i]; }
  int orbit_count() const { return static_cast<int>(spec_.multiplicities.size()); }

  MultiplicitySummary summary() const;
  double gamma() const { return gamma_; }
  /// N + 2 gamma, the dimension that governs every sharp constant.
  double effective_dim() const { return dim() + 2.0 * gamma_; }
  bool exact() const;
  bool trivial_multiplicity() const;

  /// Same system with the listed positive roots replaced by their negatives.
  RootSystem with_flipped(const std::vector<bool>& flip) const;

  /// Index into roots() of a root equal to v (within tol), if any.
  std::optional<std::size_t> find_root(std::span<const double> v, double tol = 1e-9) const;

 private:
  RootSystemSpec spec_;
  std::vector<Root> positive_;
  std::vector<Rational> k_exact_;
  std::vector<double> k_;
  double gamma_ = 0.0;
};

RootSystem build_root_system(const RootSystemSpec& spec);
/// Shorthand with multiplicities given as doubles converted exactly.
RootSystem build_root_system(Family family, int rank, const std::vector<Rational>& k, int dim = 0, int m = 0);

/// sigma_alpha x.
std::vector<double> reflect(const Root& alpha, std::span<const double> x);
void reflect_into(const Root& alpha, std::span<const double> x, std::span<double> out);

struct ReflectionGroup {
  int dim = 0;
  std::vector<Eigen::MatrixXd> elements;  // elements[0] is the identity
  std::vector<std::size_t> generators;    // indices of the sigma_alpha, alpha in R+
  std::size_t order() const { return elements.size(); }
};

/// Breadth-first closure of the reflections. Throws InvalidInput when the
/// closure grows beyond max_order.
ReflectionGroup generate_group(const RootSystem& rs, std::size_t max_order = 100000);

/// omega_k(x) = prod |<alpha,x>|^{2 k_alpha}.
double weight(const RootSystem& rs, std::span<const double> x);

/// rho(x) = 2 sum k_alpha alpha / <alpha,x>. Throws SingularPoint on a hyperplane.
std::vector<double> rho(const RootSystem& rs, std::span<const double> x);

/// det(I - alpha alpha^T), floating point.
double reflection_jacobian(const Root& alpha);
/// Same determinant in exact arithmetic. Requires alpha.exact().
Rational reflection_jacobian_exact(const Root& alpha);

using VectorField = std::function<std::vector<double>(std::span<const double>)>;
using ScalarField = std::function<double(std::span<const double>)>;

struct SignFlipReport {
  bool holds = true;
  bool invariance_ok = true;
  double worst_residual = 0.0;
  std::size_t worst_sample = 0;
  std::size_t worst_root = 0;
};

/// Checks <alpha, F(sigma_alpha x)> = -<alpha, F(x)> for every positive root
/// and sample. `invariant_parts` (the scalar factors of F that the caller
/// claims are G-invariant) are spot-checked against every group element.
SignFlipReport sign_flip_field_check(const RootSystem& rs, const VectorField& field,
                                     const std::vector<std::vector<double>>& samples,
                                     const std::vector<ScalarField>& invariant_parts = {},
                                     double tol = 1e-10);

nlohmann::json to_json(const RootSystem& rs);
RootSystem root_system_from_json(const nlohmann::json& j);

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);

}  // namespace dunkl
