#pragma once

// Spherical h-harmonics: exact kernels of Delta_k on homogeneous
// polynomials, their orthonormalisation on the sphere, and spectral
// expansion of functions on R^N.

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <vector>

#include "dunkl/dunklnum.hpp"
#include "dunkl/polynomial.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/reflection.hpp"

namespace dunkl {

/// C(n, k), zero when n < 0 or k outside [0, n].
long long binomial(int n, int k);

/// C(n+N-1, N-1) - C(n+N-3, N-1).
long long hharmonic_dim(int n, int N);

/// -n (n + Nbar - 2).
double hharmonic_eigenvalue(int n, double nbar);
Rational hharmonic_eigenvalue(int n, const Rational& nbar);

/// Matrix of Delta_k from degree-n monomials (columns, monomials_of_degree
/// order) to degree n-2 monomials (rows), exact.
std::vector<RationalVector> dunkl_laplacian_matrix(const RootSystem& rs, int n);

/// Exact basis of ker Delta_k on homogeneous polynomials of degree n.
/// Throws InvariantBreach when the dimension differs from hharmonic_dim.
std::vector<Polynomial> hharmonic_kernel(const RootSystem& rs, int n);

struct HHarmonicBasis {
  int degree = 0;
  double eigenvalue = 0.0;
  std::vector<Polynomial> basis;   // exact kernel elements
  Eigen::MatrixXd gram;            // <P_i, P_j> on the sphere
  Eigen::MatrixXd transform;       // Y_i = sum_j transform(i, j) P_j
  bool orthonormalized = false;
  double gram_condition = 0.0;
  std::vector<CompiledPolynomial> compiled;

  std::size_t size() const { return basis.size(); }
  /// Y_i(x) (orthonormalised when available, otherwise the raw P_i).
  double evaluate(std::size_t i, std::span<const double> x) const;
};

HHarmonicBasis build_basis(const RootSystem& rs, int n, const SphericalRule& rule, bool orthonormalize = true);
std::vector<HHarmonicBasis> build_bases(const RootSystem& rs, int n_max, const SphericalRule& rule);

/// |x|^2 Delta_k p - (n^2 + (Nbar-2) n + lambda_n) p for homogeneous p of degree n.
/// Zero exactly when p restricted to the sphere is an eigenfunction of the
/// spherical part with eigenvalue lambda_n.
Polynomial sphere_eigencheck(const RootSystem& rs, const Polynomial& p);

nlohmann::json to_json(const HHarmonicBasis& b);

/// Gauss nodes and weights of the grid's interior intervals (no end treatment).
struct RadialNodes {
  std::vector<double> r;
  std::vector<double> w;
};
RadialNodes radial_nodes(const RadialGrid& grid);

struct SpectralCoefficients {
  int n_max = 0;
  std::vector<double> radii;
  std::vector<double> radial_weights;
  /// values[n][i][q] = u_{n,i}(radii[q])
  std::vector<std::vector<std::vector<double>>> values;

  /// Cubic-spline interpolant of u_{n,i}.
  CubicSpline interpolant(int n, std::size_t i) const;
};

SpectralCoefficients expand(const RootSystem& rs, const ScalarField& u, const std::vector<HHarmonicBasis>& bases,
                            const RadialGrid& grid, const SphericalRule& rule);

/// sum_{n,i} u_{n,i}(r) Y_i^n(xi) from the spline interpolants.
double reconstruct(const SpectralCoefficients& c, const std::vector<HHarmonicBasis>& bases, double r,
                   std::span<const double> xi);

/// |int u^2 d mu_k - sum int u_{n,i}^2 r^{Nbar-1} dr| / int u^2 d mu_k.
double parseval_residual(const RootSystem& rs, const ScalarField& u, const SpectralCoefficients& c,
                         const RadialGrid& grid, const SphericalRule& rule);

/// Weighted spherical mean int u(r xi) omega_k d nu / int omega_k d nu.
double spherical_mean(const RootSystem& rs, const ScalarField& u, double r, const SphericalRule& rule);

/// max over roots and radial nodes of |mean(u o sigma)(r) - mean(u)(r)|.
double mean_projection_invariance(const RootSystem& rs, const ScalarField& u, const RadialGrid& grid,
                                  const SphericalRule& rule);

struct CrossTermReport {
  std::vector<double> lhs;  // per positive root
  double rhs = 0.0;
  bool holds = true;
  double worst_margin = 0.0;  // min over roots of rhs - lhs
};

/// For each positive root: int (u - u o sigma) u / |x|^4 d mu_k <= 2 int (u - mean u)^2 / |x|^4 d mu_k.
CrossTermReport cross_term_bound_check(const RootSystem& rs, const ScalarField& u, const RadialGrid& grid,
                                       const SphericalRule& rule, double tol = 1e-8);

}  // namespace dunkl
