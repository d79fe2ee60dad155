#include "dunkl/harmonics.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>

#include "dunkl/errors.hpp"
#include "dunkl/polyalg.hpp"

namespace dunkl {

long long binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long hharmonic_dim(int n, int N) {
  if (n < 0) return 0;
  return binomial(n + N - 1, N - 1) - binomial(n + N - 3, N - 1);
}

double hharmonic_eigenvalue(int n, double nbar) { return -n * (n + nbar - 2.0); }

Rational hharmonic_eigenvalue(int n, const Rational& nbar) { return -n * (n + nbar - 2); }

std::vector<RationalVector> dunkl_laplacian_matrix(const RootSystem& rs, int n) {
  const int N = rs.dim();
  const auto cols = monomials_of_degree(N, n);
  const auto rows = n >= 2 ? monomials_of_degree(N, n - 2) : std::vector<Exponent>{};
  std::map<Exponent, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
  std::vector<RationalVector> m(rows.size(), RationalVector(cols.size(), Rational(0)));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Polynomial lap = dunkl_laplacian_via_formula(rs, Polynomial::monomial(cols[j]));
    for (const auto& [e, c] : lap.terms()) m[row_index.at(e)][j] = c;
  }
  return m;
}

std::vector<Polynomial> hharmonic_kernel(const RootSystem& rs, int n) {
  const int N = rs.dim();
  const auto cols = monomials_of_degree(N, n);
  auto m = dunkl_laplacian_matrix(rs, n);
  const std::size_t ncols = cols.size();
  const std::size_t nrows = m.size();

  // Reduced row echelon form.
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
    std::size_t piv = row;
    while (piv < nrows && m[piv][col] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(m[piv], m[row]);
    const Rational inv = 1 / m[row][col];
    for (std::size_t c = col; c < ncols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < ncols; ++c)
        if (m[row][c] != 0) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }

  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<Polynomial> kernel;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Polynomial p(N);
    p.add_term(cols[f], 1);
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      if (m[r][f] != 0) p.add_term(cols[pivot_col[r]], -m[r][f]);
    kernel.push_back(std::move(p));
  }
  const long long expected = hharmonic_dim(n, N);
  if (static_cast<long long>(kernel.size()) != expected)
    throw InvariantBreach("h-harmonic kernel of degree " + std::to_string(n) + " has dimension " +
                          std::to_string(kernel.size()) + ", expected " + std::to_string(expected));
  return kernel;
}

double HHarmonicBasis::evaluate(std::size_t i, std::span<const double> x) const {
  if (!orthonormalized) return compiled[i](x);
  double s = 0.0;
  for (std::size_t j = 0; j < compiled.size(); ++j)
    if (transform(i, j) != 0.0) s += transform(i, j) * compiled[j](x);
  return s;
}

HHarmonicBasis build_basis(const RootSystem& rs, int n, const SphericalRule& rule, bool orthonormalize) {
  if (n < 0 || n > 8) throw InvalidInput("h-harmonic degree must lie in 0..8");
  HHarmonicBasis b;
  b.degree = n;
  b.eigenvalue = hharmonic_eigenvalue(n, rs.effective_dim());
  b.basis = hharmonic_kernel(rs, n);
  for (const auto& p : b.basis) b.compiled.emplace_back(p);

  const std::size_t d = b.basis.size();
  const std::size_t J = rule.size();
  Eigen::MatrixXd S(d, J);
  for (std::size_t j = 0; j < J; ++j) {
    const double sw = std::sqrt(rule.weights[j] * weight(rs, rule.node(j)));
    for (std::size_t i = 0; i < d; ++i) S(i, j) = sw * b.compiled[i](rule.node(j));
  }
  b.gram = S * S.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b.gram, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
  b.gram_condition = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  b.transform = Eigen::MatrixXd::Identity(d, d);
  if (!orthonormalize) return b;

  // Modified Gram-Schmidt on the sampled functions, two passes.
  Eigen::MatrixXd Q = S;
  for (std::size_t i = 0; i < d; ++i) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t k = 0; k < i; ++k) {
        const double proj = Q.row(i).dot(Q.row(k));
        Q.row(i) -= proj * Q.row(k);
        b.transform.row(i) -= proj * b.transform.row(k);
      }
    const double nrm = Q.row(i).norm();
    if (!(nrm > 1e-300)) throw InvariantBreach("h-harmonic basis is degenerate on the sphere rule");
    Q.row(i) /= nrm;
    b.transform.row(i) /= nrm;
  }
  b.orthonormalized = true;
  return b;
}

std::vector<HHarmonicBasis> build_bases(const RootSystem& rs, int n_max, const SphericalRule& rule) {
  std::vector<HHarmonicBasis> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(build_basis(rs, n, rule));
  return out;
}

Polynomial sphere_eigencheck(const RootSystem& rs, const Polynomial& p) {
  const int n = p.degree();
  if (n < 0) return Polynomial(p.dim());
  if (!p.is_homogeneous()) throw InvalidInput("sphere_eigencheck needs a homogeneous polynomial");
  const Rational nbar = rs.dim() + 2 * rs.summary().gamma;
  const Rational lambda = hharmonic_eigenvalue(n, nbar);
  // r d_r p = n p on homogeneous p, so r d_r (r d_r p) = n^2 p.
  const Rational radial = Rational(n * n) + (nbar - 2) * n;
  return Polynomial::norm_squared(p.dim()) * dunkl_laplacian_sym(rs, p) - p * (radial + lambda);
}

nlohmann::json to_json(const HHarmonicBasis& b) {
  nlohmann::json j;
  j["degree"] = b.degree;
  j["eigenvalue"] = b.eigenvalue;
  auto& polys = j["basis"] = nlohmann::json::array();
  for (const auto& p : b.basis) polys.push_back(to_json(p));
  auto& t = j["orthonormalization"] = nlohmann::json::array();
  for (Eigen::Index r = 0; r < b.transform.rows(); ++r) {
    std::vector<double> row(b.transform.cols());
    for (Eigen::Index c = 0; c < b.transform.cols(); ++c) row[c] = b.transform(r, c);
    t.push_back(row);
  }
  j["gram_condition"] = b.gram_condition;
  return j;
}

// ---------------------------------------------------------------------------
// Expansion

RadialNodes radial_nodes(const RadialGrid& grid) {
  grid.validate();
  if (grid.head != EndMode::None || grid.tail != EndMode::None)
    throw InvalidInput("spectral expansion needs a grid without end treatment");
  RadialNodes out;
  const GaussRule& g = gauss_legendre(grid.nodes_per_interval);
  for (std::size_t i = 0; i + 1 < grid.breakpoints.size(); ++i) {
    const double a = grid.breakpoints[i], b = grid.breakpoints[i + 1];
    for (std::size_t q = 0; q < g.nodes.size(); ++q) {
      out.r.push_back(0.5 * (a + b) + 0.5 * (b - a) * g.nodes[q]);
      out.w.push_back(0.5 * (b - a) * g.weights[q]);
    }
  }
  return out;
}

CubicSpline SpectralCoefficients::interpolant(int n, std::size_t i) const { return CubicSpline(radii, values.at(n).at(i)); }

SpectralCoefficients expand(const RootSystem& rs, const ScalarField& u, const std::vector<HHarmonicBasis>& bases,
                            const RadialGrid& grid, const SphericalRule& rule) {
  for (const auto& b : bases)
    if (!b.orthonormalized) throw InvalidInput("expansion needs orthonormalised bases");
  const RadialNodes nodes = radial_nodes(grid);
  const int N = rs.dim();
  const std::size_t J = rule.size();

  // Projection rows: w_j omega(xi_j) Y(xi_j).
  std::vector<std::vector<std::vector<double>>> proj(bases.size());
  for (std::size_t n = 0; n < bases.size(); ++n) {
    proj[n].resize(bases[n].size(), std::vector<double>(J));
    for (std::size_t j = 0; j < J; ++j) {
      const double ww = rule.weights[j] * weight(rs, rule.node(j));
      for (std::size_t i = 0; i < bases[n].size(); ++i) proj[n][i][j] = ww * bases[n].evaluate(i, rule.node(j));
    }
  }

  SpectralCoefficients c;
  c.n_max = static_cast<int>(bases.size()) - 1;
  c.radii = nodes.r;
  c.radial_weights = nodes.w;
  c.values.resize(bases.size());
  for (std::size_t n = 0; n < bases.size(); ++n)
    c.values[n].assign(bases[n].size(), std::vector<double>(nodes.r.size(), 0.0));

  std::vector<double> x(N), ux(J);
  for (std::size_t q = 0; q < nodes.r.size(); ++q) {
    const double r = nodes.r[q];
    for (std::size_t j = 0; j < J; ++j) {
      auto xi = rule.node(j);
      for (int i = 0; i < N; ++i) x[i] = r * xi[i];
      ux[j] = u(x);
    }
    for (std::size_t n = 0; n < bases.size(); ++n)
      for (std::size_t i = 0; i < bases[n].size(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < J; ++j) s += proj[n][i][j] * ux[j];
        c.values[n][i][q] = s;
      }
  }
  return c;
}

double reconstruct(const SpectralCoefficients& c, const std::vector<HHarmonicBasis>& bases, double r,
                   std::span<const double> xi) {
  double s = 0.0;
  for (std::size_t n = 0; n < bases.size(); ++n)
    for (std::size_t i = 0; i < bases[n].size(); ++i) s += c.interpolant(static_cast<int>(n), i).value(r) * bases[n].evaluate(i, xi);
  return s;
}

double parseval_residual(const RootSystem& rs, const ScalarField& u, const SpectralCoefficients& c,
                         const RadialGrid& grid, const SphericalRule& rule) {
  const RadialNodes nodes = radial_nodes(grid);
  if (nodes.r.size() != c.radii.size()) throw InvalidInput("coefficients were tabulated on a different grid");
  const double power = rs.effective_dim() - 1.0;
  const int N = rs.dim();
  std::vector<double> x(N), ww(rule.size());
  for (std::size_t j = 0; j < rule.size(); ++j) ww[j] = rule.weights[j] * weight(rs, rule.node(j));
  double lhs = 0.0, rhs = 0.0;
  for (std::size_t q = 0; q < nodes.r.size(); ++q) {
    const double r = nodes.r[q];
    const double rw = nodes.w[q] * std::pow(r, power);
    double shell = 0.0;
    for (std::size_t j = 0; j < rule.size(); ++j) {
      auto xi = rule.node(j);
      for (int i = 0; i < N; ++i) x[i] = r * xi[i];
      const double v = u(x);
      shell += ww[j] * v * v;
    }
    lhs += rw * shell;
    double modes = 0.0;
    for (const auto& deg : c.values)
      for (const auto& coeff : deg) modes += coeff[q] * coeff[q];
    rhs += rw * modes;
  }
  if (lhs == 0.0) return std::abs(rhs);
  return std::abs(lhs - rhs) / std::abs(lhs);
}

double spherical_mean(const RootSystem& rs, const ScalarField& u, double r, const SphericalRule& rule) {
  const int N = rs.dim();
  std::vector<double> x(N);
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    auto xi = rule.node(j);
    const double ww = rule.weights[j] * weight(rs, xi);
    for (int i = 0; i < N; ++i) x[i] = r * xi[i];
    num += ww * u(x);
    den += ww;
  }
  return num / den;
}

double mean_projection_invariance(const RootSystem& rs, const ScalarField& u, const RadialGrid& grid,
                                  const SphericalRule& rule) {
  const RadialNodes nodes = radial_nodes(grid);
  double worst = 0.0;
  std::vector<double> y(rs.dim());
  for (const auto& alpha : rs.positive_roots()) {
    ScalarField reflected = [&](std::span<const double> x) {
      reflect_into(alpha, x, y);
      return u(y);
    };
    for (double r : nodes.r)
      worst = std::max(worst, std::abs(spherical_mean(rs, reflected, r, rule) - spherical_mean(rs, u, r, rule)));
  }
  return worst;
}

CrossTermReport cross_term_bound_check(const RootSystem& rs, const ScalarField& u, const RadialGrid& grid,
                                       const SphericalRule& rule, double tol) {
  const int N = rs.dim();
  auto pos = rs.positive_roots();
  const std::size_t m = pos.size();
  const std::size_t J = rule.size();
  std::vector<double> ww(J);
  double wsum = 0.0;
  for (std::size_t j = 0; j < J; ++j) {
    ww[j] = rule.weights[j] * weight(rs, rule.node(j));
    wsum += ww[j];
  }
  const double power = rs.effective_dim() - 1.0 - 4.0;
  std::vector<double> x(N), y(N), ux(J);
  auto vals = integrate_radial_multi(
      grid, static_cast<int>(m) + 1,
      [&](double r, std::span<double> out) {
        double mean = 0.0;
        for (std::size_t j = 0; j < J; ++j) {
          auto xi = rule.node(j);
          for (int i = 0; i < N; ++i) x[i] = r * xi[i];
          ux[j] = u(x);
          mean += ww[j] * ux[j];
        }
        mean /= wsum;
        for (std::size_t j = 0; j < J; ++j) {
          auto xi = rule.node(j);
          for (int i = 0; i < N; ++i) x[i] = r * xi[i];
          out[0] += ww[j] * (ux[j] - mean) * (ux[j] - mean);
          for (std::size_t a = 0; a < m; ++a) {
            reflect_into(pos[a], x, y);
            out[a + 1] += ww[j] * (ux[j] - u(y)) * ux[j];
          }
        }
        const double rp = std::pow(r, power);
        for (double& v : out) v *= rp;
      },
      false);
  CrossTermReport rep;
  rep.rhs = 2.0 * vals[0].value;
  rep.worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < m; ++a) {
    rep.lhs.push_back(vals[a + 1].value);
    rep.worst_margin = std::min(rep.worst_margin, rep.rhs - vals[a + 1].value);
    if (vals[a + 1].value > rep.rhs + tol) rep.holds = false;
  }
  if (m == 0) rep.worst_margin = rep.rhs;
  return rep;
}

}  // namespace dunkl
