// Acceptance runner: one PASS/FAIL line per criterion, with its wall time.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dunkl/corpus.hpp"
#include "dunkl/domains.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/functionals.hpp"
#include "dunkl/harmonics.hpp"
#include "dunkl/polyalg.hpp"
#include "dunkl/sweeps.hpp"
#include "dunkl/verification.hpp"

using namespace dunkl;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  double gap = -1.0;  // worst sweep gaps, negative when no sweep ran
  double qgap = -1.0;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!note.empty()) note += "; ";
      note += what;
    }
  }
};

// Largest relative oracle/quadrature disagreement over all sweeps, for criterion 11.
double g_max_disagreement = 0.0;
std::size_t g_sweeps = 0;
std::string g_breach;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

RootSystem a1_in(int N, const Rational& k) { return build_root_system(Family::A, 1, {k}, N); }

// Runs one sweep, folds its disagreement into the global record and checks both paths.
void sweep(Outcome& o, const std::string& label, FamilyKind kind, const RootSystem& rs, double p, double tol,
           double qtol, double limit = kInfinity) {
  const ExtremizerFamily f = make_family(kind, rs, p);
  try {
    const auto t0 = std::chrono::steady_clock::now();
    const RayleighSweep s = sharpness_sweep(f, rs, default_epsilons());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < limit, label + " took " + fmt(secs) + " s");
    ++g_sweeps;
    g_max_disagreement = std::max(g_max_disagreement, s.max_disagreement);
    o.gap = std::max(o.gap, s.relative_gap());
    o.qgap = std::max(o.qgap, s.relative_gap_quadrature());
    o.require(s.finite && s.monotone, label + " not monotone/finite");
    o.require(s.relative_gap() < tol, label + " oracle gap " + fmt(s.relative_gap()));
    o.require(s.relative_gap_quadrature() < qtol, label + " quadrature gap " + fmt(s.relative_gap_quadrature()));
  } catch (const InvariantBreach& e) {
    g_breach = label + ": " + e.what();
    o.require(false, label + " routes disagree");
  }
}

void report(Outcome& o, const std::string& label, const VerificationReport& r) {
  o.require(r.pass(), label + " " + std::to_string(r.failures()) + "/" + std::to_string(r.entries.size()) +
                          " failed (min margin " + fmt(r.min_relative_margin()) + ")");
}

// ---------------------------------------------------------------------------

Outcome c1_lp_hardy() {
  Outcome o;
  const struct {
    RootSystem rs;
    double extra;
  } cases[] = {{build_root_system(Family::A, 2, {Rational(1, 6)}), 1.0},
               {build_root_system(Family::A, 2, {Rational(1, 3)}), 2.0},
               {build_root_system(Family::A, 3, {Rational(0)}), 1.0}};
  for (const auto& c : cases) {
    const double p = c.rs.effective_dim() + c.extra;
    sweep(o, "N=" + std::to_string(c.rs.dim()) + " gamma=" + fmt(c.rs.gamma()), FamilyKind::HardyP, c.rs, p, 0.01,
          0.015, 10.0);
  }
  return o;
}

Outcome c2_l2_hardy() {
  Outcome o;
  for (const auto& rs : {build_root_system(Family::A, 2, {Rational(1, 6)}),
                         build_root_system(Family::A, 2, {Rational(1, 3)}), build_root_system(Family::A, 3, {Rational(0)})})
    sweep(o, "N=" + std::to_string(rs.dim()) + " gamma=" + fmt(rs.gamma()), FamilyKind::Hardy2, rs, 2.0, 0.01, 0.015);
  return o;
}

Outcome c3_rellich() {
  Outcome o;
  for (const auto& rs : {a1_in(5, Rational(0)), a1_in(5, Rational(1, 2)), a1_in(6, Rational(1))})
    sweep(o, "N=" + std::to_string(rs.dim()) + " gamma=" + fmt(rs.gamma()), FamilyKind::Rellich, rs, 2.0, 0.02, 0.02);
  return o;
}

Outcome c4_weighted_hr() {
  Outcome o;
  for (const auto& rs : {a1_in(5, Rational(0)), a1_in(5, Rational(1))}) {
    const std::string label = "N=5 gamma=" + fmt(rs.gamma());
    sweep(o, label, FamilyKind::Thm41, rs, 2.0, 0.02, 0.02);
  }
  const auto rs = a1_in(5, Rational(1, 2));
  const auto corpus = hardy_rellich_corpus(rs, 50, 2, 7);
  report(o, "corpus",
         quotient_lower_bound(rs, FunctionalId::HardyRellichWeighted, corpus, sphere_rule_for(rs, 10),
                              hr_weighted_constant(rs.effective_dim())));
  return o;
}

Outcome c5_hr() {
  Outcome o;
  const auto r5 = a1_in(5, Rational(0));
  const auto r7 = a1_in(7, Rational(1));
  sweep(o, "N=5 gamma=0", FamilyKind::Thm42, r5, 2.0, 0.02, 0.02);
  sweep(o, "N=7 gamma=1", FamilyKind::Thm42, r7, 2.0, 0.02, 0.02);

  report(o, "corpus N=5",
         quotient_lower_bound(r5, FunctionalId::HardyRellich, hardy_rellich_corpus(r5, 50, 2, 7),
                              sphere_rule_for(r5, 10), hr_constant(r5.effective_dim())));
  MeasureOptions opts;
  opts.coarse_order = 4;
  report(o, "corpus N=7",
         quotient_lower_bound(r7, FunctionalId::HardyRellich, hardy_rellich_corpus(r7, 50, 1, 7),
                              sphere_rule_for(r7, 5), hr_constant(r7.effective_dim()), 2.0, opts));
  return o;
}

Outcome c6_domains() {
  Outcome o;
  const Rational half(1, 2);
  struct Case {
    std::string label;
    RootSystem rs;
    DomainSpec spec;
  };
  const std::vector<Case> cases{
      {"halfspace A(2) in R^4", build_root_system(Family::A, 2, {half}, 4), {DomainKind::Halfspace, 4, 1.0, 3}},
      {"wedge A(2)", build_root_system(Family::A, 2, {half}), {DomainKind::WedgeSN, 3, 1.0, 0}},
      {"exterior ball A(2)", build_root_system(Family::A, 2, {half}), {DomainKind::ExteriorBall, 3, 1.0, 0}},
      {"exterior ball Z2^3", build_root_system(Family::Z2, 3, {half, half, half}),
       {DomainKind::ExteriorBall, 3, 1.0, 0}}};
  for (const auto& c : cases) {
    const DistanceData d = distance_data(c.spec, c.rs);
    const double nbar = c.rs.effective_dim();
    const auto corpus = domain_corpus(c.rs, d, 20, 11);
    const auto rule = sphere_rule_for(c.rs, c.rs.dim() <= 3 ? 48 : 32);
    for (double p : {2.0, nbar + 1.0})
      for (const auto& r : hardy_domain_reports(c.rs, d, p, corpus, rule, standard_epsilons(p, nbar)))
        report(o, c.label + " p=" + fmt(p) + " " + r.theorem, r);
  }
  return o;
}

Outcome c7_identities() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::vector<RootSystem> systems;
  systems.push_back(build_root_system(Family::A, 2, {random_multiplicity(rng)}));
  systems.push_back(build_root_system(Family::A, 3, {random_multiplicity(rng)}));
  systems.push_back(build_root_system(Family::B, 2, {random_multiplicity(rng), random_multiplicity(rng)}));
  systems.push_back(
      build_root_system(Family::Z2, 3, {random_multiplicity(rng), random_multiplicity(rng), random_multiplicity(rng)}));
  systems.push_back(
      build_root_system(Family::I2, 2, {random_multiplicity(rng), random_multiplicity(rng)}, 0, 4));

  std::uniform_int_distribution<int> coin(0, 1);
  std::size_t checks = 0;
  for (const auto& rs : systems) {
    const int N = rs.dim();
    const std::string name = family_name(rs.spec().family);
    const Polynomial r2 = Polynomial::norm_squared(N);
    for (int c = 0; c < 20; ++c) {
      const Polynomial p = random_polynomial(N, 6, rng);
      const Polynomial q = random_polynomial(N, 3, rng, 3);
      for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j, ++checks)
          o.require(commutativity_check(rs, i, j, p).commute, name + " commutativity");
      ++checks;
      o.require(dunkl_laplacian_via_operators(rs, p) == dunkl_laplacian_via_formula(rs, p), name + " laplacian");
      for (int i = 0; i < N; ++i) {
        checks += 2;
        o.require(leibniz_check(rs, p, q, i).ok(), name + " leibniz");
        const LeibnizReport inv = leibniz_check(rs, r2, p, i);
        o.require(inv.short_rule_applies && inv.ok(), name + " invariant leibniz");
      }
      for (const auto& a : rs.positive_roots()) {
        ++checks;
        o.require(rational_divided_difference(p, a) * Polynomial::linear(a.direction) == p - reflect_polynomial(p, a),
                  name + " divided difference");
      }
      std::vector<bool> flip(rs.positive_roots().size());
      for (std::size_t r = 0; r < flip.size(); ++r) flip[r] = coin(rng) == 1;
      flip[static_cast<std::size_t>(c) % flip.size()] = true;
      for (int i = 0; i < N; ++i, ++checks)
        o.require(positive_subsystem_independence(rs, flip, p, i), name + " positive subsystem");
    }
  }
  if (o.pass) o.note = std::to_string(checks) + " exact checks on 100 polynomials";
  return o;
}

Outcome c8_harmonics() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::vector<RootSystem> systems;
  for (const Rational& k : {Rational(0), Rational(1, 2), Rational(1), random_multiplicity(rng)}) {
    systems.push_back(build_root_system(Family::Z2, 1, {k}));
    systems.push_back(build_root_system(Family::B, 2, {k, k}));
    systems.push_back(build_root_system(Family::A, 2, {k}));
    systems.push_back(build_root_system(Family::A, 3, {k}));
  }
  systems.push_back(build_root_system(Family::B, 2, {random_multiplicity(rng), random_multiplicity(rng)}));
  systems.push_back(build_root_system(Family::Z2, 3, {random_multiplicity(rng), random_multiplicity(rng),
                                                      random_multiplicity(rng)}));
  systems.push_back(build_root_system(Family::I2, 2, {random_multiplicity(rng), random_multiplicity(rng)}, 0, 4));
  for (const auto& rs : systems) {
    const std::string name = family_name(rs.spec().family) + "(" + std::to_string(rs.rank()) + ") gamma=" +
                             fmt(rs.gamma());
    for (int n = 0; n <= 6; ++n) {
      const auto kernel = hharmonic_kernel(rs, n);
      o.require(static_cast<long long>(kernel.size()) == hharmonic_dim(n, rs.dim()),
                name + " d(" + std::to_string(n) + ")");
      for (const auto& y : kernel) {
        o.require(dunkl_laplacian_sym(rs, y).is_zero(), name + " Delta_k Y");
        o.require(sphere_eigencheck(rs, y).is_zero(), name + " eigenvalue");
      }
    }
  }

  // Parseval needs a sphere rule exact for the weight, so integer multiplicities.
  double worst = 0.0;
  for (const auto& rs : {build_root_system(Family::A, 2, {Rational(0)}), build_root_system(Family::A, 2, {Rational(1)}),
                         build_root_system(Family::B, 2, {Rational(1), Rational(1)}),
                         build_root_system(Family::Z2, 3, {Rational(1), Rational(0), Rational(1)}),
                         build_root_system(Family::A, 3, {Rational(0)})}) {
    const int nmax = 3;
    const auto rule = sphere_rule_for(rs, 2 * (nmax + 3) + static_cast<int>(std::lround(2 * rs.gamma())) + 2);
    const auto bases = build_bases(rs, nmax, rule);
    for (const auto& m : damped_polynomial_corpus(rs, 3, 3, 5)) {
      const ScalarField f = [&](std::span<const double> x) { return m.f->value(x); };
      worst = std::max(worst, parseval_residual(rs, f, expand(rs, f, bases, m.grid, rule), m.grid, rule));
    }
  }
  o.require(worst < 1e-5, "Parseval residual " + fmt(worst));
  if (o.pass) o.note = "max Parseval residual " + fmt(worst);
  return o;
}

Outcome c9_geometry() {
  Outcome o;
  const Rational half(1, 2);
  const struct {
    RootSystem rs;
    std::size_t order;
  } groups[] = {{build_root_system(Family::A, 2, {half}), 6},
                {build_root_system(Family::A, 3, {half}), 24},
                {build_root_system(Family::B, 2, {half, Rational(1)}), 8},
                {build_root_system(Family::Z2, 3, {half, half, half}), 8},
                {build_root_system(Family::I2, 2, {half, half}, 0, 4), 8}};
  for (const auto& g : groups) {
    const std::string name = family_name(g.rs.spec().family);
    for (const auto& a : g.rs.roots()) o.require(reflection_jacobian_exact(a) == -1, name + " Jacobian");
    o.require(generate_group(g.rs).order() == g.order, name + " group order");
  }

  double worst = 0.0;
  const auto check = [&](const RootSystem& rs, const DomainSpec& spec, bool radial) {
    const DistanceData d = distance_data(spec, rs);
    const auto samples = domain_samples(d, rs, 50, spec.radius + 0.1, 4.0, 3);
    for (const auto& x : samples) {
      const double expect = radial ? 2.0 * rs.gamma() / norm(x) : 0.0;
      worst = std::max(worst, std::abs(rho_pairing(d, rs, x) - expect));
    }
    const auto eq = equivariance_check(d, rs, samples);
    o.require(eq.holds(1e-12), domain_name(spec.kind) + " equivariance " + fmt(eq.worst));
  };
  const auto a2 = build_root_system(Family::A, 2, {half});
  check(a2, {DomainKind::ExteriorBall, 3, 1.0, 0}, true);
  check(build_root_system(Family::Z2, 3, {half, Rational(1), Rational(2)}), {DomainKind::ExteriorBall, 3, 1.5, 0},
        true);
  check(build_root_system(Family::A, 2, {half}, 4), {DomainKind::Halfspace, 4, 1.0, 3}, false);
  check(a2, {DomainKind::WedgeSN, 3, 1.0, 0}, false);
  check(build_root_system(Family::A, 3, {Rational(1)}), {DomainKind::WedgeSN, 4, 1.0, 0}, false);
  o.require(worst < 1e-12, "rho pairing " + fmt(worst));
  return o;
}

Outcome c10_mode_algebra() {
  Outcome o;
  std::size_t checks = 0;
  for (int N = 1; N <= 9; ++N)
    for (const Rational& g : {Rational(0), Rational(1, 2), Rational(1), Rational(2)}) {
      const Rational nbar = Rational(N) + 2 * g;
      const Rational C = nbar * nbar / 4;
      const std::string at = " N=" + std::to_string(N) + " gamma=" + g.get_str();
      const auto m0 = mode_coefficients(nbar, g, 0, C);
      const auto m1 = mode_coefficients(nbar, g, 1, C);
      const auto m2 = mode_coefficients(nbar, g, 2, C);
      o.require(m0.B == 0, "B_0" + at);
      o.require(m1.D == ((N - 5 - 2 * g) * nbar * nbar + 4) / 4, "D_1 formula" + at);
      o.require(m2.D == 2 * N * nbar * nbar / 4, "D_2 formula" + at);
      checks += 3;
      if (Rational(N) >= 5 + 2 * g) {
        o.require(m1.D >= 0, "D_1 >= 0" + at);
        o.require(m2.D >= 0, "D_2 >= 0" + at);
        checks += 2;
        for (int n = 3; n <= 10; ++n, ++checks)
          o.require(mode_coefficients(nbar, g, n, C).D >= m2.D, "D_" + std::to_string(n) + " >= D_2" + at);
      }
    }
  if (o.pass) o.note = std::to_string(checks) + " exact relations";
  return o;
}

Outcome c11_oracle_equivalence() {
  Outcome o;
  o.require(g_sweeps > 0, "no sweeps ran");
  o.require(g_breach.empty(), g_breach);
  o.require(g_max_disagreement < 1e-6, "max relative disagreement " + fmt(g_max_disagreement));
  if (o.pass)
    o.note = std::to_string(g_sweeps) + " sweeps, max relative disagreement " + fmt(g_max_disagreement);
  return o;
}

}  // namespace

int main() {
  const struct {
    int id;
    std::string title;
    double limit;  // seconds
    std::function<Outcome()> run;
  } criteria[] = {
      {1, "sharp L^p Hardy", 30.0, c1_lp_hardy},
      {2, "sharp L^2 Hardy", 5.0, c2_l2_hardy},
      {3, "Rellich", 20.0, c3_rellich},
      {4, "weighted Hardy-Rellich", 60.0, c4_weighted_hr},
      {5, "Hardy-Rellich", 60.0, c5_hr},
      {6, "Hardy inequalities on domains", 60.0, c6_domains},
      {7, "exact identities", 30.0, c7_identities},
      {8, "h-harmonics", 120.0, c8_harmonics},
      {9, "geometry", 5.0, c9_geometry},
      {10, "mode algebra", 1.0, c10_mode_algebra},
      {11, "oracle equivalence", kInfinity, c11_oracle_equivalence},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= c.limit) o.require(false, "runtime " + fmt(secs) + " s over " + fmt(c.limit) + " s");
    if (o.pass && o.note.empty() && o.gap >= 0.0)
      o.note = "max rel gap " + fmt(o.gap) + " (closed form), " + fmt(o.qgap) + " (quadrature)";
    if (!o.pass) ++failed;
    std::printf("%s criterion %2d (%s) %.2f s%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                o.note.empty() ? "" : ": ", o.note.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
