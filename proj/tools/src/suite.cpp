#include "dunkl_cli/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "dunkl/corpus.hpp"
#include "dunkl/domains.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/functionals.hpp"
#include "dunkl/harmonics.hpp"
#include "dunkl/polyalg.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/sweeps.hpp"
#include "dunkl/verification.hpp"

namespace dunkl::cli {

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Identities: return "identities";
    case Suite::Harmonics: return "harmonics";
    case Suite::Hardy: return "hardy";
    case Suite::HardyRellich: return "hardy-rellich";
    case Suite::All: return "all";
  }
  return "?";
}

Suite parse_suite(const std::string& name) {
  for (Suite s : {Suite::Identities, Suite::Harmonics, Suite::Hardy, Suite::HardyRellich, Suite::All})
    if (suite_name(s) == name) return s;
  throw InvalidInput("unknown suite '" + name + "' (identities, harmonics, hardy, hardy-rellich, all)");
}

std::vector<Rational> parse_multiplicities(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw InvalidInput("empty multiplicity list");
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end == item.c_str() || *end != '\0') throw InvalidInput("malformed number '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidInput("empty number list");
  return out;
}

void SuiteConfig::validate() const {
  if (rank < 1) throw InvalidInput("rank must be at least 1");
  if (family == Family::I2 && m < 1) throw InvalidInput("I2 needs --m >= 1");
  const int orbits = orbit_count(family, family == Family::I2 ? 2 : rank, m);
  if (k.size() != 1 && static_cast<int>(k.size()) != orbits)
    throw InvalidInput("expected 1 or " + std::to_string(orbits) + " multiplicities");
  for (const auto& v : k)
    if (v < 0) throw InvalidInput("multiplicities must be nonnegative");
  if (p && !(*p > 1.0)) throw InvalidInput("p must exceed 1");
  if (eps.empty()) throw InvalidInput("empty epsilon schedule");
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!(eps[i] >= 1e-4 && eps[i] < 1.0)) throw InvalidInput("epsilon values must lie in [1e-4, 1)");
    if (i > 0 && !(eps[i] < eps[i - 1])) throw InvalidInput("epsilon schedule must be decreasing");
  }
  if (eps.size() < 3) throw InvalidInput("epsilon schedule needs at least three values");
  if (!(tol > 0.0)) throw InvalidInput("tolerance must be positive");
  if (!(sweep_tol >= 0.0)) throw InvalidInput("sweep tolerance must be nonnegative");
  if (quad_order < 0 || quad_order > 64) throw InvalidInput("quadrature order must lie in 0..64");
  if (nmax < 0 || nmax > 8) throw InvalidInput("nmax must lie in 0..8");
  if (corpus < 1) throw InvalidInput("corpus size must be positive");
  if (max_degree < 0 || max_degree > 8) throw InvalidInput("max_degree must lie in 0..8");
}

RootSystem SuiteConfig::root_system() const {
  const int r = family == Family::I2 ? 2 : rank;
  std::vector<Rational> ks = k;
  if (ks.size() == 1) ks.assign(orbit_count(family, r, m), k.front());
  return build_root_system(family, r, ks, dim, m);
}

double SuiteConfig::hardy_p(double nbar) const { return p ? *p : nbar + 1.0; }

SuiteConfig config_from_json(const nlohmann::json& j, SuiteConfig c) {
  if (!j.is_object()) throw InvalidInput("configuration must be a JSON object");
  auto text = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  try {
    if (j.contains("suite")) c.suite = parse_suite(j["suite"].get<std::string>());
    if (j.contains("family")) c.family = parse_family(j["family"].get<std::string>());
    if (j.contains("rank")) c.rank = j["rank"].get<int>();
    if (j.contains("m")) c.m = j["m"].get<int>();
    if (j.contains("dim")) c.dim = j["dim"].get<int>();
    if (j.contains("k")) {
      const auto& v = j["k"];
      if (v.is_array()) {
        c.k.clear();
        for (const auto& x : v) c.k.push_back(parse_rational(text(x)));
      } else {
        c.k = parse_multiplicities(text(v));
      }
    }
    if (j.contains("p")) {
      const auto& v = j["p"];
      if (v.is_string() && v.get<std::string>() == "auto")
        c.p.reset();
      else
        c.p = v.get<double>();
    }
    if (j.contains("eps")) {
      const auto& v = j["eps"];
      c.eps = v.is_string() ? parse_doubles(v.get<std::string>()) : v.get<std::vector<double>>();
    }
    if (j.contains("tol")) c.tol = j["tol"].get<double>();
    if (j.contains("sweep_tol")) c.sweep_tol = j["sweep_tol"].get<double>();
    if (j.contains("quad_order")) c.quad_order = j["quad_order"].get<int>();
    if (j.contains("nmax")) c.nmax = j["nmax"].get<int>();
    if (j.contains("corpus")) c.corpus = j["corpus"].get<int>();
    if (j.contains("max_degree")) c.max_degree = j["max_degree"].get<int>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("out")) c.out = j["out"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad configuration value: ") + e.what());
  }
  return c;
}

nlohmann::json to_json(const SuiteConfig& c) {
  nlohmann::json j;
  j["suite"] = suite_name(c.suite);
  j["family"] = family_name(c.family);
  j["rank"] = c.rank;
  j["m"] = c.m;
  j["dim"] = c.dim;
  nlohmann::json ks = nlohmann::json::array();
  for (const auto& v : c.k) ks.push_back(to_string(v));
  j["k"] = ks;
  j["p"] = c.p ? nlohmann::json(*c.p) : nlohmann::json("auto");
  j["eps"] = c.eps;
  j["tol"] = c.tol;
  j["sweep_tol"] = c.sweep_tol;
  j["quad_order"] = c.quad_order;
  j["nmax"] = c.nmax;
  j["corpus"] = c.corpus;
  j["max_degree"] = c.max_degree;
  j["seed"] = c.seed;
  j["out"] = c.out.string();
  return j;
}

bool SuiteResult::pass() const {
  return std::all_of(details.begin(), details.end(), [](const Detail& d) { return d.pass; });
}

void SuiteResult::append(SuiteResult other) {
  for (auto& d : other.details) details.push_back(std::move(d));
  for (auto& [k, v] : other.csv) csv[k] = std::move(v);
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

bool integer_multiplicities(const RootSystem& rs) {
  for (int o = 0; o < rs.orbit_count(); ++o)
    if (rs.spec().multiplicities[o].get_den() != 1) return false;
  return true;
}

// Exact degree 2 gamma of omega_k when every k is an integer.
int weight_degree(const RootSystem& rs) { return static_cast<int>(std::lround(2.0 * rs.gamma())); }

long long known_group_order(const RootSystem& rs) {
  const int n = rs.rank();
  long long f = 1;
  switch (rs.family()) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) f *= i;
      return f;
    case Family::B:
      for (int i = 2; i <= n; ++i) f *= i;
      return f << n;
    case Family::Z2: return 1LL << n;
    case Family::I2: return 2LL * rs.spec().m;
  }
  return 0;
}

Detail exact_detail(std::string name, std::string theorem, std::size_t checks, std::size_t failures,
                    nlohmann::json extra = nlohmann::json::object()) {
  Detail d{std::move(name), std::move(theorem), failures == 0, false, 0.0, std::move(extra)};
  d.data["checks"] = checks;
  d.data["failures"] = failures;
  return d;
}

Detail skipped_detail(std::string name, std::string theorem, std::string reason) {
  Detail d{std::move(name), std::move(theorem), true, true, 0.0, {}};
  d.data["reason"] = std::move(reason);
  return d;
}

Detail report_detail(const std::string& name, VerificationReport rep, double tol) {
  rep.set_tolerance(tol);
  return {name, rep.theorem, rep.pass(), false, tol, to_json(rep)};
}

int sphere_order(const SuiteConfig& cfg, int automatic) { return cfg.quad_order > 0 ? cfg.quad_order : automatic; }

// ---------------------------------------------------------------------------

SuiteResult identities(const SuiteConfig& cfg, const RootSystem& rs) {
  if (!rs.exact())
    throw InvalidInput("the identity suite needs roots with rational directions (I2(m) only for m in {1, 2, 4})");
  SuiteResult res;
  res.suite = "identities";
  const int N = rs.dim();
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> coin(0, 1);
  const Polynomial r2 = Polynomial::norm_squared(N);

  std::size_t comm = 0, comm_fail = 0, lap = 0, lap_fail = 0, leib = 0, leib_fail = 0;
  std::size_t dd = 0, dd_fail = 0, psi = 0, psi_fail = 0;
  for (int c = 0; c < cfg.corpus; ++c) {
    const Polynomial p = random_polynomial(N, cfg.max_degree, rng);
    const Polynomial q = random_polynomial(N, std::max(1, cfg.max_degree / 2), rng, 3);
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j, ++comm)
        if (!commutativity_check(rs, i, j, p).commute) ++comm_fail;
    ++lap;
    if (!(dunkl_laplacian_via_operators(rs, p) == dunkl_laplacian_via_formula(rs, p))) ++lap_fail;
    for (int i = 0; i < N; ++i) {
      leib += 2;
      if (!leibniz_check(rs, p, q, i).ok()) ++leib_fail;
      const LeibnizReport inv = leibniz_check(rs, r2, p, i);
      if (!inv.ok() || !inv.short_rule_applies) ++leib_fail;
    }
    for (const auto& a : rs.positive_roots()) {
      ++dd;
      const Polynomial lhs = rational_divided_difference(p, a) * Polynomial::linear(a.direction);
      if (!(lhs == p - reflect_polynomial(p, a))) ++dd_fail;
    }
    std::vector<bool> flip(rs.positive_roots().size());
    for (std::size_t r = 0; r < flip.size(); ++r) flip[r] = coin(rng) == 1;
    flip[c % flip.size()] = true;
    for (int i = 0; i < N; ++i, ++psi)
      if (!positive_subsystem_independence(rs, flip, p, i)) ++psi_fail;
  }
  res.details.push_back(exact_detail("commutativity", "dunkl_commutativity", comm, comm_fail));
  res.details.push_back(exact_detail("laplacian_formulas", "dunkl_laplacian_two_formulas", lap, lap_fail));
  res.details.push_back(exact_detail("leibniz", "dunkl_leibniz_rules", leib, leib_fail));
  res.details.push_back(exact_detail("divided_difference", "divided_difference_exact", dd, dd_fail));
  res.details.push_back(
      exact_detail("positive_subsystem", "positive_subsystem_independence", psi, psi_fail));

  std::size_t jac_fail = 0;
  for (const auto& a : rs.positive_roots())
    if (reflection_jacobian_exact(a) != -1) ++jac_fail;
  res.details.push_back(exact_detail("jacobian", "reflection_jacobian", rs.positive_roots().size(), jac_fail));

  const ReflectionGroup g = generate_group(rs);
  const long long expected = known_group_order(rs);
  Detail order = exact_detail("group_order", "reflection_group_order", 1, g.order() == std::size_t(expected) ? 0 : 1);
  order.data["order"] = g.order();
  order.data["expected"] = expected;
  res.details.push_back(std::move(order));

  if (!integer_multiplicities(rs)) {
    const std::string why = "weight is not polynomial on the sphere; the sphere rule is not exact for it";
    res.details.push_back(skipped_detail("reflected_measure", "reflected_measure_invariance", why));
    res.details.push_back(skipped_detail("integration_by_parts", "dunkl_integration_by_parts", why));
    return res;
  }
  const SphericalRule rule = sphere_rule_for(rs, sphere_order(cfg, 8 + weight_degree(rs)));
  const Corpus damped = damped_polynomial_corpus(rs, 2, 2, cfg.seed);
  double refl = 0.0, ibp = 0.0;
  for (std::size_t a = 0; a < damped.size(); ++a) {
    const auto& m = damped[a];
    refl = std::max(refl, reflected_measure_invariance(
                              rs, [&](std::span<const double> x) { return m.f->value(x); }, m.grid, rule));
    const auto& v = damped[(a + 1) % damped.size()];
    for (int i = 0; i < N; ++i)
      ibp = std::max(ibp, integration_by_parts_residual(rs, *m.f, *v.f, i, m.grid, rule));
  }
  const double qtol = 1e-8;
  res.details.push_back({"reflected_measure", "reflected_measure_invariance", refl < qtol, false, qtol,
                         {{"worst_residual", refl}, {"sphere_order", rule.order}}});
  res.details.push_back({"integration_by_parts", "dunkl_integration_by_parts", ibp < qtol, false, qtol,
                         {{"worst_residual", ibp}, {"sphere_order", rule.order}}});
  return res;
}

// ---------------------------------------------------------------------------

SuiteResult harmonics(const SuiteConfig& cfg, const RootSystem& rs) {
  if (!rs.exact())
    throw InvalidInput("the harmonics suite needs roots with rational directions (I2(m) only for m in {1, 2, 4})");
  SuiteResult res;
  res.suite = "harmonics";
  const int N = rs.dim();
  const Rational nbar = Rational(N) + 2 * rs.summary().gamma;

  for (int n = 0; n <= cfg.nmax; ++n) {
    const long long expected = hharmonic_dim(n, N);
    Detail d{"degree_" + std::to_string(n), "hharmonic_dimension", true, false, 0.0, {}};
    d.data["n"] = n;
    d.data["expected_dim"] = expected;
    d.data["eigenvalue"] = to_string(hharmonic_eigenvalue(n, nbar));
    try {
      const auto kernel = hharmonic_kernel(rs, n);
      std::size_t lap_fail = 0, eig_fail = 0;
      for (const auto& y : kernel) {
        if (!dunkl_laplacian_sym(rs, y).is_zero()) ++lap_fail;
        if (!sphere_eigencheck(rs, y).is_zero()) ++eig_fail;
      }
      d.data["kernel_dim"] = kernel.size();
      d.data["laplacian_failures"] = lap_fail;
      d.data["eigenvalue_failures"] = eig_fail;
      d.pass = static_cast<long long>(kernel.size()) == expected && lap_fail == 0 && eig_fail == 0;
    } catch (const InvariantBreach& e) {
      d.pass = false;
      d.data["error"] = e.what();
    }
    res.details.push_back(std::move(d));
  }

  if (!integer_multiplicities(rs)) {
    const std::string why = "weight is not polynomial on the sphere; the sphere rule is not exact for it";
    res.details.push_back(skipped_detail("parseval", "hharmonic_parseval", why));
    res.details.push_back(skipped_detail("mean_projection", "mean_projection_invariance", why));
    res.details.push_back(skipped_detail("cross_term", "cross_term_bound", why));
    return res;
  }
  const int pdeg = std::min(cfg.nmax, 3);
  const SphericalRule rule = sphere_rule_for(rs, sphere_order(cfg, 2 * (cfg.nmax + pdeg) + weight_degree(rs) + 2));
  const auto bases = build_bases(rs, cfg.nmax, rule);
  const Corpus damped = damped_polynomial_corpus(rs, std::min(cfg.corpus, 5), pdeg, cfg.seed);
  double parseval = 0.0, mean = 0.0;
  std::size_t cross_fail = 0;
  for (const auto& m : damped) {
    const ScalarField u = [&](std::span<const double> x) { return m.f->value(x); };
    parseval = std::max(parseval, parseval_residual(rs, u, expand(rs, u, bases, m.grid, rule), m.grid, rule));
    mean = std::max(mean, mean_projection_invariance(rs, u, m.grid, rule));
    if (!cross_term_bound_check(rs, u, m.grid, rule).holds) ++cross_fail;
  }
  const double ptol = 1e-5, mtol = 1e-8;
  res.details.push_back({"parseval", "hharmonic_parseval", parseval < ptol, false, ptol,
                         {{"worst_residual", parseval}, {"sphere_order", rule.order}, {"functions", damped.size()}}});
  res.details.push_back({"mean_projection", "mean_projection_invariance", mean < mtol, false, mtol,
                         {{"worst_residual", mean}, {"sphere_order", rule.order}}});
  res.details.push_back(exact_detail("cross_term", "cross_term_bound", damped.size(), cross_fail));
  return res;
}

// ---------------------------------------------------------------------------

std::string sweep_theorem(FamilyKind k) {
  switch (k) {
    case FamilyKind::HardyP: return "sharp_lp_hardy";
    case FamilyKind::Hardy2: return "sharp_l2_hardy";
    case FamilyKind::Rellich: return "sharp_rellich";
    case FamilyKind::Thm41: return "sharp_weighted_hardy_rellich";
    case FamilyKind::Thm42:
    case FamilyKind::Thm42Printed: return "sharp_hardy_rellich";
  }
  return "?";
}

void run_sweep(SuiteResult& res, const SuiteConfig& cfg, const RootSystem& rs, FamilyKind kind, double p) {
  const std::string name = family_kind_name(kind);
  SweepOptions opts;
  opts.tolerance = opts.quadrature_tolerance = cfg.sweep_tol;
  Detail d{"sweep/" + name, sweep_theorem(kind), false, false, 0.0, {}};
  try {
    const RayleighSweep s = sharpness_sweep(make_family(kind, rs, p), rs, cfg.eps, opts);
    d.pass = s.converged();
    d.tolerance = s.tolerance;
    d.data = to_json(s);
    res.csv[res.suite + "_" + name] = to_csv(s);
  } catch (const Error& e) {
    d.data["error"] = e.what();
  }
  res.details.push_back(std::move(d));
}

SuiteResult hardy(const SuiteConfig& cfg, const RootSystem& rs) {
  SuiteResult res;
  res.suite = "hardy";
  const double nbar = rs.effective_dim();
  const double p = cfg.hardy_p(nbar);

  if (p > nbar)
    run_sweep(res, cfg, rs, FamilyKind::HardyP, p);
  else
    res.details.push_back(skipped_detail("sweep/hardy_p", "sharp_lp_hardy", "needs p > Nbar"));
  if (nbar > 2.0)
    run_sweep(res, cfg, rs, FamilyKind::Hardy2, 2.0);
  else
    res.details.push_back(skipped_detail("sweep/hardy_2", "sharp_l2_hardy", "needs Nbar > 2"));

  if (nbar > 2.0) {
    const Corpus corpus = hardy_rellich_corpus(rs, cfg.corpus, 2, cfg.seed);
    const SphericalRule rule = sphere_rule_for(rs, sphere_order(cfg, 10));
    res.details.push_back(report_detail(
        "punctured_space/p=2",
        quotient_lower_bound(rs, FunctionalId::Hardy, corpus, rule, hardy2_constant(nbar), 2.0), cfg.tol));
  }

  const int N = rs.dim();
  const SphericalRule rule = sphere_rule_for(rs, sphere_order(cfg, N <= 3 ? 48 : N == 4 ? 32 : 16));
  std::vector<DomainSpec> domains{{DomainKind::ExteriorBall, N, 1.0, 0},
                                  {DomainKind::Halfspace, N, 1.0, N - 1},
                                  {DomainKind::WedgeSN, N, 1.0, 0}};
  std::vector<double> exponents{2.0};
  if (p != 2.0) exponents.push_back(p);
  for (const auto& spec : domains) {
    std::optional<DistanceData> d;
    try {
      d.emplace(distance_data(spec, rs));
    } catch (const InvalidInput& e) {
      res.details.push_back(skipped_detail("domain/" + domain_name(spec.kind), "hardy_domain", e.what()));
      continue;
    }
    const Corpus corpus = domain_corpus(rs, *d, cfg.corpus, cfg.seed);
    for (double q : exponents)
      for (auto& rep : hardy_domain_reports(rs, *d, q, corpus, rule, standard_epsilons(q, nbar))) {
        const std::string name = rep.theorem + "/p=" + fmt(q);
        res.details.push_back(report_detail(name, std::move(rep), cfg.tol));
      }
  }
  return res;
}

// ---------------------------------------------------------------------------

Detail mode_algebra(const RootSystem& rs) {
  const int N = rs.dim();
  const Rational gamma = rs.summary().gamma;
  const Rational nbar = Rational(N) + 2 * gamma;
  const Rational C = nbar * nbar / 4;
  const bool applies = Rational(N) >= 5 + 2 * gamma;
  std::size_t checks = 0, failures = 0;
  auto check = [&](bool ok) {
    ++checks;
    if (!ok) ++failures;
  };
  const auto m0 = mode_coefficients<Rational>(nbar, gamma, 0, C);
  const auto m1 = mode_coefficients<Rational>(nbar, gamma, 1, C);
  const auto m2 = mode_coefficients<Rational>(nbar, gamma, 2, C);
  check(m0.B == 0);
  check(m1.D == ((N - 5 - 2 * gamma) * nbar * nbar + 4) / 4);
  check(m2.D == 2 * N * nbar * nbar / 4);
  const Rational q = (nbar - 2) * (nbar - 2) / 4;
  for (int n = 0; n <= 10; ++n)
    check(mode_coefficients<Rational>(nbar, gamma, n, q).weighted_certificate >= 0);
  if (applies) {
    check(m1.D >= 0);
    check(m2.D >= 0);
    for (int n = 3; n <= 10; ++n) check(mode_coefficients<Rational>(nbar, gamma, n, C).D >= m2.D);
  }
  nlohmann::json extra{{"B0", to_string(m0.B)},
                       {"D1", to_string(m1.D)},
                       {"D2", to_string(m2.D)},
                       {"inequalities_checked", applies}};
  return exact_detail("mode_algebra", "hardy_rellich_mode_algebra", checks, failures, std::move(extra));
}

SuiteResult hardy_rellich(const SuiteConfig& cfg, const RootSystem& rs) {
  SuiteResult res;
  res.suite = "hardy-rellich";
  const int N = rs.dim();
  const double nbar = rs.effective_dim();
  const bool thm42 = N >= 5.0 + 2.0 * rs.gamma();

  if (nbar > 4.0)
    run_sweep(res, cfg, rs, FamilyKind::Rellich, 2.0);
  else
    res.details.push_back(skipped_detail("sweep/rellich", "sharp_rellich", "needs Nbar > 4"));
  if (nbar > 2.0)
    run_sweep(res, cfg, rs, FamilyKind::Thm41, 2.0);
  else
    res.details.push_back(skipped_detail("sweep/thm41", "sharp_weighted_hardy_rellich", "needs Nbar > 2"));
  if (thm42)
    run_sweep(res, cfg, rs, FamilyKind::Thm42, 2.0);
  else
    res.details.push_back(skipped_detail("sweep/thm42", "sharp_hardy_rellich", "needs N >= 5 + 2 gamma"));

  // Sphere orders and harmonic degrees that keep the corpus checks to seconds.
  const int order = sphere_order(cfg, N <= 5 ? 10 : N == 6 ? 6 : 5);
  const int degree = order >= 10 ? 2 : 1;
  MeasureOptions opts;
  if (order <= 6) opts.coarse_order = order - 1;
  const SphericalRule rule = sphere_rule_for(rs, order);
  const Corpus corpus = hardy_rellich_corpus(rs, cfg.corpus, degree, cfg.seed);
  if (nbar != 2.0)
    res.details.push_back(report_detail(
        "corpus/thm41",
        quotient_lower_bound(rs, FunctionalId::HardyRellichWeighted, corpus, rule, hr_weighted_constant(nbar), 2.0,
                             opts),
        cfg.tol));
  if (nbar > 4.0)
    res.details.push_back(report_detail(
        "corpus/rellich",
        quotient_lower_bound(rs, FunctionalId::Rellich, corpus, rule, rellich_constant(nbar), 2.0, opts), cfg.tol));
  if (thm42)
    res.details.push_back(report_detail(
        "corpus/thm42", quotient_lower_bound(rs, FunctionalId::HardyRellich, corpus, rule, hr_constant(nbar), 2.0, opts),
        cfg.tol));

  res.details.push_back(mode_algebra(rs));
  const auto profiles = profile_corpus(cfg.corpus, cfg.seed);
  if (thm42)
    res.details.push_back(report_detail(
        "mode_functional", mode_functional_report(nbar, rs.gamma(), nbar * nbar / 4, {0, 1, 2, 3, 4, 5}, profiles),
        cfg.tol));
  for (double e : {nbar + 1.0, nbar - 1.0})
    res.details.push_back(report_detail("radial_hardy/e=" + fmt(e), radial_hardy_report(e, profiles), cfg.tol));
  return res;
}

void round_tree(nlohmann::json& j) {
  if (j.is_number_float()) {
    j = round_significant(j.get<double>());
  } else if (j.is_structured()) {
    for (auto& v : j) round_tree(v);
  }
}

}  // namespace

SuiteResult run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const RootSystem rs = cfg.root_system();
  switch (cfg.suite) {
    case Suite::Identities: return identities(cfg, rs);
    case Suite::Harmonics: return harmonics(cfg, rs);
    case Suite::Hardy: return hardy(cfg, rs);
    case Suite::HardyRellich: return hardy_rellich(cfg, rs);
    case Suite::All: {
      SuiteResult all;
      all.suite = "all";
      for (Suite s : {Suite::Identities, Suite::Harmonics, Suite::Hardy, Suite::HardyRellich}) {
        SuiteConfig sub = cfg;
        sub.suite = s;
        SuiteResult r = run_suite(sub);
        for (auto& d : r.details) d.name = r.suite + "/" + d.name;
        all.append(std::move(r));
      }
      return all;
    }
  }
  return {};
}

double round_significant(double v, int digits) {
  if (!std::isfinite(v) || v == 0.0) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return std::strtod(buf, nullptr);
}

nlohmann::json summary_json(const SuiteResult& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["pass"] = r.pass();
  nlohmann::json details = nlohmann::json::array();
  for (const auto& d : r.details) {
    nlohmann::json e{{"name", d.name}, {"theorem", d.theorem}, {"pass", d.pass}, {"tolerance", d.tolerance}};
    if (d.skipped) e["skipped"] = true;
    e["data"] = d.data;
    details.push_back(std::move(e));
  }
  j["details"] = std::move(details);
  round_tree(j);
  return j;
}

void emit_report(const SuiteResult& r, const std::filesystem::path& out) {
  std::error_code ec;
  std::filesystem::create_directories(out, ec);
  if (ec) throw Error("cannot create " + out.string() + ": " + ec.message());
  auto write = [](const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    f << text;
    f.close();
    if (!f) throw Error("cannot write " + path.string());
  };
  write(out / "summary.json", summary_json(r).dump(2) + "\n");
  for (const auto& [stem, text] : r.csv) write(out / (stem + ".csv"), text);
}

}  // namespace dunkl::cli
