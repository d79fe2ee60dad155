#include "dunkl/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "dunkl/domains.hpp"
#include "dunkl/errors.hpp"

namespace dunkl {

std::string family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::HardyP: return "hardy_p";
    case FamilyKind::Hardy2: return "hardy_2";
    case FamilyKind::Rellich: return "rellich";
    case FamilyKind::Thm41: return "thm41";
    case FamilyKind::Thm42: return "thm42";
    case FamilyKind::Thm42Printed: return "thm42_printed";
  }
  return "?";
}

FamilyKind parse_family_kind(const std::string& name) {
  for (auto k : {FamilyKind::HardyP, FamilyKind::Hardy2, FamilyKind::Rellich, FamilyKind::Thm41, FamilyKind::Thm42,
                 FamilyKind::Thm42Printed})
    if (family_kind_name(k) == name) return k;
  throw InvalidInput("unknown extremizer family: " + name);
}

std::string functional_name(FunctionalId f) {
  switch (f) {
    case FunctionalId::Hardy: return "hardy";
    case FunctionalId::Rellich: return "rellich";
    case FunctionalId::HardyRellichWeighted: return "hardy_rellich_weighted";
    case FunctionalId::HardyRellich: return "hardy_rellich";
  }
  return "?";
}

FunctionalId ExtremizerFamily::functional() const {
  switch (kind) {
    case FamilyKind::HardyP:
    case FamilyKind::Hardy2: return FunctionalId::Hardy;
    case FamilyKind::Rellich: return FunctionalId::Rellich;
    case FamilyKind::Thm41: return FunctionalId::HardyRellichWeighted;
    default: return FunctionalId::HardyRellich;
  }
}

bool ExtremizerFamily::mollified() const { return kind != FamilyKind::HardyP && kind != FamilyKind::Hardy2; }

double ExtremizerFamily::exponent(double eps) const {
  const double nb = nbar();
  switch (kind) {
    case FamilyKind::HardyP: return (p - nb + eps) / p;
    case FamilyKind::Hardy2: return 0.5 * (nb - 2.0 + eps);
    case FamilyKind::Rellich:
    case FamilyKind::Thm42: return 0.5 * (nb - 4.0 + eps);
    case FamilyKind::Thm41: return 0.5 * (nb - 2.0 + eps);
    case FamilyKind::Thm42Printed: return 0.5 * (dim - 4.0 + eps);
  }
  return 0.0;
}

std::shared_ptr<const PiecewisePowerProfile> ExtremizerFamily::profile(double eps) const {
  if (!(eps > 0.0)) throw InvalidInput("epsilon must be positive");
  using Piece = PiecewisePowerProfile::Piece;
  const double e = exponent(eps);
  std::vector<Piece> pieces;
  if (kind == FamilyKind::HardyP) {
    pieces.push_back({0.0, 1.0, PowerSum(1.0, e)});
    pieces.push_back({1.0, kInfinity, PowerSum(1.0, 0.0)});
  } else if (kind == FamilyKind::Hardy2) {
    pieces.push_back({0.0, 1.0, PowerSum(1.0, 0.0)});
    pieces.push_back({1.0, kInfinity, PowerSum(1.0, -e)});
  } else {
    const double a = e, r0 = 1.0 - h;
    const double c0 = std::pow(r0, -a);
    const double left[3] = {c0, 0.0, 0.0};
    const double right[3] = {1.0, -a, a * (a + 1.0)};
    pieces.push_back({0.0, r0, PowerSum(c0, 0.0)});
    pieces.push_back({r0, 1.0, quintic_join(r0, 1.0, left, right)});
    pieces.push_back({1.0, kInfinity, PowerSum(1.0, -a)});
  }
  return std::make_shared<const PiecewisePowerProfile>(std::move(pieces));
}

double ExtremizerFamily::target() const {
  const double nb = nbar();
  switch (kind) {
    case FamilyKind::HardyP: return hardy_constant(p, nb);
    case FamilyKind::Hardy2: return hardy2_constant(nb);
    case FamilyKind::Rellich: return rellich_constant(nb);
    case FamilyKind::Thm41: return hr_weighted_constant(nb);
    default: return hr_constant(nb);
  }
}

double ExtremizerFamily::formal_limit() const {
  const double nb = nbar(), e = exponent(0.0);
  switch (kind) {
    case FamilyKind::HardyP: return std::pow(e, p);
    case FamilyKind::Hardy2: return e * e;
    case FamilyKind::Rellich: return e * e * (e + 2.0 - nb) * (e + 2.0 - nb);
    default: return (e + 2.0 - nb) * (e + 2.0 - nb);
  }
}

std::vector<double> ExtremizerFamily::kinks() const {
  if (mollified()) return {1.0 - h, 1.0};
  return {1.0};
}

ExtremizerFamily make_family(FamilyKind kind, const RootSystem& rs, double p) {
  ExtremizerFamily f;
  f.kind = kind;
  f.dim = rs.dim();
  f.gamma = rs.gamma();
  f.p = kind == FamilyKind::HardyP ? p : 2.0;
  const double nb = f.nbar();
  if (kind == FamilyKind::HardyP && !(f.p > nb)) throw InvalidInput("hardy_p family needs p > Nbar");
  if (kind == FamilyKind::Hardy2 && !(nb > 2.0)) throw InvalidInput("hardy_2 family needs Nbar > 2");
  if (kind == FamilyKind::Rellich && !(nb > 4.0)) throw InvalidInput("rellich family needs Nbar > 4");
  if (kind == FamilyKind::Thm41 && !(nb > 2.0)) throw InvalidInput("thm41 family needs Nbar > 2");
  if ((kind == FamilyKind::Thm42 || kind == FamilyKind::Thm42Printed) && !(nb > 4.0))
    throw InvalidInput("thm42 family needs Nbar > 4");
  return f;
}

double oracle_quotient(const ExtremizerFamily& f, double eps) {
  const auto prof = f.profile(eps);
  const auto& P = *prof;
  const double nb = f.nbar();
  auto laplacian = [&](std::size_t i) { return P.derivative2(i) + P.derivative1(i).shifted(-1.0) * (nb - 1.0); };
  auto sq = [](const PowerSum& s) { return s * s; };
  double num = 0.0, den = 0.0;
  switch (f.functional()) {
    case FunctionalId::Hardy:
      num = P.integrate([&](std::size_t i) { return P.derivative1(i).abs_pow(f.p).shifted(nb - 1.0); });
      den = P.integrate([&](std::size_t i) { return P.pieces()[i].u.abs_pow(f.p).shifted(nb - 1.0 - f.p); });
      break;
    case FunctionalId::Rellich:
      num = P.integrate([&](std::size_t i) { return sq(laplacian(i)).shifted(nb - 1.0); });
      den = P.integrate([&](std::size_t i) { return sq(P.pieces()[i].u).shifted(nb - 5.0); });
      break;
    case FunctionalId::HardyRellichWeighted:
      num = P.integrate([&](std::size_t i) { return sq(laplacian(i)).shifted(nb + 1.0); });
      den = P.integrate([&](std::size_t i) { return sq(P.derivative1(i)).shifted(nb - 1.0); });
      break;
    case FunctionalId::HardyRellich:
      num = P.integrate([&](std::size_t i) { return sq(laplacian(i)).shifted(nb - 1.0); });
      den = P.integrate([&](std::size_t i) { return sq(P.derivative1(i)).shifted(nb - 3.0); });
      break;
  }
  if (!(den > 0.0)) throw DegenerateInput("oracle denominator is not positive");
  return num / den;
}

Quotient quadrature_quotient(const ExtremizerFamily& f, const RootSystem& rs, double eps, const SweepOptions& opts) {
  if (rs.dim() != f.dim) throw InvalidInput("family and root system dimensions differ");
  const RadialFunction u(f.dim, f.profile(eps));
  const RadialGrid grid = RadialGrid::graded(f.kinks(), opts.r_max, EndMode::Power, opts.levels, opts.nodes);
  const SphericalRule rule = sphere_rule_for(rs, opts.sphere_order);
  const MeasureOptions mo{.estimate_error = true, .coarse_order = 0};
  switch (f.functional()) {
    case FunctionalId::Hardy: {
      const DistanceData d = distance_data({DomainKind::PuncturedSpace, f.dim}, rs);
      return hardy_quotient_p(rs, u, f.p, d, grid, rule, mo);
    }
    case FunctionalId::Rellich: return rellich_quotient(rs, u, grid, rule, mo);
    case FunctionalId::HardyRellichWeighted: return hr_weighted_quotient(rs, u, grid, rule, mo);
    case FunctionalId::HardyRellich: return hr_quotient(rs, u, grid, rule, mo);
  }
  throw InvalidInput("unknown functional");
}

double richardson_limit(const std::vector<double>& eps, const std::vector<double>& q) {
  if (eps.size() != q.size() || eps.size() < 3) throw InvalidInput("extrapolation needs three points");
  std::vector<std::size_t> idx(eps.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return eps[a] < eps[b]; });
  double s = 0.0;
  for (int i = 0; i < 3; ++i) {
    double l = 1.0;
    for (int j = 0; j < 3; ++j)
      if (j != i) l *= -eps[idx[j]] / (eps[idx[i]] - eps[idx[j]]);
    s += l * q[idx[i]];
  }
  return s;
}

std::vector<double> default_epsilons() { return {0.3, 0.1, 0.03, 0.01, 0.003, 0.001}; }

double RayleighSweep::relative_gap() const { return std::abs(extrapolated - target) / std::abs(target); }

double RayleighSweep::relative_gap_quadrature() const {
  return std::abs(extrapolated_quadrature - target) / std::abs(target);
}

bool RayleighSweep::converged() const {
  if (!finite || !monotone) return false;
  if (!(relative_gap() <= tolerance)) return false;
  if (!std::isnan(extrapolated_quadrature) && !(relative_gap_quadrature() <= quadrature_tolerance)) return false;
  return true;
}

RayleighSweep sharpness_sweep(const ExtremizerFamily& f, const RootSystem& rs, const std::vector<double>& epsilons,
                              const SweepOptions& opts) {
  if (epsilons.size() < 3) throw InvalidInput("a sweep needs at least three epsilons");
  for (std::size_t i = 1; i < epsilons.size(); ++i)
    if (!(epsilons[i] < epsilons[i - 1])) throw InvalidInput("epsilons must be strictly decreasing");
  if (!(epsilons.back() >= 1e-4)) throw InvalidInput("smallest epsilon must be at least 1e-4");

  RayleighSweep s;
  s.kind = f.kind;
  s.functional = f.functional();
  s.target = f.target();
  s.formal_limit = f.formal_limit();
  s.tolerance = opts.tolerance > 0.0 ? opts.tolerance : (f.mollified() ? 0.02 : 0.01);
  s.quadrature_tolerance = opts.quadrature_tolerance > 0.0 ? opts.quadrature_tolerance : (f.mollified() ? 0.02 : 0.015);
  const double nan = std::numeric_limits<double>::quiet_NaN();

  for (double eps : epsilons) {
    SweepPoint pt{eps, 0.0, nan, 0.0};
    try {
      pt.oracle = oracle_quotient(f, eps);
    } catch (const Divergence&) {
      pt.oracle = std::numeric_limits<double>::infinity();
      s.finite = false;
    }
    if (opts.quadrature && std::isfinite(pt.oracle)) {
      const Quotient q = quadrature_quotient(f, rs, eps, opts);
      pt.quadrature = q.value;
      pt.quadrature_error = q.error();
      if (eps >= 1e-3) {
        const double rel = std::abs(q.value - pt.oracle) / std::abs(pt.oracle);
        s.max_disagreement = std::max(s.max_disagreement, rel);
        if (rel > opts.agreement) {
          std::ostringstream os;
          os << std::setprecision(15) << family_kind_name(f.kind) << " at eps=" << eps << ": oracle " << pt.oracle
             << " and quadrature " << q.value << " differ by " << rel << " (relative)";
          throw InvariantBreach(os.str());
        }
      }
    }
    s.points.push_back(pt);
  }

  for (std::size_t i = 1; i < s.points.size(); ++i) {
    const double prev = s.points[i - 1].oracle, cur = s.points[i].oracle;
    if (std::isfinite(prev) && std::isfinite(cur) && cur > prev + opts.monotone_slack * std::abs(prev))
      s.monotone = false;
  }

  std::vector<double> e, qo, qq;
  for (const auto& pt : s.points) {
    e.push_back(pt.eps);
    qo.push_back(pt.oracle);
    qq.push_back(pt.quadrature);
  }
  s.extrapolated = s.finite ? richardson_limit(e, qo) : std::numeric_limits<double>::infinity();
  s.extrapolated_quadrature = opts.quadrature && s.finite ? richardson_limit(e, qq) : nan;
  return s;
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

}  // namespace

std::string to_csv(const RayleighSweep& s) {
  std::ostringstream os;
  os << "epsilon,quotient_oracle,quotient_quadrature,target,rel_gap\n";
  for (const auto& pt : s.points)
    os << fmt(pt.eps) << ',' << fmt(pt.oracle) << ',' << fmt(pt.quadrature) << ',' << fmt(s.target) << ','
       << fmt(std::abs(pt.oracle - s.target) / std::abs(s.target)) << '\n';
  return os.str();
}

nlohmann::json to_json(const RayleighSweep& s) {
  auto num = [](double v) -> nlohmann::json {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return nullptr;
    return v > 0 ? "inf" : "-inf";
  };
  nlohmann::json j;
  j["family"] = family_kind_name(s.kind);
  j["functional"] = functional_name(s.functional);
  j["target"] = s.target;
  j["formal_limit"] = s.formal_limit;
  j["extrapolated"] = num(s.extrapolated);
  j["extrapolated_quadrature"] = num(s.extrapolated_quadrature);
  j["relative_gap"] = num(s.relative_gap());
  j["tolerance"] = s.tolerance;
  j["quadrature_tolerance"] = s.quadrature_tolerance;
  j["max_disagreement"] = s.max_disagreement;
  j["monotone"] = s.monotone;
  j["finite"] = s.finite;
  j["converged"] = s.converged();
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& pt : s.points)
    pts.push_back({{"epsilon", pt.eps},
                   {"oracle", num(pt.oracle)},
                   {"quadrature", num(pt.quadrature)},
                   {"quadrature_error", pt.quadrature_error}});
  j["points"] = std::move(pts);
  return j;
}

std::shared_ptr<const PiecewisePowerProfile> truncated_power_profile(double exponent, double eps) {
  if (!(exponent > 1.0)) throw InvalidInput("truncated power family needs exponent > 1");
  if (!(eps > 0.0)) throw InvalidInput("epsilon must be positive");
  const double c = 0.5 * (exponent - 1.0 + eps);
  std::vector<PiecewisePowerProfile::Piece> pieces{{0.0, 1.0, PowerSum(1.0, 0.0)},
                                                   {1.0, kInfinity, PowerSum(1.0, -c)}};
  return std::make_shared<const PiecewisePowerProfile>(std::move(pieces));
}

double truncated_power_oracle(double exponent, double eps) {
  const auto P = truncated_power_profile(exponent, eps);
  const double num = P->integrate([&](std::size_t i) { return (P->derivative1(i) * P->derivative1(i)).shifted(exponent); });
  const double den =
      P->integrate([&](std::size_t i) { return (P->pieces()[i].u * P->pieces()[i].u).shifted(exponent - 2.0); });
  return num / den;
}

}  // namespace dunkl
