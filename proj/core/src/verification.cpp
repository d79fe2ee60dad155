#include "dunkl/verification.hpp"

#include <cmath>
#include <sstream>

#include "dunkl/errors.hpp"

namespace dunkl {

VerificationReport quotient_lower_bound(const RootSystem& rs, FunctionalId functional, const Corpus& corpus,
                                        const SphericalRule& rule, double target, double p,
                                        const MeasureOptions& opts) {
  VerificationReport rep;
  rep.theorem = functional_name(functional) + "_lower_bound";
  rep.corpus = std::to_string(corpus.size()) + " functions";
  for (const auto& m : corpus) {
    Quotient q;
    switch (functional) {
      case FunctionalId::Hardy: {
        const DistanceData d = distance_data({DomainKind::PuncturedSpace, rs.dim()}, rs);
        q = hardy_quotient_p(rs, *m.f, p, d, m.grid, rule, opts);
        break;
      }
      case FunctionalId::Rellich: q = rellich_quotient(rs, *m.f, m.grid, rule, opts); break;
      case FunctionalId::HardyRellichWeighted: q = hr_weighted_quotient(rs, *m.f, m.grid, rule, opts); break;
      case FunctionalId::HardyRellich: q = hr_quotient(rs, *m.f, m.grid, rule, opts); break;
    }
    rep.add(m.name, q.numerator.value, target * q.denominator.value,
            q.numerator.estimated_error + std::abs(target) * q.denominator.estimated_error);
  }
  return rep;
}

std::vector<double> standard_epsilons(double p, double nbar) {
  const double e1 = optimal_epsilon(p);
  const double e2 = p > nbar ? exterior_ball_epsilon(p, nbar) : 1.1 * e1;
  return {e1, e2, 2.0};
}

std::vector<VerificationReport> hardy_domain_reports(const RootSystem& rs, const DistanceData& domain, double p,
                                                     const Corpus& corpus, const SphericalRule& rule,
                                                     const std::vector<double>& epsilons) {
  const DomainKind kind = domain.spec().kind;
  const double nbar = rs.effective_dim();
  const std::string where = domain_name(kind);
  const std::string desc = std::to_string(corpus.size()) + " functions on " + where;

  auto make = [&](const std::string& id) {
    VerificationReport r;
    r.theorem = id;
    r.corpus = desc;
    return r;
  };
  std::vector<VerificationReport> reps{make("hardy_remainder/" + where)};
  const bool flat = kind == DomainKind::Halfspace || kind == DomainKind::WedgeSN;
  const bool ball = kind == DomainKind::ExteriorBall;
  if (flat) reps.push_back(make("hardy_leading/" + where));
  std::vector<std::size_t> eps_slot;
  if (ball) {
    for (double e : epsilons) {
      std::ostringstream os;
      os.precision(6);
      os << "hardy_epsilon_form/" << where << "/eps=" << e;
      eps_slot.push_back(reps.size());
      reps.push_back(make(os.str()));
    }
    if (p > nbar) reps.push_back(make("hardy_exterior_ball_sharp/" + where));
  }

  for (const auto& m : corpus) {
    const HardyTerms t = hardy_terms(rs, *m.f, p, domain, m.grid, rule);
    auto add = [&](VerificationReport& r, const Bound& b) {
      r.add(m.name, t.gradient.value, b.value, t.gradient.estimated_error + b.error);
    };
    std::size_t slot = 0;
    add(reps[slot++], remainder_bound(t));
    if (flat) add(reps[slot++], leading_bound(t));
    if (ball) {
      for (std::size_t i = 0; i < epsilons.size(); ++i) add(reps[eps_slot[i]], epsilon_bound(t, epsilons[i]));
      if (p > nbar) add(reps.back(), exterior_ball_bound(t, nbar));
    }
  }
  return reps;
}

VerificationReport mode_functional_report(double nbar, double gamma, double C, const std::vector<int>& modes,
                                          const std::vector<ProfileMember>& corpus) {
  VerificationReport rep;
  rep.theorem = "hardy_rellich_mode_functional";
  rep.corpus = std::to_string(corpus.size()) + " radial profiles";
  for (int n : modes)
    for (const auto& m : corpus) {
      const ModeFunctional f = mode_functional_thm42(nbar, gamma, C, n, *m.q, m.grid);
      // The radial mode only claims I >= 0.
      const double rhs = n == 0 ? 0.0 : f.coefficients.D * f.mass;
      rep.add("n=" + std::to_string(n) + ":" + m.name, f.value, rhs, f.error);
    }
  return rep;
}

VerificationReport radial_hardy_report(double exponent, const std::vector<ProfileMember>& corpus) {
  VerificationReport rep;
  rep.theorem = "radial_weighted_hardy";
  rep.corpus = std::to_string(corpus.size()) + " radial profiles";
  const double c = radial_hardy_1d_constant(exponent);
  for (const auto& m : corpus) {
    const Quotient q = radial_hardy_1d(exponent, *m.q, m.grid);
    rep.add(m.name, q.numerator.value, c * q.denominator.value,
            q.numerator.estimated_error + c * q.denominator.estimated_error);
  }
  return rep;
}

}  // namespace dunkl
