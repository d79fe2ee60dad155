#pragma once

// Corpus runners turning functional evaluations into verification reports.

#include <vector>

#include "dunkl/corpus.hpp"
#include "dunkl/functionals.hpp"
#include "dunkl/report.hpp"
#include "dunkl/sweeps.hpp"

namespace dunkl {

/// Checks numerator >= target * denominator for each member, i.e. that the
/// quotient of the chosen functional stays above its sharp constant.
VerificationReport quotient_lower_bound(const RootSystem& rs, FunctionalId functional, const Corpus& corpus,
                                        const SphericalRule& rule, double target, double p = 2.0,
                                        const MeasureOptions& opts = {});

/// All domain forms of the Hardy inequality that apply to the domain:
/// the remainder form everywhere, the leading form on half-space and wedge,
/// the epsilon form at each of `epsilons` and the sharp exterior-ball form
/// (p > Nbar) on the exterior ball.
std::vector<VerificationReport> hardy_domain_reports(const RootSystem& rs, const DistanceData& domain, double p,
                                                     const Corpus& corpus, const SphericalRule& rule,
                                                     const std::vector<double>& epsilons);

/// The three epsilon values used for the exterior ball: the maximiser of the
/// leading constant, the exterior-ball optimum (or 1.1 times the former when
/// p <= Nbar) and 2.
std::vector<double> standard_epsilons(double p, double nbar);

/// I_n >= D_n int u^2 r^(Nbar-5) on the profile corpus for each listed mode
/// (I_0 >= 0 for the radial mode).
VerificationReport mode_functional_report(double nbar, double gamma, double C, const std::vector<int>& modes,
                                          const std::vector<ProfileMember>& corpus);

/// One-dimensional weighted Hardy quotient >= (e-1)^2/4 on the profile corpus.
VerificationReport radial_hardy_report(double exponent, const std::vector<ProfileMember>& corpus);

}  // namespace dunkl
