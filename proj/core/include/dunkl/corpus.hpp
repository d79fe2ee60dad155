#pragma once

// Randomised test corpora: polynomials for the exact identities and smooth
// functions (with matching radial grids) for the inequality checks.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dunkl/domains.hpp"
#include "dunkl/dunklnum.hpp"
#include "dunkl/polynomial.hpp"
#include "dunkl/profiles.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/reflection.hpp"

namespace dunkl {

/// Random polynomial of degree <= max_degree with at most `terms` monomials
/// and small rational coefficients.
Polynomial random_polynomial(int dim, int max_degree, std::mt19937_64& rng, int terms = 6);

/// a/b with 0 <= a/b <= 2 and b <= 6.
Rational random_multiplicity(std::mt19937_64& rng);

/// 0 on [0, a], quintic rise to 1 on [a, m], quintic fall on [m, b], 0 beyond; C^2.
/// With a = 0 the profile is 1 on [0, m] instead.
std::shared_ptr<const PiecewisePowerProfile> quintic_bump_profile(double a, double m, double b);

struct CorpusMember {
  std::string name;
  FunctionPtr f;
  RadialGrid grid;
};

using Corpus = std::vector<CorpusMember>;

/// Breakpoints at 0, the support ends and the kinks; each gap inside the
/// support is split in at least two pieces no longer than `max_length`.
/// Functions without compact support are cut at `r_max`.
RadialGrid grid_for(const SmoothFunction& f, int nodes = 16, double r_max = 9.0, double max_length = 1.0);

/// Random combination of the exact h-harmonics of degree n with small integer coefficients.
Polynomial random_harmonic(const RootSystem& rs, int n, std::mt19937_64& rng);

/// Quintic bumps and Gaussians times h-harmonics of degree <= max_degree,
/// plus Gaussians centred off the hyperplanes; supports near and far from
/// the origin.
Corpus hardy_rellich_corpus(const RootSystem& rs, int count, int max_degree, std::uint64_t seed);

/// Functions supported inside the domain: tilted shifted bumps, and for the
/// exterior ball also quintic bumps times h-harmonics.
Corpus domain_corpus(const RootSystem& rs, const DistanceData& d, int count, std::uint64_t seed);

/// Gaussian times random polynomial of degree <= max_degree.
Corpus damped_polynomial_corpus(const RootSystem& rs, int count, int max_degree, std::uint64_t seed);

struct ProfileMember {
  std::string name;
  ProfilePtr q;
  RadialGrid grid;
};

/// Quintic bumps vanishing near the origin.
std::vector<ProfileMember> profile_corpus(int count, std::uint64_t seed);

}  // namespace dunkl
