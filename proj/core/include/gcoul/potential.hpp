#pragma once

#include <utility>
#include <vector>

#include "gcoul/params.hpp"

namespace gcoul {

/// v(r): centrifugal compensation, h^{-1} singular term, Coulomb-like tail
/// and the two short-range (h+theta)^{-2}, (h+theta)^{-3} corrections.
///
/// r = 0 is accepted only for configurations regular at the origin (no
/// centrifugal or singular term, theta > 0); otherwise SingularOrigin.
double potential(double r, const PotentialParams& p);

/// v(r) + l-term, i.e. the potential seen by -d^2/dr^2 in the radial
/// equation once the centrifugal barrier is added back. It does not depend
/// on D or l.
double effective_potential(double r, const PotentialParams& p);

/// v(r) + q/theta with the Coulomb pieces combined as q h / (theta (h+theta)).
/// Throws ThetaZero for theta == 0.
double shifted_potential(double r, const PotentialParams& p);

/// One-dimensional potential v(|x|).
double potential_1d(double x, const PotentialParams& p);

/// Laplacian-based charge density for D = 3, l = 0, beta in {1/2, 3/2}:
/// prefactor * Delta v(r). With prefactor = 1 this returns Delta v itself;
/// the physical density uses prefactor = -hbar^2/(8 pi m e).
/// Throws UnsupportedConfiguration otherwise.
double charge_density(double r, const PotentialParams& p, double prefactor = 1.0);

/// Oscillator-limit parameters: C~ = C/theta and q~ = q/theta^2.
struct OscillatorLimitParams {
  double C_tilde = 1.0;
  double q_tilde = 1.0;
};

OscillatorLimitParams oscillator_limit(const PotentialParams& p);

/// Parameters reproducing (C~, q~) at the given theta: C = C~ theta, q = q~ theta^2.
PotentialParams from_oscillator_limit(const OscillatorLimitParams& o, double theta, double beta,
                                      int D = 3, int l = 0);

/// Coulomb -> oscillator dimension map with l_O = 2 l_C + lambda and
/// l_O + D_O/2 = 2 l_C + D_C - 1. Throws NonIntegerDimension when D_O <= 0.
std::pair<int, int> dimension_map(int l_C, int D_C, int lambda = 0);

enum class ProfileVariant { radial, shifted, one_dimensional };

struct PotentialProfile {
  std::vector<double> grid;
  std::vector<double> values;
  PotentialParams params;
  ProfileVariant variant = ProfileVariant::radial;
};

/// Samples the chosen variant on a strictly increasing grid.
PotentialProfile make_profile(const PotentialParams& p, std::vector<double> grid,
                              ProfileVariant variant = ProfileVariant::radial);

}  // namespace gcoul
