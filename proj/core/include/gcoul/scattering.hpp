#pragma once

#include "gcoul/params.hpp"
#include "gcoul/specfun.hpp"

namespace gcoul {

/// rho(k) = -2ik/C^{1/2} and nu from i nu = rho theta/4 - q/(C rho).
struct Kinematics {
  cplx k;
  cplx rho_k;
  cplx nu;
};

/// Throws ZeroMomentum for k == 0. Real k uses
/// nu = -(k theta + q/k)/(2 C^{1/2}) directly (exactly real).
Kinematics kinematics(cplx k, const PotentialParams& p);

/// Regular solution
/// C^{-beta/4} s^{1/4} h^{(2beta-1)/4} e^{-rho h/2} Phi(beta/2 + i nu, beta; rho h).
cplx regular_solution(cplx k, double r, const PotentialParams& p);

/// Jost solution
/// rho^{-beta/4} e^{nu pi/2} s^{1/4} h^{(2beta-1)/4} e^{-rho h/2} Psi(beta/2 + i nu, beta; rho h).
/// Integer beta is rejected with IntegerC.
cplx jost_solution(cplx k, double r, const PotentialParams& p);

/// l = 0 S-matrix for real k > 0,
/// e^{i pi (beta/2+1)} Gamma(beta/2 + i nu)/Gamma(beta/2 - i nu).
cplx s_matrix(double k, const PotentialParams& p);

/// Same expression continued to complex k (no unit-modulus shortcut).
/// Throws PoleArgument exactly at a pole.
cplx s_matrix_continued(cplx k, const PotentialParams& p);

struct SMatrixPole {
  int n = 0;
  double kappa = 0.0;   ///< pole at k = i kappa
  double energy = 0.0;  ///< -kappa^2
};

/// Locates the n-th pole on the positive imaginary axis: the zero of
/// 1/Gamma(beta/2 + i nu(i kappa)) between the points where
/// beta/2 + i nu = -n -+ 1/2. Throws NoBoundStates for q <= 0.
SMatrixPole s_matrix_pole(int n, const PotentialParams& p);

/// One-dimensional reflection amplitude
/// (e^{-i pi/4}/2) [Gamma(1/4+i nu)/Gamma(1/4-i nu) - i Gamma(3/4+i nu)/Gamma(3/4-i nu)].
cplx reflection(double k, const PotentialParams& p);

/// Reflection amplitude as a function of real nu.
cplx reflection_of_nu(double nu);

}  // namespace gcoul
