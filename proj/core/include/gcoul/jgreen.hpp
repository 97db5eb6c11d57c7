#pragma once

#include <Eigen/Dense>

#include "gcoul/specfun.hpp"
#include "gcoul/sturmian.hpp"

namespace gcoul {

/// Matrix of epsilon - H0 on the Sturmian basis (symmetric tridiagonal,
/// affine in epsilon).
struct JMatrix {
  cplx epsilon;
  SturmianSpec spec;
  double q = 0.0;

  /// <n|eps - H0|n> = eps (2n+beta+rho theta)/(C^{1/2} rho)
  ///                  - C^{1/2} rho (2n+beta)/4 + q/C^{1/2}.
  cplx diag(int n) const;
  /// <n|eps - H0|n+1> = -(eps/(C^{1/2} rho) + C^{1/2} rho/4) ((n+1)(n+beta))^{1/2}.
  cplx off(int n) const;
};

JMatrix make_jmatrix(cplx epsilon, const SturmianSpec& spec, double q);

/// Entry (n, n'), zero outside the band.
cplx jmatrix_entry(int n, int n_prime, cplx epsilon, const SturmianSpec& spec, double q);

/// Basis scale with C^{1/2} rho / 2 = 1.
double default_basis_rho(double C);

/// G~_00 = <0~|(eps - H0)^{-1}|0~> by the continued fraction
/// 1/(d0 - c0^2/(d1 - c1^2/(d2 - ...))), modified Lentz, 1e-12 relative.
///
/// Real epsilon above threshold (Im eps == 0, Re eps > 0) is routed to
/// green00_above_threshold. Throws NearPole on a vanishing denominator and
/// NoConvergence past 1e5 terms.
cplx green00(cplx epsilon, const SturmianSpec& spec, double q);

/// 1 / G~_00 (the value of the continued fraction itself), finite across
/// the bound-state poles on the real axis.
cplx inverse_green00(cplx epsilon, const SturmianSpec& spec, double q);

/// Limit eps + i0 for real eps > 0: Richardson extrapolation of G~_00 at
/// eps + i eta, eps + i eta/2, eps + i eta/4.
cplx green00_above_threshold(double epsilon, const SturmianSpec& spec, double q, double eta = 0.05);

struct GreenBlock {
  cplx epsilon;
  int size = 0;
  Eigen::MatrixXcd entries;
  /// max |J G~ - I| over the rows of the window.
  double residual = 0.0;
  /// Depth at which the tail ratios were seeded.
  int tail_depth = 0;
};

/// size x size window of G~ from backward tail ratios
/// R_n = -c_{n-1}/(d_n + c_n R_{n+1}) and the inhomogeneous recurrence.
GreenBlock green_block(cplx epsilon, const SturmianSpec& spec, double q, int size);

/// Direct inverse of the N x N truncation of J, one tridiagonal solve per
/// column. Throws SingularTruncation on a vanishing pivot.
Eigen::MatrixXcd truncated_inverse(cplx epsilon, const SturmianSpec& spec, double q, int N);

}  // namespace gcoul
