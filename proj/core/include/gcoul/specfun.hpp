#pragma once

#include <complex>

namespace gcoul {

using cplx = std::complex<double>;

/// Principal-branch log Gamma on the complex plane.
///
/// Lanczos approximation (g = 671/128, 14 coefficients) for Re z >= 1/2 and
/// the reflection formula below that; log_gamma(conj z) == conj(log_gamma(z))
/// holds exactly. Throws PoleArgument at non-positive integers and
/// InvalidArgument for non-finite input.
cplx log_gamma(cplx z);

/// 1 / Gamma(z), returning exactly 0 at the poles of Gamma.
cplx reciprocal_gamma(cplx z);

/// Associated Laguerre polynomial L_n^{(alpha)}(x) by the three-term recurrence.
double laguerre(int n, double alpha, double x);

/// Physicists' Hermite polynomial H_n(y) by the three-term recurrence.
double hermite(int n, double y);

/// Regular confluent hypergeometric function Phi(a, c; z) = 1F1(a; c; z).
///
/// Taylor series (after Kummer's transformation when Re z < 0). The series
/// is summed in double and, when the measured cancellation would cost more
/// than a few digits, re-summed at 50/100/200/400 decimal digits. Relative
/// accuracy is better than 1e-10 for |z| <= 200 on moderate parameters.
/// Throws PoleArgument when c is a non-positive integer.
cplx kummer_phi(cplx a, cplx c, cplx z);

/// Irregular confluent hypergeometric function Psi(a, c; z) = U(a, c, z)
/// from the two-Phi connection formula
///   Psi = Gamma(1-c)/Gamma(a-c+1) Phi(a,c;z) + Gamma(c-1)/Gamma(a) z^{1-c} Phi(a-c+1,2-c;z),
/// evaluated in extended precision when the two terms cancel.
/// Throws IntegerC for integer c (the formula degenerates) and
/// InvalidArgument for z == 0.
cplx tricomi_psi(cplx a, cplx c, cplx z);

}  // namespace gcoul
