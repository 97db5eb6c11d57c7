#pragma once

#include <functional>
#include <vector>

#include "gcoul/params.hpp"

namespace gcoul {

/// rho_n = (2q/C) / (((n+beta/2)^2 + q theta/C)^{1/2} + n + beta/2), free of
/// cancellation for small theta and reducing to q/(C(n+beta/2)) at theta = 0.
/// Throws NoBoundStates for q <= 0.
double rho_n(int n, const PotentialParams& p);

/// epsilon_n = -(C/4) rho_n^2.
double energy(int n, const PotentialParams& p);

/// epsilon_n + q/theta, evaluated as 2 A q / (theta (S + A)) with
/// A = n + beta/2, S = (A^2 + q theta/C)^{1/2}. Throws ThetaZero.
double energy_tilde(int n, const PotentialParams& p);

/// Normalized bound state psi_n(r) built from L_n^{(beta-1)}(rho_n h(r)).
class BoundState {
 public:
  BoundState(int n, const PotentialParams& p);

  int n() const noexcept { return n_; }
  double rho() const noexcept { return rho_; }
  double epsilon() const noexcept { return epsilon_; }
  const PotentialParams& params() const noexcept { return params_; }

  double operator()(double r) const;
  /// Same function evaluated from h directly (skips the map inversion).
  double at_h(double h) const;

  /// int_0^inf psi^2 dr evaluated exactly with n+1 generalized Gauss-Laguerre
  /// nodes in x = rho_n h.
  double norm_gauss_laguerre() const;

 private:
  int n_;
  double rho_;
  double epsilon_;
  double log_norm_;
  PotentialParams params_;
};

BoundState wavefunction(int n, const PotentialParams& p);

enum class Parity { even, odd };

/// One-dimensional bound state N (beta = 1/2 for even N, 3/2 for odd N),
/// evaluated from the Hermite form for x >= 0 and extended by parity.
/// Includes the factor 2^{-1/2} so that the norm over (-inf, inf) is 1.
class OneDState {
 public:
  OneDState(int N, const PotentialParams& p);

  int N() const noexcept { return N_; }
  Parity parity() const noexcept { return N_ % 2 == 0 ? Parity::even : Parity::odd; }
  double rho_tilde() const noexcept { return rho_; }
  double energy() const noexcept { return energy_; }
  /// Parameters with beta set by the parity.
  const PotentialParams& params() const noexcept { return params_; }

  double operator()(double x) const;

 private:
  int N_;
  double rho_;
  double energy_;
  double log_norm_;
  PotentialParams params_;
};

/// Needs D = 1, l = 0 (UnsupportedConfiguration) and theta > 0 (ThetaZero).
OneDState one_d_state(int N, const PotentialParams& p);

/// rho~_N = (4q/C) / (((N+1/2)^2 + 4 q theta/C)^{1/2} + N + 1/2).
double rho_tilde(int N, const PotentialParams& p);

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// m-point generalized Gauss-Laguerre rule for the weight x^alpha e^{-x}
/// (Golub-Welsch).
GaussRule gauss_laguerre(int m, double alpha);

/// Sign changes of f over `points` log-spaced samples of [r_min, r_max].
int node_count(const std::function<double(double)>& f, double r_min, double r_max,
               int points = 4096);

}  // namespace gcoul
