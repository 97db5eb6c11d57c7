#include "gcoul/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <string>

#include "gcoul/error.hpp"
#include "gcoul/specfun.hpp"

namespace gcoul {
namespace {

void require_bound_states(const PotentialParams& p) {
  if (!(p.q > 0.0)) throw Error(ErrorCode::NoBoundStates, "bound states need q > 0");
}

void require_index(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "state index must be >= 0");
}

}  // namespace

double rho_n(int n, const PotentialParams& p) {
  require_index(n);
  require_bound_states(p);
  const double a = n + 0.5 * p.beta;
  return (2.0 * p.q / p.C) / (std::sqrt(a * a + p.q * p.theta / p.C) + a);
}

double energy(int n, const PotentialParams& p) {
  const double rho = rho_n(n, p);
  return -0.25 * p.C * rho * rho;
}

double energy_tilde(int n, const PotentialParams& p) {
  if (p.theta == 0.0) throw Error(ErrorCode::ThetaZero, "shifted energy needs theta > 0");
  require_index(n);
  require_bound_states(p);
  const double a = n + 0.5 * p.beta;
  const double s = std::sqrt(a * a + p.q * p.theta / p.C);
  return 2.0 * a * p.q / (p.theta * (s + a));
}

BoundState::BoundState(int n, const PotentialParams& p)
    : n_(n), rho_(rho_n(n, p)), epsilon_(-0.25 * p.C * rho_ * rho_), params_(p) {
  log_norm_ = 0.25 * std::log(p.C) + 0.5 * (p.beta + 1.0) * std::log(rho_) +
              0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + p.beta) -
                     std::log(2.0 * n + p.beta + rho_ * p.theta));
}

double BoundState::at_h(double h) const {
  const double x = rho_ * h;
  const double s = h + params_.theta;
  const double lag = laguerre(n_, params_.beta - 1.0, x);
  if (h == 0.0) {
    if (params_.beta > 0.5) return 0.0;
    if (params_.beta < 0.5) throw Error(ErrorCode::SingularOrigin, "psi diverges at r = 0 for beta < 1/2");
    return std::exp(log_norm_) * std::pow(s, 0.25) * lag;
  }
  const double log_env = log_norm_ + 0.25 * std::log(s) + 0.25 * (2.0 * params_.beta - 1.0) * std::log(h) - 0.5 * x;
  return std::exp(log_env) * lag;
}

double BoundState::operator()(double r) const { return at_h(h_of_r(r, params_).h); }

double BoundState::norm_gauss_laguerre() const {
  // int psi^2 dr = N^2 int (x + rho theta) x^{beta-1} e^{-x} L_n^2 dx,
  // a polynomial of degree 2n+1 against the Laguerre weight.
  const auto rule = gauss_laguerre(n_ + 1, params_.beta - 1.0);
  const double shift = rho_ * params_.theta;
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    const double lag = laguerre(n_, params_.beta - 1.0, x);
    sum += rule.weights[i] * (x + shift) * lag * lag;
  }
  const double log_n2 = std::lgamma(n_ + 1.0) - std::lgamma(n_ + params_.beta) -
                        std::log(2.0 * n_ + params_.beta + shift);
  return std::exp(log_n2) * sum;
}

BoundState wavefunction(int n, const PotentialParams& p) { return BoundState(n, p); }

double rho_tilde(int N, const PotentialParams& p) {
  require_index(N);
  require_bound_states(p);
  const double a = N + 0.5;
  return (4.0 * p.q / p.C) / (std::sqrt(a * a + 4.0 * p.q * p.theta / p.C) + a);
}

OneDState::OneDState(int N, const PotentialParams& p) : N_(N), params_(p) {
  if (p.D != 1 || p.l != 0)
    throw Error(ErrorCode::UnsupportedConfiguration, "one-dimensional states need D = 1, l = 0");
  if (p.theta == 0.0) throw Error(ErrorCode::ThetaZero, "one-dimensional states need theta > 0");
  params_.beta = (N % 2 == 0) ? 0.5 : 1.5;
  rho_ = gcoul::rho_tilde(N, params_);
  energy_ = -0.25 * p.C * rho_ * rho_;
  // C^{1/4} rho^{3/4} / (2^N (Gamma((N+1)/2) Gamma(N/2+1) (N+1/2+theta rho))^{1/2}),
  // times 2^{-1/2} for the two half-lines.
  log_norm_ = 0.25 * std::log(p.C) + 0.75 * std::log(rho_) - N * std::numbers::ln2 -
              0.5 * (std::lgamma(0.5 * (N + 1)) + std::lgamma(0.5 * N + 1.0) +
                     std::log(N + 0.5 + p.theta * rho_)) -
              0.5 * std::numbers::ln2;
}

double OneDState::operator()(double x) const {
  const double h = h_of_x(x, params_).h;
  const double y = std::sqrt(rho_ * h);
  const double value = std::exp(log_norm_ + 0.25 * std::log(h + params_.theta) - 0.5 * rho_ * h) *
                       hermite(N_, y);
  return (x < 0.0 && N_ % 2 == 1) ? -value : value;
}

OneDState one_d_state(int N, const PotentialParams& p) {
  require_index(N);
  return OneDState(N, p);
}

GaussRule gauss_laguerre(int m, double alpha) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "Gauss rule needs at least one node");
  if (!(alpha > -1.0)) throw Error(ErrorCode::InvalidArgument, "Laguerre weight needs alpha > -1");
  Eigen::VectorXd diag(m), off(std::max(m - 1, 0));
  for (int k = 0; k < m; ++k) diag(k) = 2.0 * k + alpha + 1.0;
  for (int k = 1; k < m; ++k) off(k - 1) = std::sqrt(k * (k + alpha));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::NoConvergence, "Golub-Welsch eigen-solve failed");
  GaussRule rule;
  const double mu0 = std::tgamma(alpha + 1.0);
  for (int k = 0; k < m; ++k) {
    const double v0 = solver.eigenvectors()(0, k);
    rule.nodes.push_back(solver.eigenvalues()(k));
    rule.weights.push_back(mu0 * v0 * v0);
  }
  return rule;
}

int node_count(const std::function<double(double)>& f, double r_min, double r_max, int points) {
  if (!(r_min > 0.0) || !(r_max > r_min) || points < 2)
    throw Error(ErrorCode::InvalidArgument, "node_count needs 0 < r_min < r_max and >= 2 points");
  const double step = std::log(r_max / r_min) / (points - 1);
  int count = 0;
  double prev = f(r_min);
  for (int i = 1; i < points; ++i) {
    const double cur = f(r_min * std::exp(step * i));
    if (cur == 0.0) continue;
    if (prev != 0.0 && (cur > 0.0) != (prev > 0.0)) ++count;
    prev = cur;
  }
  return count;
}

}  // namespace gcoul
