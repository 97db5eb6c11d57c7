#include "gcoul/jgreen.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gcoul/error.hpp"

namespace gcoul {
namespace {

constexpr int kMaxTerms = 100000;
constexpr double kTiny = 1e-30;

// Lentz evaluation of d0 - c0^2/(d1 - c1^2/(d2 - ...)).
cplx continued_fraction(const JMatrix& J) {
  cplx f = J.diag(0);
  if (std::abs(f) == 0.0) f = kTiny;
  cplx Cj = f, Dj = 0.0;
  double prev = 1.0;
  for (int j = 1; j <= kMaxTerms; ++j) {
    const cplx c = J.off(j - 1);
    const cplx a = -c * c;
    const cplx b = J.diag(j);
    Dj = b + a * Dj;
    if (std::abs(Dj) == 0.0) Dj = kTiny;
    Cj = b + a / Cj;
    if (std::abs(Cj) == 0.0) Cj = kTiny;
    Dj = 1.0 / Dj;
    const cplx delta = Cj * Dj;
    f *= delta;
    // Geometric tail estimate: slowly converging fractions have small
    // increments long before the value has settled.
    const double cur = std::abs(delta - 1.0);
    const double ratio = std::min(cur / prev, 0.999999);
    if (j > 2 && cur / (1.0 - ratio) < 1e-14) return f;
    if (cur > 0.0) prev = cur;
  }
  throw Error(ErrorCode::NoConvergence, "continued fraction exceeded 1e5 terms");
}

// Tail ratios R_1..R_{count}, seeded with R = 0 at the given depth.
std::vector<cplx> tail_ratios(const JMatrix& J, int count, int depth) {
  std::vector<cplx> ratio(count + 2, 0.0);
  cplx next = 0.0;
  for (int n = depth; n >= 1; --n) {
    const cplx denom = J.diag(n) + J.off(n) * next;
    next = -J.off(n - 1) / denom;
    if (n <= count + 1) ratio[n] = next;
  }
  return ratio;
}

// Size of the terms that cancel in row n; a pole shows up as a denominator
// far below it.
double row_scale(const JMatrix& J, int n) {
  const double sc = std::sqrt(J.spec.params.C);
  const double rho = J.spec.rho;
  const double b = 2.0 * n + J.spec.beta;
  return std::abs(J.epsilon) * (b + rho * J.spec.params.theta) / (sc * rho) + 0.25 * sc * rho * b +
         std::abs(J.q) / sc + std::abs(J.off(n));
}

}  // namespace

cplx JMatrix::diag(int n) const {
  const double sc = std::sqrt(spec.params.C);
  const double rho = spec.rho;
  const double b = 2.0 * n + spec.beta;
  return epsilon * (b + rho * spec.params.theta) / (sc * rho) - 0.25 * sc * rho * b + q / sc;
}

cplx JMatrix::off(int n) const {
  const double sc = std::sqrt(spec.params.C);
  const double rho = spec.rho;
  return -(epsilon / (sc * rho) + 0.25 * sc * rho) * std::sqrt((n + 1.0) * (n + spec.beta));
}

JMatrix make_jmatrix(cplx epsilon, const SturmianSpec& spec, double q) { return {epsilon, spec, q}; }

cplx jmatrix_entry(int n, int n_prime, cplx epsilon, const SturmianSpec& spec, double q) {
  if (n < 0 || n_prime < 0) throw Error(ErrorCode::InvalidArgument, "matrix indices must be >= 0");
  const JMatrix J{epsilon, spec, q};
  if (n == n_prime) return J.diag(n);
  if (std::abs(n - n_prime) == 1) return J.off(std::min(n, n_prime));
  return 0.0;
}

double default_basis_rho(double C) { return 2.0 / std::sqrt(C); }

cplx inverse_green00(cplx epsilon, const SturmianSpec& spec, double q) {
  return continued_fraction(JMatrix{epsilon, spec, q});
}

cplx green00(cplx epsilon, const SturmianSpec& spec, double q) {
  if (epsilon.imag() == 0.0 && epsilon.real() > 0.0)
    return green00_above_threshold(epsilon.real(), spec, q);
  const JMatrix J{epsilon, spec, q};
  const cplx f = continued_fraction(J);
  if (std::abs(f) < 1e-13 * row_scale(J, 0))
    throw Error(ErrorCode::NearPole, "energy coincides with a pole of the Green's operator");
  return 1.0 / f;
}

cplx green00_above_threshold(double epsilon, const SturmianSpec& spec, double q, double eta) {
  if (!(eta > 0.0)) throw Error(ErrorCode::InvalidArgument, "eta must be > 0");
  const cplx g1 = 1.0 / inverse_green00({epsilon, eta}, spec, q);
  const cplx g2 = 1.0 / inverse_green00({epsilon, 0.5 * eta}, spec, q);
  const cplx g4 = 1.0 / inverse_green00({epsilon, 0.25 * eta}, spec, q);
  return (8.0 * g4 - 6.0 * g2 + g1) / 3.0;
}

GreenBlock green_block(cplx epsilon, const SturmianSpec& spec, double q, int size) {
  if (size < 1) throw Error(ErrorCode::InvalidArgument, "green_block size must be >= 1");
  const JMatrix J{epsilon, spec, q};

  int depth = size + 200;
  std::vector<cplx> ratio;
  for (;;) {
    ratio = tail_ratios(J, size, depth);
    const auto check = tail_ratios(J, size, depth + 100);
    double diff = 0.0;
    for (int n = 1; n <= size + 1; ++n)
      diff = std::max(diff, std::abs(ratio[n] - check[n]) / std::max(std::abs(check[n]), kTiny));
    if (diff < 1e-12) break;
    if (depth > kMaxTerms) throw Error(ErrorCode::NoConvergence, "tail ratios did not converge");
    depth *= 2;
  }

  // Window plus one extra row for the residual of the last row.
  Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(size + 1, size);
  cplx prev_diag = 0.0;
  for (int m = 0; m < size; ++m) {
    const cplx denom = J.diag(m) + J.off(m) * ratio[m + 1];
    const cplx lower = (m == 0) ? cplx(0.0) : J.off(m - 1) * ratio[m] * prev_diag;
    if (std::abs(denom) < 1e-13 * row_scale(J, m))
      throw Error(ErrorCode::NearPole, "energy coincides with a pole of the Green's operator");
    const cplx gmm = (1.0 - lower) / denom;
    G(m, m) = gmm;
    prev_diag = gmm;
    for (int n = m + 1; n <= size; ++n) G(n, m) = ratio[n] * G(n - 1, m);
  }
  for (int m = 0; m < size; ++m)
    for (int n = 0; n < m; ++n) G(n, m) = G(m, n);

  GreenBlock block;
  block.epsilon = epsilon;
  block.size = size;
  block.tail_depth = depth;
  double worst = 0.0;
  for (int n = 0; n < size; ++n) {
    for (int m = 0; m < size; ++m) {
      cplx acc = J.diag(n) * G(n, m) + J.off(n) * G(n + 1, m);
      if (n > 0) acc += J.off(n - 1) * G(n - 1, m);
      if (n == m) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  block.residual = worst;
  block.entries = G.topRows(size);
  return block;
}

Eigen::MatrixXcd truncated_inverse(cplx epsilon, const SturmianSpec& spec, double q, int N) {
  if (N < 1 || N > 2000) throw Error(ErrorCode::InvalidArgument, "truncation size must be in [1, 2000]");
  const JMatrix J{epsilon, spec, q};
  // Forward elimination once; each column then needs one sweep each way.
  std::vector<cplx> diag(N), upper(N), lower(N);
  for (int n = 0; n < N; ++n) {
    diag[n] = J.diag(n);
    if (n + 1 < N) upper[n] = lower[n] = J.off(n);
  }
  std::vector<cplx> pivot(N), mult(N);
  pivot[0] = diag[0];
  for (int n = 1; n < N; ++n) {
    if (std::abs(pivot[n - 1]) < 1e-14 * (std::abs(diag[n - 1]) + std::abs(upper[n - 1])))
      throw Error(ErrorCode::SingularTruncation, "energy is an eigenvalue of the truncated matrix");
    mult[n] = lower[n - 1] / pivot[n - 1];
    pivot[n] = diag[n] - mult[n] * upper[n - 1];
  }
  if (std::abs(pivot[N - 1]) < 1e-14 * std::abs(diag[N - 1]))
    throw Error(ErrorCode::SingularTruncation, "energy is an eigenvalue of the truncated matrix");

  Eigen::MatrixXcd inv(N, N);
  std::vector<cplx> y(N);
  for (int col = 0; col < N; ++col) {
    for (int n = 0; n < N; ++n) {
      y[n] = (n == col) ? cplx(1.0) : cplx(0.0);
      if (n > 0) y[n] -= mult[n] * y[n - 1];
    }
    inv(N - 1, col) = y[N - 1] / pivot[N - 1];
    for (int n = N - 2; n >= 0; --n) inv(n, col) = (y[n] - upper[n] * inv(n + 1, col)) / pivot[n];
  }
  return inv;
}

}  // namespace gcoul
