#include "gcoul/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "gcoul/error.hpp"
#include "hypergeometric_mp.hpp"

namespace gcoul {
namespace {

constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

constexpr std::array<int, 4> kDigitTiers = {50, 100, 200, 400};
constexpr double kAcceptableLoss = 2.0;

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

bool is_integer(cplx z) { return z.imag() == 0.0 && z.real() == std::floor(z.real()); }

// Re z >= 1/2.
cplx lanczos_log_gamma(cplx z) {
  cplx y = z;
  cplx tmp = z + 5.24218750000000000;
  tmp = (z + 0.5) * std::log(tmp) - tmp;
  cplx ser = 0.999999999999997092;
  for (double c : kLanczos) {
    y += 1.0;
    ser += c / y;
  }
  return tmp + std::log(2.5066282746310005 * ser / z);
}

// Principal log sin(pi z) for Im z >= 0, without overflow at large Im z.
cplx log_sin_pi(cplx z) {
  constexpr double pi = std::numbers::pi;
  if (z.imag() < 20.0) return std::log(std::sin(pi * z));
  const cplx i(0.0, 1.0);
  // sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2i)
  const cplx w = -i * pi * z + std::log((std::exp(2.0 * i * pi * z) - 1.0) / (2.0 * i));
  return {w.real(), std::remainder(w.imag(), 2.0 * pi)};
}

struct DoubleSeries {
  cplx value;
  double loss_digits;
};

DoubleSeries kummer_series_double(cplx a, cplx c, cplx z) {
  cplx term = 1.0;
  cplx sum = 1.0;
  double log_term = 0.0;
  double max_log = 0.0;
  const double log_z = std::log10(std::abs(z));
  constexpr int kMaxTerms = 200000;
  int k = 0;
  for (; k < kMaxTerms; ++k) {
    const cplx ak = a + static_cast<double>(k);
    if (ak == 0.0) break;
    term *= ak * z / ((c + static_cast<double>(k)) * static_cast<double>(k + 1));
    sum += term;
    log_term += std::log10(std::abs(ak)) + log_z - std::log10(std::abs(c + static_cast<double>(k))) -
                std::log10(static_cast<double>(k + 1));
    max_log = std::max(max_log, log_term);
    if (k + 1 > std::abs(z) && std::abs(term) < 1e-17 * std::abs(sum)) break;
    if (!finite(sum)) break;
  }
  if (k == kMaxTerms) throw Error(ErrorCode::NoConvergence, "1F1 series term cap reached");
  const double mag = std::abs(sum);
  const double loss = (mag > 0.0 && std::isfinite(mag)) ? max_log - std::log10(mag)
                                                        : std::numeric_limits<double>::infinity();
  return {sum, loss};
}

int first_tier_for(double needed) {
  for (int t : kDigitTiers) {
    if (t >= needed) return t;
  }
  return kDigitTiers.back();
}

// Re z >= 0 (or anything when called from the connection formula).
cplx kummer_phi_direct(cplx a, cplx c, cplx z) {
  const DoubleSeries d = kummer_series_double(a, c, z);
  if (finite(d.value) && d.loss_digits <= kAcceptableLoss) return d.value;
  const double guess = std::isfinite(d.loss_digits) ? d.loss_digits
                                                    : std::abs(z) / std::numbers::ln10 * 2.0;
  for (int tier = first_tier_for(guess + 30.0);; ) {
    const detail::SeriesValue mp = detail::kummer_series_mp(a, c, z, tier);
    if (mp.loss_digits + 25.0 <= tier) return mp.value;
    if (tier >= detail::kMaxDigits) break;
    tier = first_tier_for(std::max<double>(tier + 1, mp.loss_digits + 30.0));
  }
  throw Error(ErrorCode::NoConvergence, "1F1 cancellation exceeds working precision");
}

}  // namespace

cplx log_gamma(cplx z) {
  if (!finite(z)) throw Error(ErrorCode::InvalidArgument, "log_gamma of non-finite argument");
  if (is_nonpositive_integer(z)) throw Error(ErrorCode::PoleArgument, "log_gamma at a pole of Gamma");
  if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
  if (z.real() < 0.5) {
    // Reflection plus the 2 pi i shift that keeps the principal branch.
    constexpr double log_pi = 1.1447298858494002;
    const double branch = 2.0 * std::numbers::pi * std::floor(0.5 * z.real() + 0.25);
    return cplx(log_pi, branch) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
  }
  return lanczos_log_gamma(z);
}

cplx reciprocal_gamma(cplx z) {
  if (is_nonpositive_integer(z)) return 0.0;
  return std::exp(-log_gamma(z));
}

double laguerre(int n, double alpha, double x) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "laguerre degree must be >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * curr - (k + alpha) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

double hermite(int n, double y) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "hermite degree must be >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 2.0 * y;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * y * curr - 2.0 * k * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

cplx kummer_phi(cplx a, cplx c, cplx z) {
  if (!finite(a) || !finite(c) || !finite(z)) {
    throw Error(ErrorCode::InvalidArgument, "kummer_phi of non-finite argument");
  }
  if (is_nonpositive_integer(c)) throw Error(ErrorCode::PoleArgument, "kummer_phi with c a non-positive integer");
  if (z == 0.0) return 1.0;
  if (z.real() < 0.0) return std::exp(z) * kummer_phi_direct(c - a, c, -z);
  return kummer_phi_direct(a, c, z);
}

cplx tricomi_psi(cplx a, cplx c, cplx z) {
  if (!finite(a) || !finite(c) || !finite(z)) {
    throw Error(ErrorCode::InvalidArgument, "tricomi_psi of non-finite argument");
  }
  if (z == 0.0) throw Error(ErrorCode::InvalidArgument, "tricomi_psi requires z != 0");
  if (is_integer(c)) {
    throw Error(ErrorCode::IntegerC, "tricomi_psi connection formula is degenerate for integer c");
  }

  double guess = std::abs(z) / std::numbers::ln10 * 2.0;
  try {
    const cplx t1 = std::exp(log_gamma(1.0 - c)) * reciprocal_gamma(a - c + 1.0) * kummer_phi(a, c, z);
    const cplx t2 = std::exp(log_gamma(c - 1.0)) * reciprocal_gamma(a) * std::exp((1.0 - c) * std::log(z)) *
                    kummer_phi(a - c + 1.0, 2.0 - c, z);
    const cplx total = t1 + t2;
    if (finite(t1) && finite(t2) && std::abs(total) > 0.0) {
      const double loss = std::log10(std::max(std::abs(t1), std::abs(t2)) / std::abs(total));
      if (loss <= kAcceptableLoss) return total;
      guess = loss;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoConvergence) throw;
  }

  for (int tier = first_tier_for(guess + 30.0);;) {
    const detail::SeriesValue mp = detail::tricomi_connection_mp(a, c, z, tier);
    if (mp.loss_digits + 25.0 <= tier) return mp.value;
    if (tier >= detail::kMaxDigits) break;
    tier = first_tier_for(std::max<double>(tier + 1, mp.loss_digits + 30.0));
  }
  throw Error(ErrorCode::NoConvergence, "U(a,c,z) cancellation exceeds working precision");
}

}  // namespace gcoul
