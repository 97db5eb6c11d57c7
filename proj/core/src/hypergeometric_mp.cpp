// Extended-precision kernels behind kummer_phi / tricomi_psi. Kept in one
// translation unit because the multiprecision instantiations are heavy.

#include "hypergeometric_mp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "gcoul/error.hpp"

namespace gcoul::detail {
namespace {

namespace bmp = boost::multiprecision;

constexpr int kMaxTerms = 200000;

template <unsigned Digits>
struct Working {
  using Real = bmp::number<bmp::cpp_bin_float<Digits>, bmp::et_off>;
  using Complex = bmp::number<bmp::complex_adaptor<bmp::cpp_bin_float<Digits>>, bmp::et_off>;

  static Complex make(std::complex<double> z) { return Complex(Real(z.real()), Real(z.imag())); }

  static std::complex<double> to_double(const Complex& z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
  }

  static double log10_abs(const Complex& z) {
    const Real m = abs(z);
    if (m == 0) return -std::numeric_limits<double>::infinity();
    return static_cast<double>(log10(m));
  }

  static double fast_log10_abs(const Complex& z) {
    const double m = std::abs(to_double(z));
    if (m > 0.0 && std::isfinite(m)) return std::log10(m);
    return log10_abs(z);
  }

  static bool is_nonpositive_integer(std::complex<double> z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
  }

  // Plain Taylor series of 1F1. Term magnitudes are tracked in double log
  // space so the loss estimate never overflows.
  static SeriesValue series(std::complex<double> a, std::complex<double> c, std::complex<double> z,
                            Complex* out = nullptr) {
    const Complex am = make(a), cm = make(c), zm = make(z);
    Complex term(1), sum(1);
    double log_term = 0.0;
    double max_log = 0.0;
    const double log_z = std::log10(std::abs(z));
    int k = 0;
    for (; k < kMaxTerms; ++k) {
      const std::complex<double> ak = a + static_cast<double>(k);
      if (ak == 0.0) break;
      term *= (am + k) * zm / ((cm + k) * (k + 1));
      sum += term;
      log_term += std::log10(std::abs(ak)) + log_z - std::log10(std::abs(c + static_cast<double>(k))) -
                  std::log10(static_cast<double>(k + 1));
      max_log = std::max(max_log, log_term);
      if (k + 1 > std::abs(z) && log_term < fast_log10_abs(sum) - (static_cast<double>(Digits) - 5.0)) break;
    }
    if (k == kMaxTerms) throw Error(ErrorCode::NoConvergence, "1F1 series term cap reached");
    if (out != nullptr) *out = sum;
    return {to_double(sum), max_log - log10_abs(sum)};
  }

  static Complex log_gamma(Complex z) {
    const Real pi = boost::math::constants::pi<Real>();
    if (z.real() < Real(0.5)) {
      return log(Complex(pi)) - log(sin(pi * z)) - log_gamma(Complex(1) - z);
    }
    const Real threshold = Real(0.5 * Digits + 10);
    Complex product(1);
    while (abs(z) < threshold) {
      product *= z;
      z += 1;
    }
    const Real half_log_two_pi = log(2 * pi) / 2;
    Complex result = (z - Real(0.5)) * log(z) - z + half_log_two_pi;
    const Complex z2 = z * z;
    Complex power = z;
    const Real eps = pow(Real(10), -static_cast<int>(Digits));
    for (int k = 1; k < 4 * static_cast<int>(Digits); ++k) {
      const Real b2k = boost::math::bernoulli_b2n<Real>(k);
      const Complex term = b2k / (Real(2 * k) * Real(2 * k - 1) * power);
      result += term;
      if (abs(term) < eps * abs(result)) break;
      power *= z2;
    }
    return result - log(product);
  }

  static Complex reciprocal_gamma(std::complex<double> z) {
    if (is_nonpositive_integer(z)) return Complex(0);
    return exp(-log_gamma(make(z)));
  }

  static SeriesValue tricomi(std::complex<double> a, std::complex<double> c, std::complex<double> z) {
    const Complex one(1);
    const Complex cm = make(c), zm = make(z);
    Complex phi1, phi2;
    const SeriesValue s1 = series(a, c, z, &phi1);
    const SeriesValue s2 = series(a - c + 1.0, 2.0 - c, z, &phi2);
    const Complex t1 = exp(log_gamma(one - cm)) * reciprocal_gamma(a - c + 1.0) * phi1;
    const Complex t2 = exp(log_gamma(cm - one)) * reciprocal_gamma(a) * exp((one - cm) * log(zm)) * phi2;
    const Complex total = t1 + t2;
    const double cancel = std::max(log10_abs(t1), log10_abs(t2)) - log10_abs(total);
    return {to_double(total), std::max({s1.loss_digits, s2.loss_digits, cancel})};
  }
};

}  // namespace

SeriesValue kummer_series_mp(std::complex<double> a, std::complex<double> c, std::complex<double> z,
                             int digits) {
  if (digits <= 50) return Working<50>::series(a, c, z);
  if (digits <= 100) return Working<100>::series(a, c, z);
  if (digits <= 200) return Working<200>::series(a, c, z);
  if (digits <= 400) return Working<400>::series(a, c, z);
  throw Error(ErrorCode::NoConvergence, "1F1 needs more than 400 working digits");
}

SeriesValue tricomi_connection_mp(std::complex<double> a, std::complex<double> c,
                                  std::complex<double> z, int digits) {
  if (digits <= 50) return Working<50>::tricomi(a, c, z);
  if (digits <= 100) return Working<100>::tricomi(a, c, z);
  if (digits <= 200) return Working<200>::tricomi(a, c, z);
  if (digits <= 400) return Working<400>::tricomi(a, c, z);
  throw Error(ErrorCode::NoConvergence, "U(a,c,z) needs more than 400 working digits");
}

}  // namespace gcoul::detail
