#pragma once

#include <complex>

namespace gcoul::detail {

struct SeriesValue {
  std::complex<double> value;
  /// log10(max |term| / |sum|): decimal digits lost to cancellation.
  double loss_digits = 0.0;
};

/// Taylor series of 1F1(a; c; z) summed with `digits` decimal digits
/// (rounded up to the next supported tier). No Kummer transformation.
SeriesValue kummer_series_mp(std::complex<double> a, std::complex<double> c,
                             std::complex<double> z, int digits);

/// Connection formula for U(a, c, z) carried out entirely with `digits`
/// decimal digits. loss_digits is the worst loss of the two series and of the
/// final two-term sum.
SeriesValue tricomi_connection_mp(std::complex<double> a, std::complex<double> c,
                                  std::complex<double> z, int digits);

/// Largest working precision available.
inline constexpr int kMaxDigits = 400;

}  // namespace gcoul::detail
