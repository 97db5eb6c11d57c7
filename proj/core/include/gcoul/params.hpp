#pragma once

namespace gcoul {

/// Parameters of the D-dimensional generalized Coulomb potential in reduced
/// units (hbar^2 / 2m = 1), so that v = 2mV/hbar^2 and epsilon = 2mE/hbar^2.
///
/// C sets the length scale (C^{1/2} is an inverse length), theta deforms the
/// coordinate map, q is the Coulomb strength and beta the singularity /
/// representation parameter. Bound states exist only for q > 0.
struct PotentialParams {
  double C = 1.0;
  double theta = 1.0;
  double q = 1.0;
  double beta = 1.5;
  int D = 3;
  int l = 0;

  /// (l + (D-3)/2)(l + (D-1)/2): strength of the centrifugal term.
  double centrifugal_strength() const noexcept;
  /// (beta - 1/2)(beta - 3/2): strength of the h^{-1} singular term.
  double singular_strength() const noexcept;
  /// True when the potential is finite at the origin (no r^{-2} terms, theta > 0).
  bool regular_at_origin() const noexcept;

  bool operator==(const PotentialParams&) const = default;
};

/// Checks the constraints C > 0, theta >= 0, beta > 0, D >= 1, l >= 0 and
/// finiteness; throws gcoul::Error naming the violated constraint.
PotentialParams validate(const PotentialParams& raw);

/// A point of the coordinate map: radius, mapped coordinate h(r) and dh/dr.
struct CoordinatePoint {
  double r = 0.0;
  double h = 0.0;
  double dh_dr = 0.0;
};

/// Closed-form inverse map r(h) = C^{-1/2} (theta asinh((h/theta)^{1/2}) + (h(h+theta))^{1/2}).
double r_of_h(double h, double C, double theta);
inline double r_of_h(double h, const PotentialParams& p) { return r_of_h(h, p.C, p.theta); }

/// dr/dh = C^{-1/2} ((h+theta)/h)^{1/2}.
double dr_dh(double h, double C, double theta);

/// Numerical inverse of r_of_h. |r_of_h(h) - r| <= 1e-12 max(1, r).
CoordinatePoint h_of_r(double r, double C, double theta);
inline CoordinatePoint h_of_r(double r, const PotentialParams& p) { return h_of_r(r, p.C, p.theta); }

/// One-dimensional extension: h(x) := h(|x|).
inline CoordinatePoint h_of_x(double x, const PotentialParams& p) {
  return h_of_r(x < 0.0 ? -x : x, p.C, p.theta);
}

}  // namespace gcoul
