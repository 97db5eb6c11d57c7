#pragma once

#include <complex>
#include <vector>

#include "gcoul/sturmian.hpp"

namespace gcoul {

/// Sampled complex field. Extended precision: composing two second-order
/// stencil operators near r_min amplifies rounding by (step r)^{-4}.
using Field = std::vector<std::complex<long double>>;

/// Log-uniform radial grid r_i = r_min e^{i dt}.
struct RadialGrid {
  double r_min = 1e-4;
  double r_max = 60.0;
  int points = 8192;

  long double dt() const noexcept;
  long double r(int i) const noexcept;
  /// Index range [first, last) of the interior 90% used for defects.
  int interior_first() const noexcept { return points / 20; }
  int interior_last() const noexcept { return points - points / 20; }
};

/// Grid wide enough that phi_0..phi_{n_max} fall below 1e-12 of their peak
/// beyond r_max; r_min = 1e-4, 2^13 points.
RadialGrid default_grid(const SturmianSpec& spec, int n_max);

/// c2(r) d^2/dr^2 + c1(r) d/dr + c0(r), with 4th-order central differences
/// in t = ln r. The two points at each end are left at zero.
class GridOperator {
 public:
  GridOperator(RadialGrid grid, Field c2, Field c1, Field c0);

  Field apply(const Field& f) const;
  const RadialGrid& grid() const noexcept { return grid_; }
  const Field& c2() const noexcept { return c2_; }
  const Field& c1() const noexcept { return c1_; }
  const Field& c0() const noexcept { return c0_; }

 private:
  RadialGrid grid_;
  Field c2_, c1_, c0_;
};

/// J3 in the n-free expanded form
///   -(s/(C rho)) d^2/dr^2 + (s/(C rho)) W(r) + rho h/4,
/// W = -3C/(16 s^2) + 5 C theta/(16 s^3) + gamma C/(4 h s), s = h + theta;
/// J1 = J3 - rho h/2;
/// J2 = -i (h s)^{1/2}/C^{1/2} d/dr - i theta/(4 s).
struct Generators {
  GridOperator J1, J2, J3;
};

Generators build_generators(const SturmianSpec& spec, const RadialGrid& grid);

/// phi_n sampled on the grid in extended precision.
Field sample_gcs(int n, const SturmianSpec& spec, const RadialGrid& grid);

/// L2 norm (measure dr) over the interior 90% of the grid.
double grid_norm(const Field& f, const RadialGrid& grid);

/// <f, g> with the weight C^{1/2}/(h + theta), interior 90%, trapezoid in t.
std::complex<double> weighted_inner(const Field& f, const Field& g, const SturmianSpec& spec,
                                    const RadialGrid& grid);

/// Representation labels: j = -beta/2, m(n) = n + beta/2, Casimir j(j+1),
/// gamma = (beta-1/2)(beta-3/2) = 4 j(j+1) + 3/4.
struct AlgebraRep {
  double j = 0.0;
  double casimir = 0.0;
  double gamma = 0.0;
  double m(int n) const noexcept { return n - j; }
};

AlgebraRep algebra_rep(double beta);

/// ||J3 phi_n - (n + beta/2) phi_n|| / ||phi_n||.
double eigen_check(int n, const SturmianSpec& spec, const RadialGrid& grid);

/// max(||J+ phi_n - ((n+1)(n+beta))^{1/2} phi_{n+1}||, ||J- phi_n - (n(n+beta-1))^{1/2} phi_{n-1}||) / ||phi_n||.
/// Throws GridTooCoarse when the grid does not contain or resolve phi_{n+1}.
double ladder_check(int n, const SturmianSpec& spec, const RadialGrid& grid);
double ladder_check(int n, const SturmianSpec& spec);

struct CommutatorDefects {
  double j1j2 = 0.0;  ///< [J1, J2] + i J3
  double j2j3 = 0.0;  ///< [J2, J3] - i J1
  double j3j1 = 0.0;  ///< [J3, J1] - i J2
};

/// Largest relative defect of each relation over phi_0..phi_{n_max}.
CommutatorDefects commutator_check(const SturmianSpec& spec, const RadialGrid& grid, int n_max = 6);
CommutatorDefects commutator_check(const SturmianSpec& spec);

/// ||(J3^2 - J1^2 - J2^2) phi_n - j(j+1) phi_n|| / ||phi_n||.
double casimir_check(int n, const SturmianSpec& spec, const RadialGrid& grid);

}  // namespace gcoul
