#pragma once

#include <string>
#include <vector>

#include "gcoul/oracle.hpp"
#include "gcoul/params.hpp"

namespace gcoul::cli {

struct CheckResult {
  std::string name;
  double value = 0.0;      ///< measured defect
  double tolerance = 0.0;
  bool passed = false;
  std::string error;       ///< error name when the check threw
};

/// Shooting domain wide enough for the lowest `count` states of p.
NumerovDomain spectrum_domain(const PotentialParams& p, int count);

/// Closed forms against the numerical oracles for one parameter set:
/// coordinate map, Numerov spectrum, norms, Sturmian Gram and overlap,
/// J-matrix elements, Green's function, S-matrix, ladder operators and (for
/// theta >= 0.01) the one-dimensional reflection coefficient.
std::vector<CheckResult> run_validation(const PotentialParams& p);

}  // namespace gcoul::cli
