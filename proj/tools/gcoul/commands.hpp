#pragma once

#include <string>
#include <vector>

#include "config.hpp"
#include "table.hpp"

namespace gcoul::cli {

struct RunOutput {
  Table table;
  bool ok = true;  ///< false when a validation check failed
};

/// Evaluates the configured command. Library errors propagate as gcoul::Error.
RunOutput run_command(const RunConfig& config);

std::string render(const Table& table, Format format);

/// `points` samples of [lo, hi], equally spaced in x or in log x.
std::vector<double> sample_grid(double lo, double hi, int points, Spacing spacing);

}  // namespace gcoul::cli
