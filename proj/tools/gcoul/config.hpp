#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gcoul/params.hpp"

namespace gcoul::cli {

enum class Command {
  potential,
  charge_density,
  spectrum,
  wavefunction,
  sturmian,
  green,
  smatrix,
  reflection,
  su11_check,
  validate,
};

enum class Spacing { linear, log };
enum class Format { csv, json };

std::string_view to_string(Command c) noexcept;
std::string_view to_string(Spacing s) noexcept;
std::string_view to_string(Format f) noexcept;
/// Throws gcoul::Error(ParseError) on unknown names.
Command parse_command(std::string_view name);
Spacing parse_spacing(std::string_view name);
Format parse_format(std::string_view name);

/// Everything a run depends on. Unset optionals take command-specific
/// defaults when the run starts (see commands.cpp).
struct RunConfig {
  Command command = Command::validate;
  std::string preset = "default";
  PotentialParams params;
  std::optional<double> rho;
  std::optional<double> r_min;
  std::optional<double> r_max;
  double k_min = 0.01;
  double k_max = 100.0;
  int points = 200;
  std::optional<Spacing> spacing;  ///< default: log for k grids, linear otherwise
  Format format = Format::csv;
  std::string out;  ///< empty: standard output
  std::optional<int> n;
  double e_min = -1.5;
  double e_max = 1.0;
  double eta = 0.05;
  double prefactor = 1.0;

  bool operator==(const RunConfig&) const = default;
};

/// Parameter sets selectable with --preset: "default" (C = theta = q = 1,
/// beta = 3/2, D = 3, l = 0) and "coulomb" (theta = 1e-9, beta = 2l + D - 1).
PotentialParams preset_params(std::string_view name);

/// Flat object keyed by flag names without the leading dashes.
nlohmann::ordered_json to_json(const RunConfig& c);

/// Applies the keys present in `j` on top of `base`. Unknown keys and
/// mistyped values raise ParseError naming the field.
RunConfig apply_json(const RunConfig& base, const nlohmann::json& j);

/// Reads a config file. ParseError carries line/column for syntax errors.
nlohmann::json read_config_file(const std::string& path);

/// Rejects inconsistent settings (grid bounds, counts, parameter
/// constraints). Throws gcoul::Error with the violated constraint.
void check_config(const RunConfig& c);

}  // namespace gcoul::cli
