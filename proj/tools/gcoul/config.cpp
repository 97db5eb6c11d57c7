#include "config.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>
#include <utility>

#include "gcoul/error.hpp"

namespace gcoul::cli {
namespace {

constexpr std::array<std::pair<Command, std::string_view>, 10> kCommands{{
    {Command::potential, "potential"},
    {Command::charge_density, "charge-density"},
    {Command::spectrum, "spectrum"},
    {Command::wavefunction, "wavefunction"},
    {Command::sturmian, "sturmian"},
    {Command::green, "green"},
    {Command::smatrix, "smatrix"},
    {Command::reflection, "reflection"},
    {Command::su11_check, "su11-check"},
    {Command::validate, "validate"},
}};

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

double get_double(const nlohmann::json& j, const std::string& key) {
  if (!j.is_number()) parse_fail("field '" + key + "': expected a number, got " + std::string(j.type_name()));
  return j.get<double>();
}

int get_int(const nlohmann::json& j, const std::string& key) {
  if (!j.is_number_integer()) parse_fail("field '" + key + "': expected an integer, got " + j.dump());
  return j.get<int>();
}

std::string get_string(const nlohmann::json& j, const std::string& key) {
  if (!j.is_string()) parse_fail("field '" + key + "': expected a string, got " + std::string(j.type_name()));
  return j.get<std::string>();
}

void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) throw Error(code, what);
}

}  // namespace

std::string_view to_string(Command c) noexcept {
  for (const auto& [cmd, name] : kCommands)
    if (cmd == c) return name;
  return "?";
}

std::string_view to_string(Spacing s) noexcept { return s == Spacing::linear ? "linear" : "log"; }
std::string_view to_string(Format f) noexcept { return f == Format::csv ? "csv" : "json"; }

Command parse_command(std::string_view name) {
  for (const auto& [cmd, n] : kCommands)
    if (n == name) return cmd;
  parse_fail("unknown command '" + std::string(name) + "'");
}

Spacing parse_spacing(std::string_view name) {
  if (name == "linear") return Spacing::linear;
  if (name == "log") return Spacing::log;
  parse_fail("field 'spacing': expected linear or log, got '" + std::string(name) + "'");
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  parse_fail("field 'format': expected csv or json, got '" + std::string(name) + "'");
}

PotentialParams preset_params(std::string_view name) {
  if (name == "default") return PotentialParams{1.0, 1.0, 1.0, 1.5, 3, 0};
  if (name == "coulomb") return PotentialParams{1.0, 1e-9, 1.0, 2.0, 3, 0};
  parse_fail("unknown preset '" + std::string(name) + "' (known: default, coulomb)");
}

nlohmann::ordered_json to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["command"] = to_string(c.command);
  j["preset"] = c.preset;
  j["C"] = c.params.C;
  j["theta"] = c.params.theta;
  j["q"] = c.params.q;
  j["beta"] = c.params.beta;
  j["D"] = c.params.D;
  j["l"] = c.params.l;
  if (c.rho) j["rho"] = *c.rho;
  if (c.r_min) j["r-min"] = *c.r_min;
  if (c.r_max) j["r-max"] = *c.r_max;
  j["k-min"] = c.k_min;
  j["k-max"] = c.k_max;
  j["points"] = c.points;
  if (c.spacing) j["spacing"] = to_string(*c.spacing);
  j["format"] = to_string(c.format);
  j["out"] = c.out;
  if (c.n) j["n"] = *c.n;
  j["e-min"] = c.e_min;
  j["e-max"] = c.e_max;
  j["eta"] = c.eta;
  j["prefactor"] = c.prefactor;
  return j;
}

RunConfig apply_json(const RunConfig& base, const nlohmann::json& j) {
  if (!j.is_object()) parse_fail("config root must be a JSON object");
  RunConfig c = base;
  for (const auto& [key, v] : j.items()) {
    if (key == "command") c.command = parse_command(get_string(v, key));
    else if (key == "preset") c.preset = get_string(v, key);
    else if (key == "C") c.params.C = get_double(v, key);
    else if (key == "theta") c.params.theta = get_double(v, key);
    else if (key == "q") c.params.q = get_double(v, key);
    else if (key == "beta") c.params.beta = get_double(v, key);
    else if (key == "D") c.params.D = get_int(v, key);
    else if (key == "l") c.params.l = get_int(v, key);
    else if (key == "rho") c.rho = get_double(v, key);
    else if (key == "r-min") c.r_min = get_double(v, key);
    else if (key == "r-max") c.r_max = get_double(v, key);
    else if (key == "k-min") c.k_min = get_double(v, key);
    else if (key == "k-max") c.k_max = get_double(v, key);
    else if (key == "points") c.points = get_int(v, key);
    else if (key == "spacing") c.spacing = parse_spacing(get_string(v, key));
    else if (key == "format") c.format = parse_format(get_string(v, key));
    else if (key == "out") c.out = get_string(v, key);
    else if (key == "n") c.n = get_int(v, key);
    else if (key == "e-min") c.e_min = get_double(v, key);
    else if (key == "e-max") c.e_max = get_double(v, key);
    else if (key == "eta") c.eta = get_double(v, key);
    else if (key == "prefactor") c.prefactor = get_double(v, key);
    else parse_fail("unknown field '" + key + "'");
  }
  return c;
}

nlohmann::json read_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot open config file '" + path + "'");
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream msg;
    msg << path << ":" << line << ":" << col << ": " << e.what();
    parse_fail(msg.str());
  }
}

void check_config(const RunConfig& c) {
  validate(c.params);
  require(c.points >= 2 && c.points <= 10000000, ErrorCode::InvalidArgument, "points must be in [2, 1e7]");
  if (c.rho) require(*c.rho > 0.0 && std::isfinite(*c.rho), ErrorCode::InvalidArgument, "rho must be > 0");
  if (c.r_min && c.r_max)
    require(*c.r_min < *c.r_max, ErrorCode::InvalidArgument, "r-min must be below r-max");
  if (c.r_min) require(std::isfinite(*c.r_min), ErrorCode::InvalidArgument, "r-min must be finite");
  if (c.r_max) require(std::isfinite(*c.r_max), ErrorCode::InvalidArgument, "r-max must be finite");
  require(c.k_min < c.k_max, ErrorCode::InvalidArgument, "k-min must be below k-max");
  require(c.e_min <= c.e_max, ErrorCode::InvalidArgument, "e-min must not exceed e-max");
  require(c.eta >= 0.0, ErrorCode::InvalidArgument, "eta must be >= 0");
  if (c.n) require(*c.n >= 0, ErrorCode::InvalidArgument, "n must be >= 0");
}

}  // namespace gcoul::cli
