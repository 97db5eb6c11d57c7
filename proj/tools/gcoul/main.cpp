#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "gcoul/error.hpp"
#include "table.hpp"

#ifndef GCOUL_VERSION
#define GCOUL_VERSION "unknown"
#endif

namespace {

using namespace gcoul::cli;

struct Flags {
  std::optional<std::string> command, preset, config, emit_config, spacing, format, out;
  std::optional<double> C, theta, q, beta, rho, r_min, r_max, k_min, k_max, e_min, e_max, eta, prefactor;
  std::optional<int> D, l, points, n;
};

template <class T, class U>
void set_if(const std::optional<T>& flag, U& field) {
  if (flag) field = *flag;
}

RunConfig resolve(const Flags& f) {
  nlohmann::json file = nlohmann::json::object();
  if (f.config) file = read_config_file(*f.config);
  if (!file.is_object()) throw gcoul::Error(gcoul::ErrorCode::ParseError, "config root must be a JSON object");

  RunConfig c;
  c.preset = "default";
  if (file.contains("preset") && file["preset"].is_string()) c.preset = file["preset"].get<std::string>();
  if (f.preset) c.preset = *f.preset;
  c.params = preset_params(c.preset);
  file.erase("preset");
  c = apply_json(c, file);

  bool have_command = file.contains("command");
  if (f.command) {
    c.command = parse_command(*f.command);
    have_command = true;
  }
  if (!have_command) throw gcoul::Error(gcoul::ErrorCode::ParseError, "no command given (flag or config 'command')");

  set_if(f.C, c.params.C);
  set_if(f.theta, c.params.theta);
  set_if(f.q, c.params.q);
  set_if(f.beta, c.params.beta);
  set_if(f.D, c.params.D);
  set_if(f.l, c.params.l);
  if (f.rho) c.rho = f.rho;
  if (f.r_min) c.r_min = f.r_min;
  if (f.r_max) c.r_max = f.r_max;
  set_if(f.k_min, c.k_min);
  set_if(f.k_max, c.k_max);
  set_if(f.points, c.points);
  if (f.spacing) c.spacing = parse_spacing(*f.spacing);
  if (f.format) c.format = parse_format(*f.format);
  set_if(f.out, c.out);
  if (f.n) c.n = f.n;
  set_if(f.e_min, c.e_min);
  set_if(f.e_max, c.e_max);
  set_if(f.eta, c.eta);
  set_if(f.prefactor, c.prefactor);
  // the Coulomb preset keeps beta tied to the angular quantum numbers
  if (c.preset == "coulomb" && !f.beta && !file.contains("beta")) c.params.beta = 2.0 * c.params.l + c.params.D - 1.0;
  check_config(c);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gcoul: generalized Coulomb potential, spectrum, Sturmian basis, Green's function and scattering"};
  app.set_version_flag("--version", std::string(GCOUL_VERSION));
  Flags f;
  app.add_option("command", f.command,
                 "potential | charge-density | spectrum | wavefunction | sturmian | green | smatrix | "
                 "reflection | su11-check | validate");
  app.add_option("--C", f.C, "scale C > 0");
  app.add_option("--theta", f.theta, "deformation theta >= 0");
  app.add_option("--q", f.q, "Coulomb strength q");
  app.add_option("--beta", f.beta, "singularity parameter beta > 0");
  app.add_option("--D", f.D, "spatial dimension");
  app.add_option("--l", f.l, "angular momentum");
  app.add_option("--rho", f.rho, "Sturmian basis scale (default 2/sqrt(C))");
  app.add_option("--r-min", f.r_min, "lower end of the r (or x) grid");
  app.add_option("--r-max", f.r_max, "upper end of the r (or x) grid");
  app.add_option("--k-min", f.k_min, "lower end of the momentum grid");
  app.add_option("--k-max", f.k_max, "upper end of the momentum grid");
  app.add_option("--points", f.points, "grid points");
  app.add_option("--spacing", f.spacing, "linear | log");
  app.add_option("--format", f.format, "csv | json");
  app.add_option("--out", f.out, "output file (default: standard output)");
  app.add_option("--config", f.config, "flat JSON config; flags override its values");
  app.add_option("--n", f.n, "state index, or state count for spectrum / n-max for su11-check");
  app.add_option("--e-min", f.e_min, "lowest real energy for green");
  app.add_option("--e-max", f.e_max, "highest real energy for green");
  app.add_option("--eta", f.eta, "imaginary part of the energy for green");
  app.add_option("--prefactor", f.prefactor, "scale applied to the charge density");
  app.add_option("--preset", f.preset, "default | coulomb");
  app.add_option("--emit-config", f.emit_config, "write the resolved config as JSON to FILE (or stdout) and exit")
      ->expected(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
    return 1;
  }

  RunConfig config;
  try {
    config = resolve(f);
  } catch (const gcoul::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    if (f.emit_config) {
      const std::string text = to_json(config).dump(2) + "\n";
      if (f.emit_config->empty() || *f.emit_config == "-")
        std::fwrite(text.data(), 1, text.size(), stdout);
      else
        write_atomic(*f.emit_config, text);
      return 0;
    }
    const RunOutput result = run_command(config);
    const std::string text = render(result.table, config.format);
    if (config.out.empty()) {
      std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
      write_atomic(config.out, text);
    }
    if (!result.ok) {
      std::cerr << "ValidationFailed: one or more checks did not pass\n";
      return 2;
    }
  } catch (const gcoul::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "InternalError: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
