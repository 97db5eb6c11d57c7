#include "commands.hpp"

#include <cmath>
#include <numbers>

#include "gcoul/error.hpp"
#include "gcoul/jgreen.hpp"
#include "gcoul/potential.hpp"
#include "gcoul/scattering.hpp"
#include "gcoul/spectrum.hpp"
#include "gcoul/sturmian.hpp"
#include "gcoul/su11.hpp"
#include "validation.hpp"

#ifndef GCOUL_VERSION
#define GCOUL_VERSION "unknown"
#endif

namespace gcoul::cli {
namespace {

using Row = std::vector<Cell>;

Table header(const RunConfig& c) {
  Table t;
  t.metadata = {
      {"generator", std::string("gcoul")},
      {"version", std::string(GCOUL_VERSION)},
      {"command", std::string(to_string(c.command))},
      {"C", c.params.C},
      {"theta", c.params.theta},
      {"q", c.params.q},
      {"beta", c.params.beta},
      {"D", static_cast<long long>(c.params.D)},
      {"l", static_cast<long long>(c.params.l)},
  };
  return t;
}

struct Range {
  double lo, hi;
  Spacing spacing;
};

Range r_range(const RunConfig& c, double lo, double hi) {
  return {c.r_min.value_or(lo), c.r_max.value_or(hi), c.spacing.value_or(Spacing::linear)};
}

std::vector<double> grid_with_meta(Table& t, const RunConfig& c, const Range& r, const char* prefix) {
  const std::string p(prefix);
  t.metadata.emplace_back(p + "-min", r.lo);
  t.metadata.emplace_back(p + "-max", r.hi);
  t.metadata.emplace_back("points", static_cast<long long>(c.points));
  t.metadata.emplace_back("spacing", std::string(to_string(r.spacing)));
  return sample_grid(r.lo, r.hi, c.points, r.spacing);
}

bool one_dimensional(const RunConfig& c) { return c.params.D == 1; }

Table potential_table(const RunConfig& c) {
  Table t = header(c);
  const auto& p = c.params;
  const bool oned = one_dimensional(c);
  const auto xs = grid_with_meta(t, c, r_range(c, oned ? -10.0 : 0.01, 10.0), oned ? "x" : "r");
  t.columns = {oned ? "x" : "r", "v"};
  if (p.theta > 0.0) t.columns.push_back("v_shifted");
  for (double x : xs) {
    const double v = oned ? potential_1d(x, p) : potential(x, p);
    Row row{x, v};
    if (p.theta > 0.0) row.push_back(oned ? v + p.q / p.theta : shifted_potential(x, p));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table charge_density_table(const RunConfig& c) {
  Table t = header(c);
  t.metadata.emplace_back("prefactor", c.prefactor);
  const auto rs = grid_with_meta(t, c, r_range(c, 0.01, 10.0), "r");
  t.columns = {"r", "density"};
  for (double r : rs) t.rows.push_back({r, charge_density(r, c.params, c.prefactor)});
  return t;
}

Table spectrum_table(const RunConfig& c) {
  Table t = header(c);
  const int count = c.n.value_or(4);
  t.metadata.emplace_back("states", static_cast<long long>(count));
  const auto& p = c.params;
  if (one_dimensional(c)) {
    t.columns = {"N", "parity", "rho", "energy"};
    for (int N = 0; N < count; ++N) {
      const OneDState s = one_d_state(N, p);
      t.rows.push_back({static_cast<long long>(N), std::string(N % 2 == 0 ? "even" : "odd"), s.rho_tilde(),
                        s.energy()});
    }
    return t;
  }
  t.columns = {"n", "rho", "energy"};
  if (p.theta > 0.0) t.columns.push_back("energy_shifted");
  for (int n = 0; n < count; ++n) {
    Row row{static_cast<long long>(n), rho_n(n, p), energy(n, p)};
    if (p.theta > 0.0) row.push_back(energy_tilde(n, p));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table wavefunction_table(const RunConfig& c) {
  Table t = header(c);
  const int n = c.n.value_or(0);
  t.metadata.emplace_back("n", static_cast<long long>(n));
  if (one_dimensional(c)) {
    const OneDState s = one_d_state(n, c.params);
    t.metadata.emplace_back("rho", s.rho_tilde());
    t.metadata.emplace_back("energy", s.energy());
    const auto xs = grid_with_meta(t, c, r_range(c, -10.0, 10.0), "x");
    t.columns = {"x", "psi"};
    for (double x : xs) t.rows.push_back({x, s(x)});
    return t;
  }
  const BoundState s = wavefunction(n, c.params);
  t.metadata.emplace_back("rho", s.rho());
  t.metadata.emplace_back("energy", s.epsilon());
  const auto rs = grid_with_meta(t, c, r_range(c, 0.01, 20.0), "r");
  t.columns = {"r", "psi"};
  for (double r : rs) t.rows.push_back({r, s(r)});
  return t;
}

SturmianSpec basis(const RunConfig& c) {
  return make_spec(c.rho.value_or(default_basis_rho(c.params.C)), c.params.beta, c.params);
}

Table sturmian_table(const RunConfig& c) {
  Table t = header(c);
  const SturmianSpec s = basis(c);
  const int n = c.n.value_or(0);
  t.metadata.emplace_back("rho", s.rho);
  t.metadata.emplace_back("n", static_cast<long long>(n));
  const auto rs = grid_with_meta(t, c, r_range(c, 0.01, 20.0), "r");
  t.columns = {"r", "phi", "dual_phi"};
  for (double r : rs) {
    const double phi = gcs(n, s, r);
    t.rows.push_back({r, phi, dual_weight(s, r) * phi});
  }
  return t;
}

Table green_table(const RunConfig& c) {
  Table t = header(c);
  const SturmianSpec s = basis(c);
  t.metadata.emplace_back("rho", s.rho);
  t.metadata.emplace_back("eta", c.eta);
  t.metadata.emplace_back("e-min", c.e_min);
  t.metadata.emplace_back("e-max", c.e_max);
  t.metadata.emplace_back("points", static_cast<long long>(c.points));
  t.columns = {"re_eps", "im_eps", "re_G00", "im_G00"};
  for (double e : sample_grid(c.e_min, c.e_max, c.points, Spacing::linear)) {
    const cplx g = green00(cplx(e, c.eta), s, c.params.q);
    t.rows.push_back({e, c.eta, g.real(), g.imag()});
  }
  return t;
}

std::vector<double> k_grid(Table& t, const RunConfig& c) {
  const Spacing sp = c.spacing.value_or(Spacing::log);
  t.metadata.emplace_back("k-min", c.k_min);
  t.metadata.emplace_back("k-max", c.k_max);
  t.metadata.emplace_back("points", static_cast<long long>(c.points));
  t.metadata.emplace_back("spacing", std::string(to_string(sp)));
  return sample_grid(c.k_min, c.k_max, c.points, sp);
}

Table smatrix_table(const RunConfig& c) {
  Table t = header(c);
  const auto ks = k_grid(t, c);
  t.columns = {"k", "re_S", "im_S", "abs_S", "phase_shift"};
  for (double k : ks) {
    const cplx S = s_matrix(k, c.params);
    t.rows.push_back({k, S.real(), S.imag(), std::abs(S), 0.5 * std::arg(S)});
  }
  return t;
}

Table reflection_table(const RunConfig& c) {
  Table t = header(c);
  const auto ks = k_grid(t, c);
  t.columns = {"k", "R2", "re_R", "im_R"};
  for (double k : ks) {
    const cplx R = reflection(k, c.params);
    t.rows.push_back({k, std::norm(R), R.real(), R.imag()});
  }
  return t;
}

Table su11_table(const RunConfig& c) {
  Table t = header(c);
  const SturmianSpec s = basis(c);
  const int n_max = c.n.value_or(5);
  t.metadata.emplace_back("rho", s.rho);
  t.metadata.emplace_back("n-max", static_cast<long long>(n_max));
  const RadialGrid grid = default_grid(s, n_max + 1);
  t.metadata.emplace_back("r-min", grid.r_min);
  t.metadata.emplace_back("r-max", grid.r_max);
  t.metadata.emplace_back("points", static_cast<long long>(grid.points));
  t.columns = {"check", "n", "defect"};
  for (int n = 0; n <= n_max; ++n)
    t.rows.push_back({std::string("eigen"), static_cast<long long>(n), eigen_check(n, s, grid)});
  for (int n = 0; n <= n_max; ++n)
    t.rows.push_back({std::string("ladder"), static_cast<long long>(n), ladder_check(n, s, grid)});
  for (int n = 0; n <= n_max; ++n)
    t.rows.push_back({std::string("casimir"), static_cast<long long>(n), casimir_check(n, s, grid)});
  const CommutatorDefects cd = commutator_check(s, grid, n_max);
  t.rows.push_back({std::string("commutator_J1J2"), static_cast<long long>(n_max), cd.j1j2});
  t.rows.push_back({std::string("commutator_J2J3"), static_cast<long long>(n_max), cd.j2j3});
  t.rows.push_back({std::string("commutator_J3J1"), static_cast<long long>(n_max), cd.j3j1});
  return t;
}

RunOutput validate_table(const RunConfig& c) {
  RunOutput out;
  out.table = header(c);
  out.table.metadata.emplace_back("preset", c.preset);
  out.table.columns = {"check", "value", "tolerance", "status"};
  for (const auto& r : run_validation(c.params)) {
    std::string status = r.passed ? "pass" : "fail";
    if (!r.error.empty()) status = "error " + r.error;
    out.ok = out.ok && r.passed;
    out.table.rows.push_back({r.name, r.value, r.tolerance, status});
  }
  return out;
}

}  // namespace

std::vector<double> sample_grid(double lo, double hi, int points, Spacing spacing) {
  if (points < 2) throw Error(ErrorCode::InvalidArgument, "a grid needs at least 2 points");
  if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "grid needs min < max");
  std::vector<double> g(points);
  if (spacing == Spacing::log) {
    if (!(lo > 0.0)) throw Error(ErrorCode::InvalidArgument, "log spacing needs a positive lower bound");
    const double a = std::log(lo), b = std::log(hi);
    for (int i = 0; i < points; ++i) g[i] = std::exp(a + (b - a) * i / (points - 1));
  } else {
    for (int i = 0; i < points; ++i) g[i] = lo + (hi - lo) * i / (points - 1);
  }
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::string render(const Table& table, Format format) {
  return format == Format::csv ? render_csv(table) : render_json(table);
}

RunOutput run_command(const RunConfig& c) {
  switch (c.command) {
    case Command::potential: return {potential_table(c), true};
    case Command::charge_density: return {charge_density_table(c), true};
    case Command::spectrum: return {spectrum_table(c), true};
    case Command::wavefunction: return {wavefunction_table(c), true};
    case Command::sturmian: return {sturmian_table(c), true};
    case Command::green: return {green_table(c), true};
    case Command::smatrix: return {smatrix_table(c), true};
    case Command::reflection: return {reflection_table(c), true};
    case Command::su11_check: return {su11_table(c), true};
    case Command::validate: return validate_table(c);
  }
  throw Error(ErrorCode::InvalidArgument, "unhandled command");
}

}  // namespace gcoul::cli
