#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "fucik/errors.hpp"
#include "fucik/report_json.hpp"
#include "run_config.hpp"

#ifndef FUCIK_VERSION
#define FUCIK_VERSION "0.0.0"
#endif

namespace fucik::cli {

namespace fs = std::filesystem;
using nlohmann::json;

const char* tool_version() { return FUCIK_VERSION; }

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

/// Output directory for one command; every file carries the resolved configuration.
class Output {
 public:
  Output(std::string dir, std::string command, json config)
      : dir_(std::move(dir)), command_(std::move(command)), config_(std::move(config)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw IoError("cannot create output directory '" + dir_ + "': " + ec.message());
  }

  void json_report(const json& result) const {
    json doc = {{"tool", {{"name", "fucik"}, {"version", tool_version()}}},
                {"command", command_},
                {"config", config_},
                {"result", result}};
    write("report.json", doc.dump(2) + "\n");
  }

  void csv(const std::string& name, const std::vector<std::string>& columns,
           const std::vector<std::vector<std::string>>& rows) const {
    std::string text = "# fucik " + std::string(tool_version()) + "\n# command: " + command_ +
                       "\n# config: " + config_.dump() + "\n";
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t j = 0; j < cells.size(); ++j) {
        if (j) text += ',';
        text += cells[j];
      }
      text += '\n';
    };
    line(columns);
    for (const auto& r : rows) line(r);
    write(name, text);
  }

 private:
  void write(const std::string& name, const std::string& text) const {
    const fs::path p = fs::path(dir_) / name;
    std::ofstream out(p, std::ios::binary);
    if (!out) throw IoError("cannot open '" + p.string() + "' for writing");
    out << text;
    out.close();
    if (!out) throw IoError("write to '" + p.string() + "' failed");
  }

  std::string dir_, command_;
  json config_;
};

struct Flags {
  std::string config_path;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples, grid, iterations, zero_index;
  std::optional<double> tol;
  std::optional<std::string> direction, start, matrix;
  std::string scenario;
  std::vector<std::string> sets;
};

RunConfig resolve(const Flags& f) {
  RunConfig cfg = f.config_path.empty() ? RunConfig{} : load_config_file(f.config_path);
  if (!f.out.empty()) cfg.output_dir = f.out;
  if (f.seed) cfg.seed = *f.seed;
  auto& r = cfg.run;
  if (f.samples) r.samples = *f.samples;
  if (f.grid) r.grid = *f.grid;
  if (f.iterations) r.iterations = *f.iterations;
  if (f.zero_index) r.zero_index = *f.zero_index;
  if (f.tol) r.tol = *f.tol;
  if (f.direction) r.direction = direction_from_string(*f.direction);
  if (f.start) {
    const auto v = parse_numbers(*f.start, 4);
    r.start = std::array<double, 4>{v[0], v[1], v[2], v[3]};
  }
  if (f.matrix) {
    const auto v = parse_numbers(*f.matrix, 4);
    r.matrix = Matrix2{v[0], v[1], v[2], v[3]};
  }
  if (r.grid && *r.grid < 2) throw PreconditionError("--grid must be at least 2");
  if (r.samples && *r.samples < 1) throw PreconditionError("--samples must be positive");
  if (r.tol && !(*r.tol > 0)) throw PreconditionError("--tol must be positive");
  return cfg;
}

const SystemConfig& need_system(const RunConfig& cfg, const std::string& cmd) {
  if (!cfg.system) throw PreconditionError(cmd + ": the configuration defines no system (n, oscillators)");
  return *cfg.system;
}

json matrix_json(const Matrix2& m) { return fucik::to_json(m); }

std::vector<std::string> zero_row(std::size_t index, const TorusZero& z) {
  const auto& J = z.jacobian;
  return {std::to_string(index), num(z.omega.t1()), num(z.omega.t2()), to_string(z.classification),
          num(z.residual_norm), num(J.a11), num(J.a12), num(J.a21), num(J.a22)};
}

const std::vector<std::string> kZeroColumns{"index", "theta1", "theta2", "class", "residual_norm",
                                            "j11", "j12", "j21", "j22"};

std::vector<std::vector<std::string>> orbit_rows(const OrbitTrace& tr) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t k = 0; k < tr.states.size(); ++k) {
    const auto& s = tr.states[k];
    const std::string flag = tr.in_E.empty() ? "-1" : (tr.in_E[k] ? "1" : "0");
    rows.push_back({std::to_string(k), num(s.theta1), num(s.theta2), num(s.r1), num(s.r2),
                    num(tr.energies[k][0]), num(tr.energies[k][1]), flag});
  }
  return rows;
}

const std::vector<std::string> kOrbitColumns{"k", "theta1", "theta2", "r1", "r2", "energy1", "energy2", "in_E"};

json base_header(const RunConfig& cfg) { return to_json(cfg); }

// ---- subcommands ----

void cmd_resonance(const RunConfig& cfg) {
  const auto& sys = need_system(cfg, "resonance");
  const int grid = cfg.run.grid.value_or(64);
  json header = base_header(cfg);
  header["params"] = {{"grid", grid}};
  const Output out(cfg.output_dir, "resonance", header);
  const ResonanceEval ev(sys);

  std::vector<std::vector<std::string>> rows;
  for (int j = 0; j < grid; ++j) {
    const double t = kTwoPi * j / grid;
    rows.push_back({num(t), num(lambda_fn(sys.pair(0), sys.pair(1), t)), num(lambda_fn(sys.pair(1), sys.pair(0), t)),
                    num(sigma_fn(sys.pair(0), sys.pair(1), t)), num(sigma_fn(sys.pair(1), sys.pair(0), t)),
                    num(ev.phi(0, t)), num(ev.phi(1, t)), num(ev.phi_derivative(0, t)),
                    num(ev.phi_derivative(1, t))});
  }
  out.csv("resonance_1d.csv",
          {"t", "lambda1", "lambda2", "sigma1", "sigma2", "phi1", "phi2", "phi1_prime", "phi2_prime"}, rows);

  rows.clear();
  for (int j = 0; j < grid; ++j)
    for (int k = 0; k < grid; ++k) {
      const Vec2 th{kTwoPi * j / grid, kTwoPi * k / grid};
      const Vec2 L = ev.L(th);
      rows.push_back({num(th[0]), num(th[1]), num(L[0]), num(L[1])});
    }
  out.csv("torus_L.csv", {"theta1", "theta2", "L1", "L2"}, rows);

  out.json_report({{"alpha", {alpha(sys.pair(0)), alpha(sys.pair(1))}},
                   {"resolubility",
                    {{"oscillator1", fucik::to_json(resolubility_check(sys.pair(0), sys.pair(1)))},
                     {"oscillator2", fucik::to_json(resolubility_check(sys.pair(1), sys.pair(0)))}}}});
}

void cmd_zeros(const RunConfig& cfg) {
  const auto& sys = need_system(cfg, "zeros");
  const int grid = cfg.run.grid.value_or(32);
  const double tol = cfg.run.tol.value_or(1e-10);
  json header = base_header(cfg);
  header["params"] = {{"grid", grid}, {"tol", tol}};
  const Output out(cfg.output_dir, "zeros", header);
  const ResonanceEval ev(sys);
  const ZeroSearch zs = find_zeros(ev, grid, tol);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < zs.zeros.size(); ++i) rows.push_back(zero_row(i, zs.zeros[i]));
  out.csv("zeros.csv", kZeroColumns, rows);
  out.json_report(fucik::to_json(zs));
}

void cmd_contraction(const RunConfig& cfg) {
  if (!cfg.run.matrix) throw PreconditionError("contraction: --matrix a11,a12,a21,a22 is required");
  const Matrix2 A = *cfg.run.matrix;
  const int samples = cfg.run.samples.value_or(10000);
  json header = base_header(cfg);
  header["system"] = nullptr;
  header["params"] = {{"matrix", matrix_json(A)}, {"samples", samples}};
  const DpmClass cls = classify_dpm(A);
  if (cls == DpmClass::Neither) throw PreconditionError("contraction: the matrix is neither D+ nor D-");
  const Output out(cfg.output_dir, "contraction", header);

  // A D- matrix contracts in reverse time; the estimate runs on -A.
  const Matrix2 Aw = cls == DpmClass::DPlus ? A : -A;
  const ConeParams cp = find_cone_params(Aw);
  const ContractionReport rep = verify_contraction(Aw, cp, samples, cfg.seed);

  std::vector<std::vector<std::string>> rows;
  const double q_lo = std::max(cp.slope - cp.eta, 0.0), q_hi = cp.slope + cp.eta;
  constexpr int kRays = 5, kRadii = 64;
  for (int ray = 0; ray < kRays; ++ray) {
    const double q = q_lo + (q_hi - q_lo) * ray / (kRays - 1);
    const double phi = std::atan(q);
    for (int j = 1; j <= kRadii; ++j) {
      const double len = cp.eps0 * j / kRadii;
      const double nb = spectral_norm(b_epsilon(Aw, {len * std::cos(phi), len * std::sin(phi)}));
      const double bound = 1 - cp.a0 * len / 2;
      rows.push_back({std::to_string(ray), num(q), num(len), num(nb), num(bound), num(bound - nb)});
    }
  }
  out.csv("contraction_profile.csv", {"ray", "ratio", "eps_norm", "norm_b", "bound", "margin"}, rows);

  json result = {{"matrix", matrix_json(A)},
                 {"class", to_string(cls)},
                 {"mode", cls == DpmClass::DPlus ? "forward" : "backward"},
                 {"cone", fucik::to_json(cp)},
                 {"verification", fucik::to_json(rep)}};
  if (cls == DpmClass::DMinus)
    result["note"] = "D- matrix: cone parameters computed for -A, which governs the time-reversed map";
  out.json_report(result);
}

struct ZeroPick {
  TorusZero zero;
  Direction dir;
  std::string note;
};

ZeroPick pick_zero(const ResonanceEval& ev, const RunConfig& cfg, int index, const std::string& cmd) {
  const ZeroSearch zs = find_zeros(ev, cfg.run.grid.value_or(32), cfg.run.tol.value_or(1e-10));
  if (index < 0 || index >= static_cast<int>(zs.zeros.size()))
    throw PreconditionError(cmd + ": zero index " + std::to_string(index) + " out of range (" +
                            std::to_string(zs.zeros.size()) + " zeros found)");
  const TorusZero& z = zs.zeros[index];
  if (z.classification == DpmClass::Neither)
    throw PreconditionError(cmd + ": zero " + std::to_string(index) + " is neither D+ nor D-");
  ZeroPick pk{z, z.classification == DpmClass::DPlus ? Direction::Forward : Direction::Backward, {}};
  if (pk.dir == Direction::Backward)
    pk.note = "D- zero: invariant set built for the backward map, orbits grow in reverse time";
  return pk;
}

void cmd_invariance(const RunConfig& cfg) {
  const auto& sys = need_system(cfg, "invariance");
  const int index = cfg.run.zero_index.value_or(0);
  const int samples = cfg.run.samples.value_or(500);
  json header = base_header(cfg);
  header["params"] = {{"grid", cfg.run.grid.value_or(32)}, {"tol", cfg.run.tol.value_or(1e-10)},
                      {"zero_index", index}, {"samples", samples}};
  const ResonanceEval ev(sys);
  const ZeroPick pk = pick_zero(ev, cfg, index, "invariance");
  if (cfg.run.direction && *cfg.run.direction != pk.dir)
    throw PreconditionError("invariance: zero " + std::to_string(index) + " supports only the " +
                            to_string(pk.dir) + " direction");
  header["params"]["direction"] = to_string(pk.dir);
  const Output out(cfg.output_dir, "invariance", header);

  ChooseOptions co;
  co.seed = cfg.seed;
  const InvariantSetChoice choice = choose_invariant_set(ev, pk.zero, cfg.integrator, pk.dir, co);
  const InvarianceReport rep = verify_invariance(sys, choice.params, samples, cfg.integrator, cfg.seed);

  const auto& p = choice.params;
  out.csv("invariance.csv",
          {"direction", "omega1", "omega2", "R", "Theta", "lambda", "eta", "margin1", "margin2", "samples",
           "violations"},
          {{to_string(p.direction), num(p.omega.t1()), num(p.omega.t2()), num(p.R), num(p.Theta), num(p.lambda),
            num(p.eta), num(p.growth_margins[0]), num(p.growth_margins[1]), std::to_string(rep.samples),
            std::to_string(rep.violations)}});
  json result = {{"zero", fucik::to_json(pk.zero)},
                 {"invariant_set", fucik::to_json(choice)},
                 {"verification", fucik::to_json(rep)},
                 {"passed", rep.violations == 0}};
  if (!pk.note.empty()) result["note"] = pk.note;
  out.json_report(result);
}

void cmd_orbit(const RunConfig& cfg) {
  const auto& sys = need_system(cfg, "orbit");
  if (!cfg.run.start) throw PreconditionError("orbit: --start theta1,theta2,r1,r2 is required");
  const int N = cfg.run.iterations.value_or(200);
  if (N < 1) throw PreconditionError("orbit: the iteration count must be at least 1");
  const auto st = *cfg.run.start;
  const Direction dir = cfg.run.direction.value_or(Direction::Forward);
  json header = base_header(cfg);
  header["params"] = {{"start", st}, {"iterations", N}, {"direction", to_string(dir)}};

  std::optional<InvariantSetParams> params;
  json result;
  if (cfg.run.zero_index) {
    const ResonanceEval ev(sys);
    const ZeroPick pk = pick_zero(ev, cfg, *cfg.run.zero_index, "orbit");
    if (pk.dir != dir)
      throw PreconditionError("orbit: zero " + std::to_string(*cfg.run.zero_index) + " needs --direction " +
                              to_string(pk.dir));
    header["params"]["zero_index"] = *cfg.run.zero_index;
    header["params"]["grid"] = cfg.run.grid.value_or(32);
    header["params"]["tol"] = cfg.run.tol.value_or(1e-10);
    ChooseOptions co;
    co.seed = cfg.seed;
    params = choose_invariant_set(ev, pk.zero, cfg.integrator, dir, co).params;
    result["invariant_set"] = fucik::to_json(*params);
  }
  const Output out(cfg.output_dir, "orbit", header);
  const OrbitTrace tr = iterate_orbit(sys, PolarState{st[0], st[1], st[2], st[3]}, N, dir, cfg.integrator, params);
  out.csv("orbit.csv", kOrbitColumns, orbit_rows(tr));

  bool increasing = true;
  for (std::size_t k = 1; k < tr.states.size(); ++k)
    increasing = increasing && tr.states[k].r1 > tr.states[k - 1].r1 && tr.states[k].r2 > tr.states[k - 1].r2;
  const auto& last = tr.states.back();
  result["iterations"] = N;
  result["final"] = {last.theta1, last.theta2, last.r1, last.r2};
  result["min_radius_start"] = std::min(st[2], st[3]);
  result["min_radius_end"] = std::min(last.r1, last.r2);
  result["radii_increasing"] = increasing;
  if (params) result["all_in_E"] = std::all_of(tr.in_E.begin(), tr.in_E.end(), [](bool b) { return b; });
  out.json_report(result);
}

// ---- scenarios ----

double to_double(const std::string&, const std::string& v) { return parse_numbers(v, 1)[0]; }

int to_int(const std::string& key, const std::string& v) {
  const double d = to_double(key, v);
  if (d != std::floor(d) || std::abs(d) > 1e9) throw PreconditionError("--set " + key + ": expected an integer");
  return static_cast<int>(d);
}

std::map<std::string, std::string> parse_sets(const std::vector<std::string>& sets) {
  std::map<std::string, std::string> out;
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw PreconditionError("--set '" + s + "': expected key=value");
    out[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return out;
}

/// Applies one override; returns false for an unknown key.
template <typename Params>
bool apply_common(Params& prm, const std::string& k, const std::string& v) {
  if (k == "limit1") prm.limit1 = to_double(k, v);
  else if (k == "limit2") prm.limit2 = to_double(k, v);
  else if (k == "n") prm.n = to_int(k, v);
  else return false;
  return true;
}

ScenarioReport run_named_scenario(const std::string& name, const std::map<std::string, std::string>& sets,
                                  const ScenarioOptions& opt) {
  auto unknown = [&](const std::string& k) {
    return PreconditionError("scenario " + name + ": unknown override '" + k + "'");
  };
  if (name == "small-coupling") {
    SmallCouplingParams prm;
    for (const auto& [k, v] : sets) {
      if (apply_common(prm, k, v)) continue;
      if (k == "a1") prm.a1 = to_double(k, v);
      else if (k == "a2") prm.a2 = to_double(k, v);
      else if (k == "p1") prm.p1 = parse_forcing(v);
      else if (k == "p2") prm.p2 = parse_forcing(v);
      else if (k == "scales") prm.scales = parse_numbers(v);
      else throw unknown(k);
    }
    return scenario_small_coupling(prm, opt);
  }
  if (name == "phi1-null") {
    Phi1NullParams prm;
    for (const auto& [k, v] : sets) {
      if (apply_common(prm, k, v)) continue;
      if (k == "k") prm.k = to_int(k, v);
      else if (k == "a2") prm.a2 = to_double(k, v);
      else if (k == "r") prm.r = to_int(k, v);
      else if (k == "mu") prm.mu = to_double(k, v);
      else throw unknown(k);
    }
    return scenario_phi1_null(prm, opt);
  }
  if (name == "linear-symmetric") {
    LinearSymmetricParams prm;
    for (const auto& [k, v] : sets) {
      if (apply_common(prm, k, v)) continue;
      if (k == "p1") prm.p1 = parse_forcing(v);
      else if (k == "p2") prm.p2 = parse_forcing(v);
      else throw unknown(k);
    }
    return scenario_linear_symmetric(prm, opt);
  }
  throw PreconditionError("unknown scenario '" + name + "' (expected small-coupling, phi1-null or linear-symmetric)");
}

void cmd_scenario(const RunConfig& cfg, const std::string& name, const std::vector<std::string>& set_args) {
  if (cfg.system) throw PreconditionError("scenario: scenarios build their own system; drop n/oscillators");
  if (cfg.run.direction || cfg.run.start || cfg.run.matrix || cfg.run.zero_index)
    throw PreconditionError("scenario: only grid, tol, samples and iterations apply");
  const auto sets = parse_sets(set_args);
  ScenarioOptions opt;
  opt.grid = cfg.run.grid.value_or(opt.grid);
  opt.newton_tol = cfg.run.tol.value_or(opt.newton_tol);
  opt.verify_samples = cfg.run.samples.value_or(opt.verify_samples);
  opt.orbit_iterations = cfg.run.iterations.value_or(opt.orbit_iterations);
  if (opt.orbit_iterations < 1) throw PreconditionError("scenario: the iteration count must be at least 1");
  opt.seed = cfg.seed;
  opt.integrator = cfg.integrator;

  json header = base_header(cfg);
  header.erase("system");
  header["params"] = {{"scenario", name},
                      {"overrides", sets},
                      {"grid", opt.grid},
                      {"tol", opt.newton_tol},
                      {"samples", opt.verify_samples},
                      {"iterations", opt.orbit_iterations}};
  const ScenarioReport rep = run_named_scenario(name, sets, opt);
  const Output out(cfg.output_dir, "scenario", header);

  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < rep.zeros.size(); ++i) rows.push_back(zero_row(i, rep.zeros[i]));
  out.csv("zeros.csv", kZeroColumns, rows);
  for (const auto& p : rep.pipelines)
    out.csv("orbit_" + to_string(p.direction) + ".csv", kOrbitColumns, orbit_rows(p.orbit));
  out.json_report(fucik::to_json(rep));
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Resonance analysis of coupled asymmetric oscillators", "fucik"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  Flags f;
  auto common = [&f](CLI::App* sub, bool with_config = true) {
    if (with_config) sub->add_option("--config", f.config_path, "YAML run configuration");
    sub->add_option("--out", f.out, "output directory");
    sub->add_option("--seed", f.seed, "random seed");
  };

  auto* res = app.add_subcommand("resonance", "tabulate Lambda, Sigma, Phi and L");
  common(res);
  res->add_option("--grid", f.grid, "points per axis");

  auto* zer = app.add_subcommand("zeros", "zeros of L with D+/D- classification");
  common(zer);
  zer->add_option("--grid", f.grid, "seed cells per axis");
  zer->add_option("--tol", f.tol, "Newton residual tolerance");

  auto* con = app.add_subcommand("contraction", "cone parameters and contraction check for a 2x2 matrix");
  common(con);
  con->add_option("--matrix", f.matrix, "a11,a12,a21,a22");
  con->add_option("--samples", f.samples, "cone samples");

  auto* inv = app.add_subcommand("invariance", "construct and verify an invariant set around a zero");
  common(inv);
  inv->add_option("--zero-index", f.zero_index, "index into the sorted zero list");
  inv->add_option("--grid", f.grid, "zero search cells per axis");
  inv->add_option("--tol", f.tol, "Newton residual tolerance");
  inv->add_option("--samples", f.samples, "verification samples");
  inv->add_option("--direction", f.direction, "forward or backward");

  auto* orb = app.add_subcommand("orbit", "iterate the Poincare map");
  common(orb);
  orb->add_option("--start", f.start, "theta1,theta2,r1,r2");
  orb->add_option("-N,--iterations", f.iterations, "number of map iterations");
  orb->add_option("--direction", f.direction, "forward or backward");
  orb->add_option("--zero-index", f.zero_index, "flag membership in the invariant set of this zero");
  orb->add_option("--grid", f.grid, "zero search cells per axis");
  orb->add_option("--tol", f.tol, "Newton residual tolerance");

  auto* sce = app.add_subcommand("scenario", "run a named scenario end to end");
  common(sce);
  sce->add_option("name", f.scenario, "small-coupling, phi1-null or linear-symmetric")->required();
  sce->add_option("--set", f.sets, "parameter override key=value");
  sce->add_option("--grid", f.grid, "zero search cells per axis");
  sce->add_option("--tol", f.tol, "Newton residual tolerance");
  sce->add_option("--samples", f.samples, "invariance verification samples");
  sce->add_option("-N,--iterations", f.iterations, "orbit length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kPrecondition;
  }

  try {
    const RunConfig cfg = resolve(f);
    if (res->parsed()) cmd_resonance(cfg);
    else if (zer->parsed()) cmd_zeros(cfg);
    else if (con->parsed()) cmd_contraction(cfg);
    else if (inv->parsed()) cmd_invariance(cfg);
    else if (orb->parsed()) cmd_orbit(cfg);
    else if (sce->parsed()) cmd_scenario(cfg, f.scenario, f.sets);
    return kOk;
  } catch (const IoError& e) {
    std::cerr << "fucik: I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "fucik: I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const PreconditionError& e) {
    std::cerr << "fucik: " << e.what() << "\n";
    return kPrecondition;
  } catch (const NumericalError& e) {
    std::cerr << "fucik: numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "fucik: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "fucik: internal error: " << e.what() << "\n";
    return kInternal;
  }
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace fucik::cli
