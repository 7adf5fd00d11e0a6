#pragma once

// End-to-end runs of the three resonance configurations: small coupling around
// simple zeros, an oscillator whose own resonance function vanishes, and two
// linear oscillators with a vanishing resonant forcing mode.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fucik/dynamics.hpp"
#include "fucik/resonance.hpp"

namespace fucik {

struct ScenarioCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct LabeledPoint {
  std::string label;
  TorusPoint point;
  Matrix2 jacobian;  // closed form
  DpmClass classification = DpmClass::Neither;
};

struct PipelineResult {
  Direction direction = Direction::Forward;
  TorusZero zero;
  InvariantSetChoice choice;
  InvarianceReport verification;
  OrbitTrace orbit;
  bool radii_increasing = false;     // every consecutive pair, both radii
  bool all_in_E = false;
  double min_radius_start = 0;
  double min_radius_end = 0;
  double required_growth = 0;        // N * min(growth_margins)
  bool energy_diverges = false;      // late section energies exceed early ones
};

struct ScenarioOptions {
  int grid = 32;
  double newton_tol = 1e-10;
  int verify_samples = 500;
  int orbit_iterations = 200;
  std::uint64_t seed = 1;
  bool run_pipelines = true;
  IntegratorSettings integrator;
};

struct ScenarioReport {
  std::string name;
  nlohmann::json parameters;  // resolved inputs
  std::vector<TorusZero> zeros;
  std::vector<LabeledPoint> closed_form;
  std::vector<ScenarioCheck> checks;
  std::vector<PipelineResult> pipelines;
  nlohmann::json extras;      // scenario-specific quantities

  bool all_passed() const;
  const ScenarioCheck* find_check(const std::string& name) const;
  void add_check(std::string name, bool passed, std::string detail = {});
};

/// Builds E around the zero, verifies it on a fresh sample and iterates an orbit from inside.
PipelineResult run_pipeline(const ResonanceEval& ev, const TorusZero& zero, Direction dir,
                            const ScenarioOptions& opt);

struct SmallCouplingParams {
  double a1 = 2.25, a2 = 0.64;
  int n = 1;
  ForcingSignal p1 = ForcingSignal::cosine(1);
  ForcingSignal p2 = ForcingSignal::cosine(1);
  double limit1 = 1.0, limit2 = 1.0;  // coupling shape at scale 1
  std::vector<double> scales{0.0, 0.01, 0.02, 0.05, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0};
};

/// Continues the uncoupled simple zero (negative slopes of Phi_1, Phi_2) along the
/// coupling scale grid and reports the largest scale phi* up to which JL stays D+.
ScenarioReport scenario_small_coupling(const SmallCouplingParams& prm, const ScenarioOptions& opt = {});

struct Phi1NullParams {
  int k = 2;        // a1 = n^2 (2k/(1+2k))^2, p1 = cos(2knt)
  double a2 = 1.1;
  int r = 1;        // p2 = mu cos(r n t)
  int n = 1;
  std::optional<double> mu;  // default 2 mu_hat + 1
  double limit1 = 0.5, limit2 = 0.25;
};

ScenarioReport scenario_phi1_null(const Phi1NullParams& prm, const ScenarioOptions& opt = {});

struct LinearSymmetricParams {
  int n = 1;
  ForcingSignal p1 = ForcingSignal::cosine(2);  // no n-th mode
  ForcingSignal p2 = ForcingSignal::cosine(1);
  double limit1 = 0.5, limit2 = 0.25;
};

ScenarioReport scenario_linear_symmetric(const LinearSymmetricParams& prm, const ScenarioOptions& opt = {});

/// Phase psi in [0, 2 pi) and amplitude |p_hat| with Phi(u) = -|p_hat| cos(u + psi)/sqrt(2n),
/// from a cosine/sine projection of Phi for the linear pair a = b = n^2.
struct PhaseAmplitude {
  double psi = 0;
  double amplitude = 0;
};
PhaseAmplitude project_phase(const ResonanceEval& ev, int i);

}  // namespace fucik
