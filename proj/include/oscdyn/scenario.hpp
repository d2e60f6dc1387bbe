#pragma once

#include <string>
#include <vector>

#include "oscdyn/config.hpp"
#include "oscdyn/envelope.hpp"
#include "oscdyn/kernels.hpp"
#include "oscdyn/params.hpp"
#include "oscdyn/phase_space.hpp"

namespace oscdyn {

enum class ScenarioKind {
  pair_energy,        // excitation numbers of the driven pair vs time
  maxima_path,        // Q-maximum trajectory in the complex plane
  husimi_grid,        // marginal Q of one oscillator, coherent init
  husimi_reduced,     // reduced Q of oscillator 2, number-state init
  chain_excitations,  // site occupations of an n-site chain vs time
  oracle_compare,     // closed forms vs brute-force integration (CLI-only)
};

struct TimeGrid {
  double start = 0.0;
  double end = 0.0;
  int points = 0;
  bool coupling_units = false;  // interpret values as coupling * t

  std::vector<double> times(double coupling) const;
  double to_seconds(double value, double coupling) const;
};

struct SeriesSpec {
  std::string id;
  std::string label;
  SystemParams params;
  DampingEnvelope env = DampingEnvelope::constant(0.0);
  double n1_init = 0.0, n2_init = 0.0;  // pair-energy
  CoherentInit init{};                  // maxima-path / husimi-grid
  double nbar = 0.0;                    // phase-space reservoir occupation
  int photons = 1;                      // husimi-reduced
  int oscillator = 2;                   // husimi-grid marginal target
  double snapshot_time = 0.0;           // grid kinds, in TimeGrid units
  GridSpec grid;
};

struct OracleSpec {
  int sets = 5;
  unsigned long long seed = 1;
  int time_points = 200;
  double time_max = 20.0;  // in coupling units
  double tolerance = 1e-8;
};

struct Scenario {
  ScenarioKind kind = ScenarioKind::pair_energy;
  std::string name;
  std::string title, xlabel, ylabel;
  TimeGrid time;
  std::string out_dir = "out";
  std::string out_basename;
  std::vector<std::string> columns;  // pair-energy output selection (e1, e2)
  std::vector<SeriesSpec> series;
  OracleSpec oracle;
};

// Validates the whole document against the kind's schema; unknown keys,
// missing required keys and out-of-range values throw ConfigError before
// anything is written.
Scenario load_scenario(const ConfigDoc& doc);

struct RunOptions {
  std::string out_dir;   // overrides the scenario's output directory
  double tol = 0.0;      // overrides quadrature abs/rel tolerance
  int grid_points = 0;   // overrides phase-space grid points per axis
};

struct RunResult {
  std::vector<std::string> files;  // paths written, in order
};

// Computes every series and writes CSV data plus SVG figures.  Rejects
// oracle_compare scenarios (the CLI owns that path so figure runs never link
// the brute-force propagators).
RunResult run_scenario(const Scenario& scenario, const RunOptions& opt = {});

// Built-in demo scenarios, keyed fig2/fig3/fig4/fig6.
std::vector<std::string> preset_names();
std::string preset_config(const std::string& name);

}  // namespace oscdyn
