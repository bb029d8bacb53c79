// experiments.hpp — Run configurations, bundled example configurations
// (fig1..fig4), the steady-state sweep, the trajectory run, the validation
// suite, and plain-text CSV/manifest output.

#pragma once

#include "qsa/analytic.hpp"
#include "qsa/correlations.hpp"
#include "qsa/dynamics.hpp"
#include "qsa/nonmarkov.hpp"
#include "qsa/thermo.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qsa::experiments {

inline constexpr const char* kVersion = "0.1.0";

// Named initial states: g, e, plus, minus, mixed, or "bloch:x,y,z".
Matrix2 named_state(const std::string& name);

struct SweepAxis {
  std::string param;  // one of the ModelParams field flags
  double min = 0.0, max = 0.0;
  int n = 1;
};

struct RunConfig {
  model::ModelParams params;
  std::string state_s = "e";
  std::string state_s2;  // second member of the trace-distance pair
  std::string state_a = "plus";
  double t_max = 40.0;
  int steps = 2000;           // uniform-grid point count (0 -> ramp grid)
  std::vector<SweepAxis> sweeps;
  std::string out_path = "out.csv";
  int log_base = 2;           // 2 or 0 (natural) for reported correlations
  std::string preset;         // empty or fig1|fig2a|fig2b|fig3|fig4
  int threads = 0;            // 0 -> hardware concurrency
};

// Applies one of the bundled configurations. Figs. 2-4 use the rate reading
// gamma = 1, big_gamma = 0.1 (the oscillatory regime that produces the
// trace-distance revivals); fig1 uses gamma = 10, big_gamma = 1.
RunConfig preset_config(const std::string& name);

// Default partner for the trace-distance pair (g<->e, plus<->minus).
std::string orthogonal_partner(const std::string& state);

struct SweepRow {
  int i = 0, j = 0;
  double axis0 = 0.0, axis1 = 0.0;
  correlations::CorrelationRecord corr;
  int null_dim = 0;
  double residual = 0.0;
  bool failed = false;
};

// One row per grid point; rows computed by a worker pool, assembled by
// index so the output is independent of scheduling.
std::vector<SweepRow> steady_sweep(const RunConfig& cfg);

struct TrajectoryResult {
  std::vector<double> times;
  nonmarkov::DistanceTrajectory distances;
  thermo::ThermoTrajectory rates;
  std::vector<double> mi, eof;  // correlations of the primary trajectory
};

TrajectoryResult trajectory_run(const RunConfig& cfg);

// Cross-oracle validation suite; one line per check. corrupt_lambda is a
// negative-control hook that perturbs one closed-form function and must make
// the suite fail. Returns true when every check passes.
bool validate_suite(std::ostream& os, bool corrupt_lambda = false);

// ------------------------------- output -------------------------------------

void write_sweep_csv(const std::string& path, const RunConfig& cfg,
                     const std::vector<SweepRow>& rows);
void write_trajectory_csv(const std::string& path, const RunConfig& cfg,
                          const TrajectoryResult& r);
void write_manifest(const std::string& csv_path, const RunConfig& cfg,
                    std::optional<double> steady_distance = std::nullopt);

}  // namespace qsa::experiments
