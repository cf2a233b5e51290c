#pragma once

#include "cvdqs/scenario.hpp"

namespace cvdqs {

// Each command resolves its inputs from the config, runs, and writes its
// artifacts under run.out_dir. Files are written atomically and are
// byte-identical across reruns with the same config and seed; every CSV
// starts with a "# config_hash=<hex>" comment line tying it to its inputs.
// Errors surface as exceptions; the CLI maps them to exit codes.

// Homodyne record of a single sensor: trace.csv with one SQL-normalized
// sample column per requested RF phase plus a shot-noise reference column,
// trace.json with analytic and sample statistics, and trace_sweep.csv
// (mean/std versus RF phase over a full period) when phi_sweep_steps > 0.
void cmd_trace(const ScenarioConfig& config);

// Side-by-side entangled and unsqueezed-probe estimation runs: task.json.
// With a parameter_sweep section, also task_sweep.csv with one Monte Carlo
// run per swept working point.
void cmd_task(const ScenarioConfig& config);

// Variance versus signed VBS transmissivity: sweep.csv plus sweep.json with
// branch minima and asymmetry figures. Degenerate estimator points are left
// out of the CSV as gaps.
void cmd_sweep(const ScenarioConfig& config);

// Optimal-probe variance versus sensor count at fixed per-sensor photon
// budget: scaling.csv (one quantum column per efficiency, one unsqueezed
// reference column) and scaling.json with fitted log-log slopes.
void cmd_scaling(const ScenarioConfig& config);

// Source characterization from measured squeezing levels: infer.json.
void cmd_infer(const ScenarioConfig& config);

// Circuit synthesis for a task's optimal amplitude distribution: synth.json
// with the VBS chain, port map, sensor phases, and aligned delay signs.
void cmd_synth(const ScenarioConfig& config);

}  // namespace cvdqs
