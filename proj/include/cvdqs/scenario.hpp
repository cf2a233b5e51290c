#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cvdqs/estimation.hpp"
#include "cvdqs/network.hpp"
#include "cvdqs/task.hpp"
#include "cvdqs/transduction.hpp"

namespace cvdqs {

// Scenario configs are plain JSON. Sensor and port indices in config files
// are 1-based; they are converted at the parsing boundary.

struct SourceSpec {
  std::optional<double> r;
  std::optional<double> ideal_squeezing_db;
  std::optional<double> measured_squeezing_db;       // paired with the next
  std::optional<double> measured_antisqueezing_db;
  std::optional<double> network_squeezing_db;  // derives uniform efficiency
};

struct CircuitSpec {
  int num_sensors = 0;
  std::optional<std::vector<double>> vbs_chain;
  bool from_task = false;  // synthesize the chain from the task weights
  std::optional<std::vector<int>> port_map;         // 1-based
  std::optional<std::vector<int>> sensor_phase_pi;  // 0 or 1 per sensor
  std::optional<std::vector<double>> efficiency;
};

struct GeometrySpec {
  double spacing_m = 0.05;
  double carrier_hz = 3.0e9;
  double aoa_rad = 0.0;
  int reference_sensor = 1;  // 1-based
};

struct SceneSpec {
  std::optional<std::vector<double>> amplitudes_v;
  std::optional<std::vector<double>> phases_rad;
  std::optional<std::vector<int>> delay_signs;
  bool aligned_delay_signs = false;  // g_m = sign(weight_m)
  std::optional<double> carrier_amplitude;
  std::optional<double> eo_coefficient;
  std::optional<double> v_pi;
  std::optional<GeometrySpec> geometry;  // fills phases_rad from the AoA
};

struct TaskSpec {
  std::optional<std::string> preset;  // edge-phase | central-phase |
                                      // average-amplitude
  std::optional<std::string> picture;  // displacement | rf
  std::optional<std::string> target;   // amplitude | phase
  std::optional<std::vector<double>> weights;
  std::optional<std::vector<int>> data_signs;
};

struct RunSpec {
  long shots = 100000;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string out_dir = "out";
};

struct SweepSpec {
  int vbs_index = 1;  // 1-based position in the chain
  std::optional<std::vector<double>> signed_t;
  double signed_t_min = -0.95;
  double signed_t_max = 0.95;
  int steps = 39;
};

struct ParameterSweepSpec {
  std::string kind;          // amplitude | phase
  std::vector<int> sensors;  // 1-based, swept together
  double min = 0.0;
  double max = 0.0;
  int steps = 2;
};

struct TraceSpec {
  std::vector<double> phases_pi = {0.54, 1.32};  // units of pi
  long samples = 20000;
  int phi_sweep_steps = 0;  // 0 disables the phase-response sweep
};

struct ScalingSpec {
  std::vector<int> sensor_counts;
  double per_sensor_photon = 10.0;
  std::vector<double> efficiencies = {1.0};
};

struct InferSpec {
  double squeezing_db = 0.0;
  double antisqueezing_db = 0.0;
  std::optional<double> network_squeezing_db;
};

struct ScenarioConfig {
  std::optional<SourceSpec> source;
  std::optional<CircuitSpec> circuit;
  std::optional<SceneSpec> scene;
  std::optional<TaskSpec> task;
  RunSpec run;
  std::optional<SweepSpec> sweep;
  std::optional<ParameterSweepSpec> parameter_sweep;
  std::optional<TraceSpec> trace;
  std::optional<ScalingSpec> scaling;
  std::optional<InferSpec> infer;
};

ScenarioConfig parse_scenario(const nlohmann::json& j);
ScenarioConfig load_scenario(const std::string& path);
nlohmann::json scenario_to_json(const ScenarioConfig& config);

// Canonical serialization used for the output-file hash: sorted keys, no
// execution details (jobs, out_dir).
std::string canonical_config_text(const ScenarioConfig& config);
std::string config_hash(const ScenarioConfig& config);

// Resolved probe source: loss-free squeezing parameter plus the uniform
// per-sensor efficiency implied by the config (1 when nothing implies loss).
struct ResolvedSource {
  double r = 0.0;
  double ideal_db = 0.0;
  std::optional<double> uniform_efficiency;
};

ResolvedSource resolve_source(const ScenarioConfig& config);
SensingTask resolve_task(const ScenarioConfig& config);
CircuitConfig resolve_circuit(const ScenarioConfig& config,
                              const SensingTask& task,
                              const ResolvedSource& source);
RfScene resolve_scene(const ScenarioConfig& config, const SensingTask& task);

}  // namespace cvdqs
