#include "cvdqs/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "cvdqs/decibel.hpp"
#include "cvdqs/errors.hpp"
#include "cvdqs/io.hpp"

namespace cvdqs {

namespace {

constexpr double kPi = 3.14159265358979323846;

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
  throw ConfigError(message);
}

void expect_object(const json& j, const std::string& where) {
  if (!j.is_object()) {
    fail(where + ": expected a JSON object");
  }
}

void reject_unknown(const json& j, const std::set<std::string>& known,
                    const std::string& where) {
  for (const auto& item : j.items()) {
    if (known.find(item.key()) == known.end()) {
      fail(where + ": unknown key '" + item.key() + "'");
    }
  }
}

template <typename T>
T get_as(const json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    fail(where + ": wrong value type");
  }
}

template <typename T>
void read_field(const json& j, const char* key, T& out,
                const std::string& where) {
  if (j.contains(key)) {
    out = get_as<T>(j.at(key), where + "." + key);
  }
}

template <typename T>
void read_field(const json& j, const char* key, std::optional<T>& out,
                const std::string& where) {
  if (j.contains(key)) {
    out = get_as<T>(j.at(key), where + "." + key);
  }
}

template <typename T>
void write_field(json& j, const char* key, const std::optional<T>& value) {
  if (value.has_value()) {
    j[key] = *value;
  }
}

SourceSpec parse_source(const json& j) {
  expect_object(j, "source");
  reject_unknown(j,
                 {"r", "ideal_squeezing_db", "measured_squeezing_db",
                  "measured_antisqueezing_db", "network_squeezing_db"},
                 "source");
  SourceSpec out;
  read_field(j, "r", out.r, "source");
  read_field(j, "ideal_squeezing_db", out.ideal_squeezing_db, "source");
  read_field(j, "measured_squeezing_db", out.measured_squeezing_db, "source");
  read_field(j, "measured_antisqueezing_db", out.measured_antisqueezing_db,
             "source");
  read_field(j, "network_squeezing_db", out.network_squeezing_db, "source");
  return out;
}

json source_to_json(const SourceSpec& s) {
  json j = json::object();
  write_field(j, "r", s.r);
  write_field(j, "ideal_squeezing_db", s.ideal_squeezing_db);
  write_field(j, "measured_squeezing_db", s.measured_squeezing_db);
  write_field(j, "measured_antisqueezing_db", s.measured_antisqueezing_db);
  write_field(j, "network_squeezing_db", s.network_squeezing_db);
  return j;
}

CircuitSpec parse_circuit(const json& j) {
  expect_object(j, "circuit");
  reject_unknown(j,
                 {"num_sensors", "vbs_chain", "from_task", "port_map",
                  "sensor_phase_pi", "efficiency"},
                 "circuit");
  CircuitSpec out;
  if (!j.contains("num_sensors")) {
    fail("circuit.num_sensors is required");
  }
  out.num_sensors = get_as<int>(j.at("num_sensors"), "circuit.num_sensors");
  read_field(j, "vbs_chain", out.vbs_chain, "circuit");
  read_field(j, "from_task", out.from_task, "circuit");
  read_field(j, "port_map", out.port_map, "circuit");
  read_field(j, "sensor_phase_pi", out.sensor_phase_pi, "circuit");
  read_field(j, "efficiency", out.efficiency, "circuit");
  return out;
}

json circuit_to_json(const CircuitSpec& c) {
  json j = json::object();
  j["num_sensors"] = c.num_sensors;
  write_field(j, "vbs_chain", c.vbs_chain);
  if (c.from_task) {
    j["from_task"] = true;
  }
  write_field(j, "port_map", c.port_map);
  write_field(j, "sensor_phase_pi", c.sensor_phase_pi);
  write_field(j, "efficiency", c.efficiency);
  return j;
}

GeometrySpec parse_geometry(const json& j) {
  expect_object(j, "scene.geometry");
  reject_unknown(j, {"spacing_m", "carrier_hz", "aoa_rad", "reference_sensor"},
                 "scene.geometry");
  GeometrySpec out;
  read_field(j, "spacing_m", out.spacing_m, "scene.geometry");
  read_field(j, "carrier_hz", out.carrier_hz, "scene.geometry");
  read_field(j, "aoa_rad", out.aoa_rad, "scene.geometry");
  read_field(j, "reference_sensor", out.reference_sensor, "scene.geometry");
  return out;
}

json geometry_to_json(const GeometrySpec& g) {
  json j = json::object();
  j["spacing_m"] = g.spacing_m;
  j["carrier_hz"] = g.carrier_hz;
  j["aoa_rad"] = g.aoa_rad;
  j["reference_sensor"] = g.reference_sensor;
  return j;
}

SceneSpec parse_scene(const json& j) {
  expect_object(j, "scene");
  reject_unknown(j,
                 {"amplitudes_v", "phases_rad", "delay_signs",
                  "aligned_delay_signs", "carrier_amplitude", "eo_coefficient",
                  "v_pi", "geometry"},
                 "scene");
  SceneSpec out;
  read_field(j, "amplitudes_v", out.amplitudes_v, "scene");
  read_field(j, "phases_rad", out.phases_rad, "scene");
  read_field(j, "delay_signs", out.delay_signs, "scene");
  read_field(j, "aligned_delay_signs", out.aligned_delay_signs, "scene");
  read_field(j, "carrier_amplitude", out.carrier_amplitude, "scene");
  read_field(j, "eo_coefficient", out.eo_coefficient, "scene");
  read_field(j, "v_pi", out.v_pi, "scene");
  if (j.contains("geometry")) {
    out.geometry = parse_geometry(j.at("geometry"));
  }
  return out;
}

json scene_to_json(const SceneSpec& s) {
  json j = json::object();
  write_field(j, "amplitudes_v", s.amplitudes_v);
  write_field(j, "phases_rad", s.phases_rad);
  write_field(j, "delay_signs", s.delay_signs);
  if (s.aligned_delay_signs) {
    j["aligned_delay_signs"] = true;
  }
  write_field(j, "carrier_amplitude", s.carrier_amplitude);
  write_field(j, "eo_coefficient", s.eo_coefficient);
  write_field(j, "v_pi", s.v_pi);
  if (s.geometry.has_value()) {
    j["geometry"] = geometry_to_json(*s.geometry);
  }
  return j;
}

TaskSpec parse_task(const json& j) {
  expect_object(j, "task");
  reject_unknown(j, {"preset", "picture", "target", "weights", "data_signs"},
                 "task");
  TaskSpec out;
  read_field(j, "preset", out.preset, "task");
  read_field(j, "picture", out.picture, "task");
  read_field(j, "target", out.target, "task");
  read_field(j, "weights", out.weights, "task");
  read_field(j, "data_signs", out.data_signs, "task");
  return out;
}

json task_to_json(const TaskSpec& t) {
  json j = json::object();
  write_field(j, "preset", t.preset);
  write_field(j, "picture", t.picture);
  write_field(j, "target", t.target);
  write_field(j, "weights", t.weights);
  write_field(j, "data_signs", t.data_signs);
  return j;
}

RunSpec parse_run(const json& j) {
  expect_object(j, "run");
  reject_unknown(j, {"shots", "seed", "jobs", "out_dir"}, "run");
  RunSpec out;
  read_field(j, "shots", out.shots, "run");
  read_field(j, "seed", out.seed, "run");
  read_field(j, "jobs", out.jobs, "run");
  read_field(j, "out_dir", out.out_dir, "run");
  return out;
}

json run_to_json(const RunSpec& r) {
  json j = json::object();
  j["shots"] = r.shots;
  j["seed"] = r.seed;
  j["jobs"] = r.jobs;
  j["out_dir"] = r.out_dir;
  return j;
}

SweepSpec parse_sweep(const json& j) {
  expect_object(j, "sweep");
  reject_unknown(
      j, {"vbs_index", "signed_t", "signed_t_min", "signed_t_max", "steps"},
      "sweep");
  SweepSpec out;
  read_field(j, "vbs_index", out.vbs_index, "sweep");
  read_field(j, "signed_t", out.signed_t, "sweep");
  read_field(j, "signed_t_min", out.signed_t_min, "sweep");
  read_field(j, "signed_t_max", out.signed_t_max, "sweep");
  read_field(j, "steps", out.steps, "sweep");
  return out;
}

json sweep_to_json(const SweepSpec& s) {
  json j = json::object();
  j["vbs_index"] = s.vbs_index;
  if (s.signed_t.has_value()) {
    j["signed_t"] = *s.signed_t;
  } else {
    j["signed_t_min"] = s.signed_t_min;
    j["signed_t_max"] = s.signed_t_max;
    j["steps"] = s.steps;
  }
  return j;
}

ParameterSweepSpec parse_parameter_sweep(const json& j) {
  expect_object(j, "parameter_sweep");
  reject_unknown(j, {"kind", "sensors", "min", "max", "steps"},
                 "parameter_sweep");
  ParameterSweepSpec out;
  if (!j.contains("kind") || !j.contains("sensors")) {
    fail("parameter_sweep needs 'kind' and 'sensors'");
  }
  out.kind = get_as<std::string>(j.at("kind"), "parameter_sweep.kind");
  out.sensors =
      get_as<std::vector<int>>(j.at("sensors"), "parameter_sweep.sensors");
  read_field(j, "min", out.min, "parameter_sweep");
  read_field(j, "max", out.max, "parameter_sweep");
  read_field(j, "steps", out.steps, "parameter_sweep");
  return out;
}

json parameter_sweep_to_json(const ParameterSweepSpec& p) {
  json j = json::object();
  j["kind"] = p.kind;
  j["sensors"] = p.sensors;
  j["min"] = p.min;
  j["max"] = p.max;
  j["steps"] = p.steps;
  return j;
}

TraceSpec parse_trace(const json& j) {
  expect_object(j, "trace");
  reject_unknown(j, {"phases_pi", "samples", "phi_sweep_steps"}, "trace");
  TraceSpec out;
  read_field(j, "phases_pi", out.phases_pi, "trace");
  read_field(j, "samples", out.samples, "trace");
  read_field(j, "phi_sweep_steps", out.phi_sweep_steps, "trace");
  return out;
}

json trace_to_json(const TraceSpec& t) {
  json j = json::object();
  j["phases_pi"] = t.phases_pi;
  j["samples"] = t.samples;
  if (t.phi_sweep_steps > 0) {
    j["phi_sweep_steps"] = t.phi_sweep_steps;
  }
  return j;
}

ScalingSpec parse_scaling(const json& j) {
  expect_object(j, "scaling");
  reject_unknown(j, {"sensor_counts", "per_sensor_photon", "efficiencies"},
                 "scaling");
  ScalingSpec out;
  if (!j.contains("sensor_counts")) {
    fail("scaling.sensor_counts is required");
  }
  out.sensor_counts =
      get_as<std::vector<int>>(j.at("sensor_counts"), "scaling.sensor_counts");
  read_field(j, "per_sensor_photon", out.per_sensor_photon, "scaling");
  read_field(j, "efficiencies", out.efficiencies, "scaling");
  return out;
}

json scaling_to_json(const ScalingSpec& s) {
  json j = json::object();
  j["sensor_counts"] = s.sensor_counts;
  j["per_sensor_photon"] = s.per_sensor_photon;
  j["efficiencies"] = s.efficiencies;
  return j;
}

InferSpec parse_infer(const json& j) {
  expect_object(j, "infer");
  reject_unknown(j, {"squeezing_db", "antisqueezing_db", "network_squeezing_db"},
                 "infer");
  InferSpec out;
  if (!j.contains("squeezing_db") || !j.contains("antisqueezing_db")) {
    fail("infer needs 'squeezing_db' and 'antisqueezing_db'");
  }
  out.squeezing_db = get_as<double>(j.at("squeezing_db"), "infer.squeezing_db");
  out.antisqueezing_db =
      get_as<double>(j.at("antisqueezing_db"), "infer.antisqueezing_db");
  read_field(j, "network_squeezing_db", out.network_squeezing_db, "infer");
  return out;
}

json infer_to_json(const InferSpec& i) {
  json j = json::object();
  j["squeezing_db"] = i.squeezing_db;
  j["antisqueezing_db"] = i.antisqueezing_db;
  write_field(j, "network_squeezing_db", i.network_squeezing_db);
  return j;
}

}  // namespace

ScenarioConfig parse_scenario(const json& j) {
  expect_object(j, "scenario");
  reject_unknown(j,
                 {"source", "circuit", "scene", "task", "run", "sweep",
                  "parameter_sweep", "trace", "scaling", "infer"},
                 "scenario");
  ScenarioConfig out;
  if (j.contains("source")) out.source = parse_source(j.at("source"));
  if (j.contains("circuit")) out.circuit = parse_circuit(j.at("circuit"));
  if (j.contains("scene")) out.scene = parse_scene(j.at("scene"));
  if (j.contains("task")) out.task = parse_task(j.at("task"));
  if (j.contains("run")) out.run = parse_run(j.at("run"));
  if (j.contains("sweep")) out.sweep = parse_sweep(j.at("sweep"));
  if (j.contains("parameter_sweep")) {
    out.parameter_sweep = parse_parameter_sweep(j.at("parameter_sweep"));
  }
  if (j.contains("trace")) out.trace = parse_trace(j.at("trace"));
  if (j.contains("scaling")) out.scaling = parse_scaling(j.at("scaling"));
  if (j.contains("infer")) out.infer = parse_infer(j.at("infer"));
  return out;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail("cannot open config file: " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail("config parse error in " + path + ": " + e.what());
  }
  return parse_scenario(j);
}

json scenario_to_json(const ScenarioConfig& config) {
  json j = json::object();
  if (config.source.has_value()) j["source"] = source_to_json(*config.source);
  if (config.circuit.has_value()) {
    j["circuit"] = circuit_to_json(*config.circuit);
  }
  if (config.scene.has_value()) j["scene"] = scene_to_json(*config.scene);
  if (config.task.has_value()) j["task"] = task_to_json(*config.task);
  j["run"] = run_to_json(config.run);
  if (config.sweep.has_value()) j["sweep"] = sweep_to_json(*config.sweep);
  if (config.parameter_sweep.has_value()) {
    j["parameter_sweep"] = parameter_sweep_to_json(*config.parameter_sweep);
  }
  if (config.trace.has_value()) j["trace"] = trace_to_json(*config.trace);
  if (config.scaling.has_value()) {
    j["scaling"] = scaling_to_json(*config.scaling);
  }
  if (config.infer.has_value()) j["infer"] = infer_to_json(*config.infer);
  return j;
}

std::string canonical_config_text(const ScenarioConfig& config) {
  json j = scenario_to_json(config);
  // Execution details do not change results, so they stay out of the hash.
  j["run"].erase("jobs");
  j["run"].erase("out_dir");
  return j.dump();
}

std::string config_hash(const ScenarioConfig& config) {
  return fnv1a_hex(canonical_config_text(config));
}

ResolvedSource resolve_source(const ScenarioConfig& config) {
  if (!config.source.has_value()) {
    fail("this command needs a 'source' section");
  }
  const SourceSpec& s = *config.source;
  const int forms = (s.r.has_value() ? 1 : 0) +
                    (s.ideal_squeezing_db.has_value() ? 1 : 0) +
                    (s.measured_squeezing_db.has_value() ? 1 : 0);
  if (forms != 1) {
    fail("source: give exactly one of r, ideal_squeezing_db, or the measured "
         "squeezing/anti-squeezing pair");
  }
  if (s.measured_squeezing_db.has_value() !=
      s.measured_antisqueezing_db.has_value()) {
    fail("source: measured_squeezing_db and measured_antisqueezing_db come "
         "as a pair");
  }

  ResolvedSource out;
  if (s.r.has_value()) {
    if (!(*s.r >= 0.0) || !std::isfinite(*s.r)) {
      fail("source.r must be finite and >= 0");
    }
    out.r = *s.r;
    out.ideal_db = 20.0 * out.r / std::log(10.0);
  } else if (s.ideal_squeezing_db.has_value()) {
    if (!(*s.ideal_squeezing_db >= 0.0)) {
      fail("source.ideal_squeezing_db must be >= 0");
    }
    out.ideal_db = *s.ideal_squeezing_db;
    out.r = out.ideal_db * std::log(10.0) / 20.0;
  } else {
    const SourceInference inference =
        infer_source(*s.measured_squeezing_db, *s.measured_antisqueezing_db);
    out.ideal_db = inference.ideal_db;
    out.r = out.ideal_db * std::log(10.0) / 20.0;
    if (!inference.degenerate) {
      out.uniform_efficiency = inference.efficiency;
    }
  }

  if (s.network_squeezing_db.has_value()) {
    out.uniform_efficiency =
        efficiency_from_network_squeezing(out.ideal_db,
                                          *s.network_squeezing_db);
  }
  return out;
}

SensingTask resolve_task(const ScenarioConfig& config) {
  if (!config.task.has_value()) {
    fail("this command needs a 'task' section");
  }
  const TaskSpec& t = *config.task;
  if (t.preset.has_value()) {
    if (t.picture || t.target || t.weights || t.data_signs) {
      fail("task: a preset cannot be combined with explicit task fields");
    }
    if (*t.preset == "edge-phase") return edge_phase_task();
    if (*t.preset == "central-phase") return central_phase_task();
    if (*t.preset == "average-amplitude") {
      const int m = config.circuit ? config.circuit->num_sensors : 3;
      return average_amplitude_task(m);
    }
    fail("task.preset: unknown preset '" + *t.preset + "'");
  }

  if (!t.picture || !t.weights) {
    fail("task: explicit tasks need 'picture' and 'weights'");
  }
  SensingTask task;
  if (*t.picture == "displacement") {
    task.picture = Picture::kDisplacement;
  } else if (*t.picture == "rf") {
    task.picture = Picture::kRfParameter;
  } else {
    fail("task.picture must be 'displacement' or 'rf'");
  }
  if (task.picture == Picture::kRfParameter) {
    if (!t.target) {
      fail("task: the rf picture needs a 'target'");
    }
    if (*t.target == "amplitude") {
      task.target = RfTarget::kAmplitudeVolts;
    } else if (*t.target == "phase") {
      task.target = RfTarget::kPhaseRadians;
    } else {
      fail("task.target must be 'amplitude' or 'phase'");
    }
  }
  task.weights = Eigen::Map<const Eigen::VectorXd>(
      t.weights->data(), static_cast<Eigen::Index>(t.weights->size()));
  if (t.data_signs.has_value()) {
    task.data_signs = *t.data_signs;
  } else {
    task.data_signs.assign(t.weights->size(), 1);
  }
  task.label = "custom";
  try {
    task.validate();
  } catch (const std::invalid_argument& e) {
    fail(std::string("task: ") + e.what());
  }
  return task;
}

CircuitConfig resolve_circuit(const ScenarioConfig& config,
                              const SensingTask& task,
                              const ResolvedSource& source) {
  if (!config.circuit.has_value()) {
    fail("this command needs a 'circuit' section");
  }
  const CircuitSpec& c = *config.circuit;
  const int m = c.num_sensors;
  if (m <= 0) {
    fail("circuit.num_sensors must be positive");
  }
  if (task.num_sensors() != m) {
    fail("circuit.num_sensors disagrees with the task weight count");
  }

  std::vector<int> port_map(m);
  if (c.port_map.has_value()) {
    if (static_cast<int>(c.port_map->size()) != m) {
      fail("circuit.port_map length must equal num_sensors");
    }
    for (int k = 0; k < m; ++k) {
      const int sensor = (*c.port_map)[k];
      if (sensor < 1 || sensor > m) {
        fail("circuit.port_map entries are 1-based sensor indices");
      }
      port_map[k] = sensor - 1;
    }
  } else {
    for (int k = 0; k < m; ++k) {
      port_map[k] = k;
    }
  }

  CircuitConfig circuit;
  if (c.from_task) {
    if (c.vbs_chain.has_value()) {
      fail("circuit: give either vbs_chain or from_task, not both");
    }
    if (c.sensor_phase_pi.has_value()) {
      fail("circuit: from_task derives sensor phases; do not also list them");
    }
    const AmplitudeDistribution dist = optimal_amplitudes(task);
    circuit = circuit_from_amplitudes(dist.c, port_map);
  } else {
    if (!c.vbs_chain.has_value()) {
      fail("circuit: needs vbs_chain (or from_task: true)");
    }
    circuit.num_sensors = m;
    circuit.vbs_chain = *c.vbs_chain;
    circuit.port_map = port_map;
    circuit.sensor_phase.assign(m, 0.0);
    if (c.sensor_phase_pi.has_value()) {
      if (static_cast<int>(c.sensor_phase_pi->size()) != m) {
        fail("circuit.sensor_phase_pi length must equal num_sensors");
      }
      for (int i = 0; i < m; ++i) {
        const int flag = (*c.sensor_phase_pi)[i];
        if (flag != 0 && flag != 1) {
          fail("circuit.sensor_phase_pi entries must be 0 or 1");
        }
        circuit.sensor_phase[i] = flag * kPi;
      }
    }
    circuit.efficiency.assign(m, 1.0);
  }

  if (c.efficiency.has_value() && source.uniform_efficiency.has_value() &&
      config.source->network_squeezing_db.has_value()) {
    fail("circuit.efficiency conflicts with source.network_squeezing_db");
  }
  if (c.efficiency.has_value()) {
    if (static_cast<int>(c.efficiency->size()) != m) {
      fail("circuit.efficiency length must equal num_sensors");
    }
    circuit.efficiency = *c.efficiency;
  } else if (source.uniform_efficiency.has_value()) {
    circuit.efficiency.assign(m, *source.uniform_efficiency);
  }

  try {
    circuit.validate();
  } catch (const std::invalid_argument& e) {
    fail(std::string("circuit: ") + e.what());
  }
  return circuit;
}

RfScene resolve_scene(const ScenarioConfig& config, const SensingTask& task) {
  const int m = task.num_sensors();
  RfScene scene = RfScene::defaults(m);
  if (task.picture == Picture::kRfParameter &&
      task.target == RfTarget::kPhaseRadians) {
    // Phase tasks operate around the linear working point.
    scene.phases_rad = Eigen::VectorXd::Zero(m);
  }
  if (!config.scene.has_value()) {
    return scene;
  }
  const SceneSpec& s = *config.scene;

  auto load_vector = [&](const std::vector<double>& values, const char* name) {
    if (static_cast<int>(values.size()) != m) {
      fail(std::string("scene.") + name + " length must equal the sensor count");
    }
    return Eigen::Map<const Eigen::VectorXd>(values.data(), m).eval();
  };

  if (s.amplitudes_v.has_value()) {
    scene.amplitudes_v = load_vector(*s.amplitudes_v, "amplitudes_v");
  }
  if (s.phases_rad.has_value() && s.geometry.has_value()) {
    fail("scene: give phases_rad or geometry, not both");
  }
  if (s.phases_rad.has_value()) {
    scene.phases_rad = load_vector(*s.phases_rad, "phases_rad");
  }
  if (s.geometry.has_value()) {
    const GeometrySpec& g = *s.geometry;
    ArrayGeometry geometry{g.spacing_m, g.carrier_hz};
    if (g.reference_sensor < 1 || g.reference_sensor > m) {
      fail("scene.geometry.reference_sensor is a 1-based sensor index");
    }
    try {
      scene.phases_rad =
          phases_from_aoa(geometry, g.aoa_rad, m, g.reference_sensor - 1);
    } catch (const std::invalid_argument& e) {
      fail(std::string("scene.geometry: ") + e.what());
    }
  }
  if (s.delay_signs.has_value() && s.aligned_delay_signs) {
    fail("scene: give delay_signs or aligned_delay_signs, not both");
  }
  if (s.delay_signs.has_value()) {
    if (static_cast<int>(s.delay_signs->size()) != m) {
      fail("scene.delay_signs length must equal the sensor count");
    }
    scene.delay_signs = *s.delay_signs;
  }
  if (s.aligned_delay_signs) {
    for (int i = 0; i < m; ++i) {
      scene.delay_signs[i] = task.weights[i] < 0.0 ? -1 : 1;
    }
  }
  if (s.carrier_amplitude.has_value()) {
    scene.carrier_amplitude = *s.carrier_amplitude;
  }
  if (s.eo_coefficient.has_value()) {
    scene.eo_coefficient = *s.eo_coefficient;
  }
  if (s.v_pi.has_value()) {
    scene.v_pi = *s.v_pi;
  }
  try {
    scene.validate();
  } catch (const std::invalid_argument& e) {
    fail(std::string("scene: ") + e.what());
  }
  return scene;
}

}  // namespace cvdqs
