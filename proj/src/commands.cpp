#include "cvdqs/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cvdqs/decibel.hpp"
#include "cvdqs/errors.hpp"
#include "cvdqs/estimation.hpp"
#include "cvdqs/gaussian.hpp"
#include "cvdqs/io.hpp"
#include "cvdqs/random.hpp"

namespace cvdqs {

namespace {

constexpr double kPi = 3.14159265358979323846;
// Reports are normalized so the shot-noise standard deviation reads 1.
const double kSqlStd = std::sqrt(kVacuumVariance);

using nlohmann::json;

std::filesystem::path out_path(const ScenarioConfig& config,
                               const char* name) {
  return std::filesystem::path(config.run.out_dir) / name;
}

void write_artifact(const std::filesystem::path& path,
                    const std::string& text) {
  atomic_write_text(path, text);
  std::cout << "wrote " << path.string() << '\n';
}

std::string hash_line(const std::string& hash) {
  return "# config_hash=" + hash + "\n";
}

// Two-decimal dB for reports; adding 0.0 drops a negative zero.
double db2(double db) { return round_decimals(db, 2) + 0.0; }

std::vector<double> to_std(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

struct SampleStats {
  double mean = 0.0;
  double std = 0.0;
};

SampleStats column_stats(const Eigen::VectorXd& values) {
  SampleStats stats;
  stats.mean = values.mean();
  stats.std = std::sqrt((values.array() - stats.mean).square().sum() /
                        (values.size() - 1));
  return stats;
}

const char* picture_name(Picture picture) {
  return picture == Picture::kDisplacement ? "displacement" : "rf";
}

const char* target_name(RfTarget target) {
  return target == RfTarget::kAmplitudeVolts ? "amplitude" : "phase";
}

json report_to_json(const EstimationReport& report) {
  json j;
  j["estimate"] = report.estimate;
  j["truth"] = report.truth;
  j["analytic_variance"] = report.analytic_variance;
  j["mc_variance"] = report.mc_variance;
  j["mc_variance_se"] = report.mc_variance_se;
  j["mc_mean_se"] = report.mc_mean_se;
  j["sql_variance"] = report.sql_variance;
  j["variance_sql_ratio"] = report.analytic_variance / report.sql_variance;
  j["mc_variance_sql_ratio"] = report.mc_variance / report.sql_variance;
  j["db_below_sql"] = db2(report.db_below_sql);
  j["shots"] = report.num_shots;
  j["seed"] = report.seed;
  return j;
}

json circuit_to_report_json(const CircuitConfig& circuit,
                            const AmplitudeDistribution& dist) {
  json j;
  j["amplitudes"] = to_std(dist.c);
  j["vbs_chain"] = circuit.vbs_chain;
  std::vector<int> port_map;
  port_map.reserve(circuit.port_map.size());
  for (int sensor : circuit.port_map) {
    port_map.push_back(sensor + 1);
  }
  j["port_map"] = port_map;
  std::vector<int> phase_flags;
  phase_flags.reserve(circuit.sensor_phase.size());
  for (double phase : circuit.sensor_phase) {
    phase_flags.push_back(phase > kPi / 2.0 ? 1 : 0);
  }
  j["sensor_phase_pi"] = phase_flags;
  j["efficiency"] = circuit.efficiency;
  return j;
}

// The trace command models one sensor; only the efficiency is negotiable.
CircuitConfig single_sensor_circuit(const ScenarioConfig& config,
                                    const ResolvedSource& source) {
  CircuitConfig circuit = CircuitConfig::identity(1);
  if (source.uniform_efficiency.has_value()) {
    circuit.efficiency[0] = *source.uniform_efficiency;
  }
  if (config.circuit.has_value()) {
    const CircuitSpec& c = *config.circuit;
    if (c.num_sensors != 1) {
      throw ConfigError("trace: this command models a single sensor");
    }
    if (c.efficiency.has_value()) {
      if (c.efficiency->size() != 1) {
        throw ConfigError("circuit.efficiency length must equal num_sensors");
      }
      if (config.source.has_value() &&
          config.source->network_squeezing_db.has_value()) {
        throw ConfigError(
            "circuit.efficiency conflicts with source.network_squeezing_db");
      }
      circuit.efficiency[0] = c.efficiency->front();
    }
  }
  circuit.validate();
  return circuit;
}

}  // namespace

void cmd_trace(const ScenarioConfig& config) {
  const ResolvedSource source = resolve_source(config);
  const TraceSpec trace = config.trace.value_or(TraceSpec{});
  if (trace.phases_pi.empty()) {
    throw ConfigError("trace.phases_pi must not be empty");
  }
  if (trace.samples < 2) {
    throw ConfigError("trace.samples must be at least 2");
  }
  if (trace.phi_sweep_steps < 0) {
    throw ConfigError("trace.phi_sweep_steps must be >= 0");
  }

  const CircuitConfig circuit = single_sensor_circuit(config, source);
  const RfScene scene = resolve_scene(config, average_amplitude_task(1));
  const std::string hash = config_hash(config);
  const long n = trace.samples;
  std::uint64_t stream = 0;

  const std::vector<HomodyneSpec> readout{HomodyneSpec{0, kPi / 2.0}};
  const GaussianState network = prepare_network_state(source.r, circuit);
  const double noise_var = homodyne_stats(network, readout.front()).variance;
  const double noise_std = std::sqrt(noise_var) / kSqlStd;

  GaussianStream reference_rng(derive_seed(config.run.seed, stream++));
  const Eigen::VectorXd reference =
      homodyne_sample(vacuum(1), readout, n, reference_rng).col(0) / kSqlStd;

  struct TraceColumn {
    double phase_pi = 0.0;
    double mean = 0.0;  // SQL-normalized displacement
    Eigen::VectorXd values;
  };
  std::vector<TraceColumn> columns;
  columns.reserve(trace.phases_pi.size());
  for (double phase_pi : trace.phases_pi) {
    RfScene at_phase = scene;
    at_phase.phases_rad[0] = phase_pi * kPi;
    TraceColumn column;
    column.phase_pi = phase_pi;
    const double displacement = displacement_from_rf(at_phase, 1.0, 0);
    column.mean = displacement / kSqlStd;
    GaussianState state = network;
    displace(state, 0, 0.0, displacement);
    GaussianStream rng(derive_seed(config.run.seed, stream++));
    column.values = homodyne_sample(state, readout, n, rng).col(0) / kSqlStd;
    columns.push_back(std::move(column));
  }

  std::string csv = hash_line(hash);
  csv += "sample,sql";
  for (const TraceColumn& column : columns) {
    csv += ",phi_" + format_double(column.phase_pi) + "pi";
  }
  csv += '\n';
  for (long i = 0; i < n; ++i) {
    csv += std::to_string(i + 1);
    csv += ',';
    csv += format_double(reference[i]);
    for (const TraceColumn& column : columns) {
      csv += ',';
      csv += format_double(column.values[i]);
    }
    csv += '\n';
  }
  write_artifact(out_path(config, "trace.csv"), csv);

  json j;
  j["config_hash"] = hash;
  j["samples"] = n;
  j["seed"] = config.run.seed;
  j["noise_db_below_sql"] =
      db2(db_from_variance_ratio(noise_var / kVacuumVariance));
  const SampleStats reference_stats = column_stats(reference);
  j["sql"] = {{"analytic_std", 1.0},
              {"sample_mean", reference_stats.mean},
              {"sample_std", reference_stats.std}};
  json traces = json::array();
  for (const TraceColumn& column : columns) {
    const SampleStats stats = column_stats(column.values);
    traces.push_back({{"phase_pi", column.phase_pi},
                      {"analytic_mean", column.mean},
                      {"analytic_std", noise_std},
                      {"sample_mean", stats.mean},
                      {"sample_std", stats.std}});
  }
  j["traces"] = traces;
  write_artifact(out_path(config, "trace.json"), j.dump(2) + "\n");

  if (trace.phi_sweep_steps > 0) {
    std::string sweep_csv = hash_line(hash);
    sweep_csv += "phi_rad,analytic_mean,analytic_std,sample_mean,sample_std\n";
    for (int k = 0; k < trace.phi_sweep_steps; ++k) {
      const double phi = 2.0 * kPi * k / trace.phi_sweep_steps;
      RfScene at_phase = scene;
      at_phase.phases_rad[0] = phi;
      const double displacement = displacement_from_rf(at_phase, 1.0, 0);
      GaussianState state = network;
      displace(state, 0, 0.0, displacement);
      GaussianStream rng(derive_seed(config.run.seed, stream++));
      const Eigen::VectorXd values =
          homodyne_sample(state, readout, n, rng).col(0) / kSqlStd;
      const SampleStats stats = column_stats(values);
      sweep_csv += format_double(phi) + ',' +
                   format_double(displacement / kSqlStd) + ',' +
                   format_double(noise_std) + ',' +
                   format_double(stats.mean) + ',' +
                   format_double(stats.std) + '\n';
    }
    write_artifact(out_path(config, "trace_sweep.csv"), sweep_csv);
  }
}

void cmd_task(const ScenarioConfig& config) {
  const ResolvedSource source = resolve_source(config);
  const SensingTask task = resolve_task(config);
  const CircuitConfig circuit = resolve_circuit(config, task, source);
  const RfScene scene = resolve_scene(config, task);
  const std::string hash = config_hash(config);
  const RunSpec& run = config.run;
  std::uint64_t stream = 0;

  const EstimationReport entangled =
      run_task_monte_carlo(task, circuit, scene, source.r, run.shots,
                           derive_seed(run.seed, stream++), run.jobs);
  const EstimationReport classical =
      run_task_monte_carlo(task, circuit, scene, 0.0, run.shots,
                           derive_seed(run.seed, stream++), run.jobs);

  const AmplitudeDistribution dist = amplitudes_from_circuit(circuit);
  const Eigen::VectorXd w = build_unbiased_estimator(task, dist, scene);
  const int m = task.num_sensors();

  json j;
  j["config_hash"] = hash;
  json task_json;
  task_json["label"] = task.label;
  task_json["picture"] = picture_name(task.picture);
  if (task.picture == Picture::kRfParameter) {
    task_json["target"] = target_name(task.target);
  }
  task_json["weights"] = to_std(task.weights);
  task_json["data_signs"] = task.data_signs;
  j["task"] = task_json;
  j["circuit"] = circuit_to_report_json(circuit, dist);
  j["estimator_weights"] = to_std(w);

  json noise_ratio = json::array();
  json noise_db = json::array();
  for (int i = 0; i < m; ++i) {
    const double ratio = 1.0 + circuit.efficiency[i] * dist.c[i] * dist.c[i] *
                                   std::expm1(-2.0 * source.r);
    noise_ratio.push_back(ratio);
    noise_db.push_back(db2(db_from_variance_ratio(ratio)));
  }
  j["sensor_noise_sql_ratio"] = noise_ratio;
  j["sensor_noise_db_below_sql"] = noise_db;
  j["entangled"] = report_to_json(entangled);
  j["classical"] = report_to_json(classical);
  write_artifact(out_path(config, "task.json"), j.dump(2) + "\n");

  if (!config.parameter_sweep.has_value()) {
    return;
  }
  const ParameterSweepSpec& sweep = *config.parameter_sweep;
  if (sweep.kind != "amplitude" && sweep.kind != "phase") {
    throw ConfigError("parameter_sweep.kind must be 'amplitude' or 'phase'");
  }
  if (sweep.sensors.empty()) {
    throw ConfigError("parameter_sweep.sensors must not be empty");
  }
  std::set<int> seen;
  for (int sensor : sweep.sensors) {
    if (sensor < 1 || sensor > m) {
      throw ConfigError(
          "parameter_sweep.sensors entries are 1-based sensor indices");
    }
    if (!seen.insert(sensor).second) {
      throw ConfigError("parameter_sweep.sensors entries must be distinct");
    }
  }
  if (sweep.steps < 1) {
    throw ConfigError("parameter_sweep.steps must be >= 1");
  }
  if (!(sweep.min <= sweep.max)) {
    throw ConfigError("parameter_sweep needs min <= max");
  }

  std::string csv = hash_line(hash);
  csv += "value,truth,estimate,estimate_se,mc_variance_sql_ratio,"
         "db_below_sql\n";
  for (int k = 0; k < sweep.steps; ++k) {
    // Lerp between the endpoints: both ends are hit exactly, and a symmetric
    // range crosses zero exactly at the midpoint.
    const double f =
        sweep.steps == 1 ? 0.0
                         : static_cast<double>(k) / (sweep.steps - 1);
    const double value = sweep.min * (1.0 - f) + sweep.max * f;
    RfScene at_point = scene;
    for (int sensor : sweep.sensors) {
      if (sweep.kind == "amplitude") {
        at_point.amplitudes_v[sensor - 1] = value;
      } else {
        at_point.phases_rad[sensor - 1] = value;
      }
    }
    const EstimationReport report =
        run_task_monte_carlo(task, circuit, at_point, source.r, run.shots,
                             derive_seed(run.seed, stream++), run.jobs);
    csv += format_double(value) + ',' + format_double(report.truth) + ',' +
           format_double(report.estimate) + ',' +
           format_double(report.mc_mean_se) + ',' +
           format_double(report.mc_variance / report.sql_variance) + ',' +
           format_fixed(report.db_below_sql, 2) + '\n';
  }
  write_artifact(out_path(config, "task_sweep.csv"), csv);
}

void cmd_sweep(const ScenarioConfig& config) {
  const ResolvedSource source = resolve_source(config);
  const SensingTask task = resolve_task(config);
  const CircuitConfig circuit = resolve_circuit(config, task, source);
  if (!config.sweep.has_value()) {
    throw ConfigError("this command needs a 'sweep' section");
  }
  const SweepSpec& spec = *config.sweep;
  const int chain_size = static_cast<int>(circuit.vbs_chain.size());
  if (spec.vbs_index < 1 || spec.vbs_index > chain_size) {
    throw ConfigError("sweep.vbs_index is a 1-based VBS index");
  }

  std::vector<double> signed_ts;
  if (spec.signed_t.has_value()) {
    if (spec.signed_t->empty()) {
      throw ConfigError("sweep.signed_t must not be empty");
    }
    signed_ts = *spec.signed_t;
  } else {
    if (spec.steps < 1) {
      throw ConfigError("sweep.steps must be >= 1");
    }
    if (!(spec.signed_t_min <= spec.signed_t_max)) {
      throw ConfigError("sweep needs signed_t_min <= signed_t_max");
    }
    for (int k = 0; k < spec.steps; ++k) {
      // Same lerp form as the parameter sweep: a symmetric range hits the
      // degenerate zero point exactly at its midpoint.
      const double f =
          spec.steps == 1 ? 0.0 : static_cast<double>(k) / (spec.steps - 1);
      signed_ts.push_back(spec.signed_t_min * (1.0 - f) +
                          spec.signed_t_max * f);
    }
  }
  for (double t : signed_ts) {
    if (!(std::abs(t) <= 1.0)) {
      throw ConfigError("sweep values must lie in [-1, 1]");
    }
  }

  const std::vector<SweepPoint> points = sweep_transmissivity(
      task, circuit, spec.vbs_index - 1, signed_ts, source.r);
  const std::string hash = config_hash(config);

  std::string csv = hash_line(hash);
  csv += "signed_t,var_quantum_sql,var_classical_sql,db_quantum,"
         "db_classical\n";
  int degenerate_count = 0;
  for (const SweepPoint& point : points) {
    if (point.degenerate) {
      // A gap: no unbiased estimator exists at this dial setting.
      ++degenerate_count;
      continue;
    }
    csv += format_double(point.signed_t) + ',' +
           format_double(point.quantum_ratio) + ',' +
           format_double(point.classical_ratio) + ',' +
           format_fixed(db_from_variance_ratio(point.quantum_ratio), 2) +
           ',' +
           format_fixed(db_from_variance_ratio(point.classical_ratio), 2) +
           '\n';
  }
  write_artifact(out_path(config, "sweep.csv"), csv);

  const SweepPoint* quantum_min = nullptr;
  const SweepPoint* classical_min = nullptr;
  for (const SweepPoint& point : points) {
    if (point.degenerate) {
      continue;
    }
    if (quantum_min == nullptr ||
        point.quantum_ratio < quantum_min->quantum_ratio) {
      quantum_min = &point;
    }
    if (classical_min == nullptr ||
        point.classical_ratio < classical_min->classical_ratio) {
      classical_min = &point;
    }
  }
  if (quantum_min == nullptr) {
    throw DegenerateEstimatorError(
        "sweep: every requested point is degenerate");
  }

  // Pair the branches by |T| to quantify the sign asymmetry.
  std::map<long long, std::pair<const SweepPoint*, const SweepPoint*>> pairs;
  for (const SweepPoint& point : points) {
    if (point.degenerate || point.signed_t == 0.0) {
      continue;
    }
    const long long key =
        std::llround(std::abs(point.signed_t) * 1.0e6);
    if (point.signed_t > 0.0) {
      pairs[key].first = &point;
    } else {
      pairs[key].second = &point;
    }
  }
  double max_classical_asymmetry = 0.0;
  double max_branch_ratio = 1.0;
  double branch_ratio_at_min = 1.0;
  const long long min_key =
      std::llround(std::abs(quantum_min->signed_t) * 1.0e6);
  for (const auto& [key, pair] : pairs) {
    if (pair.first == nullptr || pair.second == nullptr) {
      continue;
    }
    max_classical_asymmetry = std::max(
        max_classical_asymmetry,
        std::abs(pair.first->classical_ratio - pair.second->classical_ratio));
    const double hi =
        std::max(pair.first->quantum_ratio, pair.second->quantum_ratio);
    const double lo =
        std::min(pair.first->quantum_ratio, pair.second->quantum_ratio);
    const double ratio = hi / lo;
    max_branch_ratio = std::max(max_branch_ratio, ratio);
    if (key == min_key) {
      branch_ratio_at_min = ratio;
    }
  }

  json j;
  j["config_hash"] = hash;
  j["vbs_index"] = spec.vbs_index;
  j["points_total"] = points.size();
  j["points_degenerate"] = degenerate_count;
  j["quantum_min"] = {
      {"signed_t", quantum_min->signed_t},
      {"variance_sql_ratio", quantum_min->quantum_ratio},
      {"db_below_sql",
       db2(db_from_variance_ratio(quantum_min->quantum_ratio))}};
  j["classical_min"] = {
      {"signed_t", classical_min->signed_t},
      {"variance_sql_ratio", classical_min->classical_ratio},
      {"db_below_sql",
       db2(db_from_variance_ratio(classical_min->classical_ratio))}};
  j["max_classical_asymmetry"] = max_classical_asymmetry;
  j["max_quantum_branch_ratio"] = max_branch_ratio;
  j["quantum_branch_ratio_at_min"] = branch_ratio_at_min;
  write_artifact(out_path(config, "sweep.json"), j.dump(2) + "\n");
}

void cmd_scaling(const ScenarioConfig& config) {
  if (!config.scaling.has_value()) {
    throw ConfigError("this command needs a 'scaling' section");
  }
  const ScalingSpec& spec = *config.scaling;
  if (spec.sensor_counts.empty()) {
    throw ConfigError("scaling.sensor_counts must not be empty");
  }
  for (int count : spec.sensor_counts) {
    if (count < 1) {
      throw ConfigError("scaling.sensor_counts entries must be >= 1");
    }
  }
  if (!(spec.per_sensor_photon >= 0.0) ||
      !std::isfinite(spec.per_sensor_photon)) {
    throw ConfigError("scaling.per_sensor_photon must be finite and >= 0");
  }
  if (spec.efficiencies.empty()) {
    throw ConfigError("scaling.efficiencies must not be empty");
  }
  for (double eta : spec.efficiencies) {
    if (!(eta > 0.0 && eta <= 1.0)) {
      throw ConfigError("scaling.efficiencies entries must lie in (0, 1]");
    }
  }

  const std::string hash = config_hash(config);
  std::string csv = hash_line(hash);
  csv += "num_sensors,var_classical";
  for (double eta : spec.efficiencies) {
    csv += ",var_quantum_eta_" + format_double(eta);
  }
  csv += '\n';

  std::vector<double> counts;
  std::vector<double> classical;
  std::vector<std::vector<double>> quantum(spec.efficiencies.size());
  for (int count : spec.sensor_counts) {
    // Equal weights 1/M: the average of M sensor readings.
    const double vbar = 1.0 / std::sqrt(static_cast<double>(count));
    const double total_photon = spec.per_sensor_photon * count;
    counts.push_back(count);
    classical.push_back(vbar * vbar / 4.0);
    csv += std::to_string(count) + ',' + format_double(classical.back());
    for (std::size_t e = 0; e < spec.efficiencies.size(); ++e) {
      quantum[e].push_back(minimum_estimation_variance(
          vbar, total_photon, spec.efficiencies[e]));
      csv += ',' + format_double(quantum[e].back());
    }
    csv += '\n';
  }
  write_artifact(out_path(config, "scaling.csv"), csv);

  json j;
  j["config_hash"] = hash;
  j["per_sensor_photon"] = spec.per_sensor_photon;
  if (counts.size() >= 2) {
    j["classical_slope"] = loglog_slope(counts, classical);
  }
  json per_eta = json::array();
  for (std::size_t e = 0; e < spec.efficiencies.size(); ++e) {
    json entry;
    entry["efficiency"] = spec.efficiencies[e];
    if (counts.size() >= 2) {
      entry["slope"] = loglog_slope(counts, quantum[e]);
    }
    std::vector<double> large_counts;
    std::vector<double> large_quantum;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] >= 8.0) {
        large_counts.push_back(counts[i]);
        large_quantum.push_back(quantum[e][i]);
      }
    }
    if (large_counts.size() >= 2) {
      entry["slope_large_m"] = loglog_slope(large_counts, large_quantum);
    }
    per_eta.push_back(entry);
  }
  j["per_efficiency"] = per_eta;
  write_artifact(out_path(config, "scaling.json"), j.dump(2) + "\n");
}

void cmd_infer(const ScenarioConfig& config) {
  if (!config.infer.has_value()) {
    throw ConfigError("this command needs an 'infer' section");
  }
  const InferSpec& spec = *config.infer;
  const SourceInference inference =
      infer_source(spec.squeezing_db, spec.antisqueezing_db);

  json j;
  j["config_hash"] = config_hash(config);
  j["measured_squeezing_db"] = spec.squeezing_db;
  j["measured_antisqueezing_db"] = spec.antisqueezing_db;
  j["degenerate"] = inference.degenerate;
  j["ideal_squeezing_db"] = db2(inference.ideal_db);
  j["mean_photon"] = mean_photon_from_db(inference.ideal_db);
  if (!inference.degenerate) {
    j["source_efficiency"] = inference.efficiency;
  }
  if (spec.network_squeezing_db.has_value()) {
    j["network_squeezing_db"] = *spec.network_squeezing_db;
    j["overall_efficiency"] = efficiency_from_network_squeezing(
        inference.ideal_db, *spec.network_squeezing_db);
  }
  write_artifact(out_path(config, "infer.json"), j.dump(2) + "\n");
}

void cmd_synth(const ScenarioConfig& config) {
  const SensingTask task = resolve_task(config);
  const int m = task.num_sensors();

  std::vector<int> port_map(m);
  for (int k = 0; k < m; ++k) {
    port_map[k] = k;
  }
  if (config.circuit.has_value()) {
    const CircuitSpec& c = *config.circuit;
    if (c.num_sensors != m) {
      throw ConfigError("circuit.num_sensors disagrees with the task");
    }
    if (c.port_map.has_value()) {
      if (static_cast<int>(c.port_map->size()) != m) {
        throw ConfigError("circuit.port_map length must equal num_sensors");
      }
      for (int k = 0; k < m; ++k) {
        const int sensor = (*c.port_map)[k];
        if (sensor < 1 || sensor > m) {
          throw ConfigError(
              "circuit.port_map entries are 1-based sensor indices");
        }
        port_map[k] = sensor - 1;
      }
    }
  }

  const AmplitudeDistribution dist = optimal_amplitudes(task);
  const CircuitConfig circuit = circuit_from_amplitudes(dist.c, port_map);

  std::vector<int> delay_signs(m, 1);
  for (int i = 0; i < m; ++i) {
    delay_signs[i] = task.weights[i] < 0.0 ? -1 : 1;
  }

  json j;
  j["config_hash"] = config_hash(config);
  j["task"] = {{"label", task.label},
               {"picture", picture_name(task.picture)},
               {"weights", to_std(task.weights)}};
  json circuit_json = circuit_to_report_json(circuit, dist);
  json squared = json::array();
  for (int i = 0; i < m; ++i) {
    squared.push_back(dist.c[i] * dist.c[i]);
  }
  circuit_json["amplitude_squared"] = squared;
  circuit_json.erase("efficiency");  // synthesis is a lossless description
  j["circuit"] = circuit_json;
  j["delay_signs"] = delay_signs;
  write_artifact(out_path(config, "synth.json"), j.dump(2) + "\n");
}

}  // namespace cvdqs
