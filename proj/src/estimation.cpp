#include "cvdqs/estimation.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "cvdqs/decibel.hpp"
#include "cvdqs/errors.hpp"
#include "cvdqs/random.hpp"

namespace cvdqs {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_probe_args(double mean_photon, double efficiency,
                      const char* where) {
  if (!(mean_photon >= 0.0) || !std::isfinite(mean_photon)) {
    throw std::invalid_argument(std::string(where) +
                                ": mean photon number must be >= 0");
  }
  if (!(efficiency >= 0.0 && efficiency <= 1.0)) {
    throw std::invalid_argument(std::string(where) +
                                ": efficiency must lie in [0, 1]");
  }
}

double noise_bracket(double mean_photon, double efficiency) {
  const double root = std::sqrt(mean_photon + 1.0) + std::sqrt(mean_photon);
  return efficiency / (root * root) + 1.0 - efficiency;
}

// Gain per unit amplitude share at the working point (positive magnitude).
// Amplitude readout is calibrated with the actual RF phase bias, a known
// setting. Phase readout is calibrated at the zero-phase working point: the
// phase is the unknown, so the sin nonlinearity surfaces as a small bias in
// the estimate, never as a gain change.
double unit_share_gain(const SensingTask& task, const RfScene& scene,
                       int sensor) {
  const double common = std::sqrt(2.0) * kPi * scene.carrier_amplitude *
                        scene.eo_coefficient / (2.0 * scene.v_pi);
  if (task.target == RfTarget::kAmplitudeVolts) {
    return std::abs(common * std::sin(scene.phases_rad[sensor]));
  }
  return std::abs(common * scene.amplitudes_v[sensor]);
}

struct BatchMoments {
  double sum = 0.0;
  double sum_sq = 0.0;
  long shots = 0;

  double mean() const { return sum / shots; }
  double variance() const {
    return (sum_sq - shots * mean() * mean()) / (shots - 1);
  }
};

}  // namespace

double minimum_estimation_variance(double vbar, double mean_photon,
                                   double efficiency) {
  if (!(vbar > 0.0) || !std::isfinite(vbar)) {
    throw std::invalid_argument(
        "minimum_estimation_variance: vbar must be positive");
  }
  check_probe_args(mean_photon, efficiency, "minimum_estimation_variance");
  return (vbar * vbar / 4.0) * noise_bracket(mean_photon, efficiency);
}

Eigen::VectorXd signal_gains(const SensingTask& task, const Eigen::VectorXd& c,
                             const RfScene& scene) {
  task.validate();
  scene.validate();
  const int m = task.num_sensors();
  if (c.size() != m || scene.num_sensors() != m) {
    throw std::invalid_argument("signal_gains: sensor counts disagree");
  }
  Eigen::VectorXd gains(m);
  for (int i = 0; i < m; ++i) {
    if (task.picture == Picture::kDisplacement) {
      gains[i] = task.data_signs[i];
    } else {
      gains[i] = task.data_signs[i] * scene.delay_signs[i] * std::abs(c[i]) *
                 unit_share_gain(task, scene, i);
    }
  }
  return gains;
}

Eigen::VectorXd build_unbiased_estimator(const SensingTask& task,
                                         const AmplitudeDistribution& c,
                                         const RfScene& scene) {
  c.validate();
  const Eigen::VectorXd gains = signal_gains(task, c.c, scene);
  const int m = task.num_sensors();
  Eigen::VectorXd w = Eigen::VectorXd::Zero(m);
  for (int i = 0; i < m; ++i) {
    if (task.weights[i] == 0.0) {
      continue;
    }
    if (gains[i] == 0.0) {
      throw DegenerateEstimatorError(
          "build_unbiased_estimator: sensor " + std::to_string(i + 1) +
          " carries task weight but has zero signal gain");
    }
    w[i] = task.weights[i] / gains[i];
  }
  if (!w.allFinite()) {
    throw DegenerateEstimatorError(
        "build_unbiased_estimator: weights overflow; gains are vanishing");
  }
  return w;
}

double analytic_task_variance(const SensingTask& task, const Eigen::VectorXd& c,
                              const Eigen::VectorXd& efficiency, double r,
                              const Eigen::VectorXd& weights) {
  task.validate();
  const int m = task.num_sensors();
  if (c.size() != m || efficiency.size() != m || weights.size() != m) {
    throw std::invalid_argument(
        "analytic_task_variance: per-sensor lengths disagree");
  }
  if (!std::isfinite(r)) {
    throw std::invalid_argument("analytic_task_variance: r must be finite");
  }
  for (int i = 0; i < m; ++i) {
    if (!(efficiency[i] >= 0.0 && efficiency[i] <= 1.0)) {
      throw std::invalid_argument(
          "analytic_task_variance: efficiencies must lie in [0, 1]");
    }
  }
  double diag = 0.0;
  double cross = 0.0;
  for (int i = 0; i < m; ++i) {
    const double ws = weights[i] * task.data_signs[i];
    diag += ws * ws;
    cross += ws * std::sqrt(efficiency[i]) * c[i];
  }
  return 0.25 * (diag + std::expm1(-2.0 * r) * cross * cross);
}

double classical_baseline_variance(const SensingTask& task,
                                   const Eigen::VectorXd& c,
                                   const RfScene& scene) {
  const Eigen::VectorXd w =
      build_unbiased_estimator(task, AmplitudeDistribution{c}, scene);
  return analytic_task_variance(task, c, Eigen::VectorXd::Ones(c.size()), 0.0,
                                w);
}

double sql_task_variance(const SensingTask& task, const RfScene& scene) {
  task.validate();
  if (task.picture == Picture::kDisplacement) {
    return 0.25 * task.weights.squaredNorm();
  }
  scene.validate();
  const int m = task.num_sensors();
  if (scene.num_sensors() != m) {
    throw std::invalid_argument("sql_task_variance: sensor counts disagree");
  }
  double total = 0.0;
  for (int i = 0; i < m; ++i) {
    if (task.weights[i] == 0.0) {
      continue;
    }
    const double kappa = unit_share_gain(task, scene, i);
    if (kappa == 0.0) {
      throw DegenerateEstimatorError(
          "sql_task_variance: sensor " + std::to_string(i + 1) +
          " carries task weight but transduces nothing at the working point");
    }
    total += std::abs(task.weights[i]) / kappa;
  }
  return 0.25 * total * total;
}

SeparableBaseline optimum_separable_variance(int num_sensors,
                                             double total_mean_photon,
                                             double efficiency) {
  if (num_sensors <= 0) {
    throw std::invalid_argument(
        "optimum_separable_variance: sensor count must be positive");
  }
  check_probe_args(total_mean_photon, efficiency, "optimum_separable_variance");
  SeparableBaseline out;
  out.per_sensor_photon = total_mean_photon / num_sensors;
  out.local_squeezing_db = db_from_mean_photon(out.per_sensor_photon);
  out.variance_ratio_to_sql = noise_bracket(out.per_sensor_photon, efficiency);
  return out;
}

EstimationReport run_task_monte_carlo(const SensingTask& task,
                                      const CircuitConfig& circuit,
                                      const RfScene& scene, double r,
                                      long num_shots, std::uint64_t seed,
                                      int jobs) {
  task.validate();
  circuit.validate();
  scene.validate();
  const int m = task.num_sensors();
  if (circuit.num_sensors != m || scene.num_sensors() != m) {
    throw std::invalid_argument(
        "run_task_monte_carlo: sensor counts disagree");
  }
  if (num_shots < 2 * kMcBatches) {
    // Every batch needs >= 2 shots for its sample variance to exist.
    throw std::invalid_argument("run_task_monte_carlo: need at least " +
                                std::to_string(2 * kMcBatches) + " shots");
  }
  if (jobs < 1) {
    throw std::invalid_argument("run_task_monte_carlo: jobs must be >= 1");
  }

  const AmplitudeDistribution dist = amplitudes_from_circuit(circuit);
  const Eigen::VectorXd w = build_unbiased_estimator(task, dist, scene);

  GaussianState state = prepare_network_state(r, circuit);
  for (int sensor = 0; sensor < m; ++sensor) {
    displace(state, sensor, 0.0,
             displacement_from_rf(scene, dist.c[sensor], sensor));
  }
  std::vector<HomodyneSpec> specs;
  specs.reserve(m);
  for (int sensor = 0; sensor < m; ++sensor) {
    specs.push_back(HomodyneSpec{sensor, kPi / 2.0});
  }

  // Estimator coefficients on the raw homodyne record (data signs applied).
  Eigen::VectorXd ws(m);
  for (int i = 0; i < m; ++i) {
    ws[i] = w[i] * task.data_signs[i];
  }

  const long base_shots = num_shots / kMcBatches;
  const long remainder = num_shots % kMcBatches;
  std::vector<BatchMoments> batches(kMcBatches);
  std::atomic<int> next_batch{0};

  auto worker = [&]() {
    for (;;) {
      const int b = next_batch.fetch_add(1);
      if (b >= kMcBatches) {
        return;
      }
      const long shots = base_shots + (b < remainder ? 1 : 0);
      GaussianStream stream(derive_seed(seed, static_cast<std::uint64_t>(b)));
      const Eigen::MatrixXd samples =
          homodyne_sample(state, specs, shots, stream);
      BatchMoments moments;
      moments.shots = shots;
      for (long shot = 0; shot < shots; ++shot) {
        const double estimate = samples.row(shot).dot(ws);
        moments.sum += estimate;
        moments.sum_sq += estimate * estimate;
      }
      batches[b] = moments;
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const int workers = std::min(jobs, kMcBatches);
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) {
      pool.emplace_back(worker);
    }
    for (auto& thread : pool) {
      thread.join();
    }
  }

  // Reduce in batch order so the totals do not depend on scheduling.
  double sum = 0.0;
  double sum_sq = 0.0;
  for (const BatchMoments& batch : batches) {
    sum += batch.sum;
    sum_sq += batch.sum_sq;
  }
  const double estimate = sum / num_shots;
  const double mc_variance =
      (sum_sq - num_shots * estimate * estimate) / (num_shots - 1);

  double mean_spread = 0.0;
  double var_spread = 0.0;
  for (const BatchMoments& batch : batches) {
    const double dm = batch.mean() - estimate;
    const double dv = batch.variance() - mc_variance;
    mean_spread += dm * dm;
    var_spread += dv * dv;
  }
  const double norm = 1.0 / (kMcBatches * (kMcBatches - 1));

  double truth = 0.0;
  for (int i = 0; i < m; ++i) {
    if (task.picture == Picture::kDisplacement) {
      truth += task.weights[i] * displacement_from_rf(scene, dist.c[i], i);
    } else if (task.target == RfTarget::kAmplitudeVolts) {
      truth += task.weights[i] * scene.amplitudes_v[i];
    } else {
      truth += task.weights[i] * scene.phases_rad[i];
    }
  }

  EstimationReport report;
  report.estimate = estimate;
  report.truth = truth;
  report.analytic_variance = analytic_task_variance(
      task, dist.c,
      Eigen::Map<const Eigen::VectorXd>(circuit.efficiency.data(), m), r, w);
  report.mc_variance = mc_variance;
  report.mc_variance_se = std::sqrt(var_spread * norm);
  report.mc_mean_se = std::sqrt(mean_spread * norm);
  report.sql_variance = sql_task_variance(task, scene);
  report.db_below_sql =
      db_from_variance_ratio(report.analytic_variance / report.sql_variance);
  report.num_shots = num_shots;
  report.seed = seed;
  return report;
}

std::vector<SweepPoint> sweep_transmissivity(const SensingTask& task,
                                             const CircuitConfig& base,
                                             int vbs_index,
                                             const std::vector<double>& signed_ts,
                                             double r) {
  task.validate();
  base.validate();
  if (task.picture != Picture::kRfParameter) {
    throw std::invalid_argument(
        "sweep_transmissivity: defined for the RF parameter picture");
  }
  if (task.num_sensors() != base.num_sensors) {
    throw std::invalid_argument(
        "sweep_transmissivity: sensor counts disagree");
  }
  if (vbs_index < 0 || vbs_index >= static_cast<int>(base.vbs_chain.size())) {
    throw std::invalid_argument("sweep_transmissivity: VBS index out of range");
  }
  if (!std::isfinite(r)) {
    throw std::invalid_argument("sweep_transmissivity: r must be finite");
  }
  for (double phase : base.sensor_phase) {
    if (phase != 0.0) {
      throw std::invalid_argument(
          "sweep_transmissivity: base circuit must carry no optical pi "
          "phases; the sweep dials signs through the RF/data conventions");
    }
  }

  const int m = task.num_sensors();
  const int flip_sensor = base.port_map[m - 1];  // fed by the residual port
  const double weight_sum = task.weights.cwiseAbs().sum();
  const double quantum_factor = std::expm1(-2.0 * r);

  std::vector<SweepPoint> out;
  out.reserve(signed_ts.size());
  for (double signed_t : signed_ts) {
    if (!(std::abs(signed_t) <= 1.0)) {
      throw std::invalid_argument(
          "sweep_transmissivity: |T| must not exceed 1");
    }
    SweepPoint point;
    point.signed_t = signed_t;

    CircuitConfig dialed = base;
    dialed.vbs_chain[vbs_index] = std::abs(signed_t);
    const AmplitudeDistribution dist = amplitudes_from_circuit(dialed);

    double diag = 0.0;   // sum u^2 / c^2 over active sensors
    double cross = 0.0;  // sum |u| sqrt(eta) with the branch alignment
    for (int i = 0; i < m; ++i) {
      const double u = task.weights[i];
      if (u == 0.0) {
        continue;
      }
      const double share2 = dist.c[i] * dist.c[i];
      if (share2 == 0.0) {
        point.degenerate = true;
        break;
      }
      diag += u * u / share2;
      const double align =
          (signed_t < 0.0 && i == flip_sensor) ? -1.0 : 1.0;
      cross += std::abs(u) * std::sqrt(dialed.efficiency[i]) * align;
    }
    if (!point.degenerate) {
      const double sql = weight_sum * weight_sum;
      point.quantum_ratio = (diag + quantum_factor * cross * cross) / sql;
      point.classical_ratio = diag / sql;
    }
    out.push_back(point);
  }
  return out;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("loglog_slope: need matching lists, size >= 2");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
      throw std::invalid_argument("loglog_slope: inputs must be positive");
    }
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(x.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace cvdqs
