#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "cvdqs/network.hpp"
#include "cvdqs/task.hpp"
#include "cvdqs/transduction.hpp"

namespace cvdqs {

// Shots are always split into this many batches; batch b draws from the
// generator seeded with derive_seed(master, b). Standard errors come from the
// spread of per-batch statistics, and the fixed split keeps results
// byte-identical for every worker count.
inline constexpr int kMcBatches = 100;

// Minimum variance for estimating a weighted displacement combination with a
// distributed squeezed probe: (vbar^2 / 4) * (eta / (sqrt(N+1) + sqrt(N))^2
// + 1 - eta), where vbar^2 is the squared weight norm, N the probe's mean
// photon number, and eta the per-sensor transmission.
double minimum_estimation_variance(double vbar, double mean_photon,
                                   double efficiency);

// Per-sensor signal gains G_m = d<y_m>/d(theta_m) at the scene's working
// point, including the data sign s_m, the RF delay sign g_m, the carrier
// share |c_m|, and the transduction constants. Displacement picture: G_m =
// s_m.
Eigen::VectorXd signal_gains(const SensingTask& task, const Eigen::VectorXd& c,
                             const RfScene& scene);

// Postprocessing weights w with w_m = weight_m / G_m on active sensors (zero
// elsewhere), making sum_m w_m y_m unbiased for the task at the working
// point. Throws DegenerateEstimatorError if an active sensor has no gain.
Eigen::VectorXd build_unbiased_estimator(const SensingTask& task,
                                         const AmplitudeDistribution& c,
                                         const RfScene& scene);

// Estimator variance for one shot of the network probe:
//   0.25 * ( sum (w_m s_m)^2
//            + (exp(-2r) - 1) * (sum w_m s_m sqrt(eta_m) c_m)^2 ),
// with c signed. Exact, no linearization: displacements shift means only.
double analytic_task_variance(const SensingTask& task, const Eigen::VectorXd& c,
                              const Eigen::VectorXd& efficiency, double r,
                              const Eigen::VectorXd& weights);

// Same estimator driven by vacuum probes (r = 0). Efficiency drops out:
// vacuum is loss-invariant and the signal path is not attenuated.
double classical_baseline_variance(const SensingTask& task,
                                   const Eigen::VectorXd& c,
                                   const RfScene& scene);

// Shot-noise limit of the task: the classical baseline at its own optimal
// amplitude distribution.
double sql_task_variance(const SensingTask& task, const RfScene& scene);

struct SeparableBaseline {
  double per_sensor_photon = 0.0;
  double local_squeezing_db = 0.0;
  double variance_ratio_to_sql = 1.0;
};

// Best unentangled strategy at matched total resources: the probe's mean
// photon number is split evenly over M independently squeezed sensors.
SeparableBaseline optimum_separable_variance(int num_sensors,
                                             double total_mean_photon,
                                             double efficiency);

struct EstimationReport {
  double estimate = 0.0;
  double truth = 0.0;
  double analytic_variance = 0.0;  // per shot, parameter units squared
  double mc_variance = 0.0;
  double mc_variance_se = 0.0;
  double mc_mean_se = 0.0;
  double sql_variance = 0.0;
  double db_below_sql = 0.0;  // -10*log10(analytic / sql)
  long num_shots = 0;
  std::uint64_t seed = 0;
};

// Prepares the network state, applies the scene's displacements, draws
// homodyne shots, and evaluates the estimator. Per-sensor efficiency is taken
// from the circuit. `jobs` parallelizes over the fixed batches; the report is
// byte-identical for every jobs value.
EstimationReport run_task_monte_carlo(const SensingTask& task,
                                      const CircuitConfig& circuit,
                                      const RfScene& scene, double r,
                                      long num_shots, std::uint64_t seed,
                                      int jobs = 1);

struct SweepPoint {
  double signed_t = 0.0;
  double quantum_ratio = 0.0;    // analytic variance / SQL
  double classical_ratio = 0.0;  // vacuum-probe variance / SQL
  bool degenerate = false;       // zero amplitude on an active sensor
};

// Re-dials one VBS over a signed transmissivity axis. |T| sets the split;
// the sign selects the convention at the sensor on the residual port:
//   + : pi RF delay there (delay signs aligned with the weight signs
//       everywhere), data signs unchanged;
//   - : no RF delay there, sign flip on that sensor's data instead.
// Data-sign flips cancel out of the variance, so only the + branch is
// noise-aligned; the classical column is exactly sign-symmetric. Ratios are
// SQL-normalized, which assumes equal transduction constants across sensors.
std::vector<SweepPoint> sweep_transmissivity(const SensingTask& task,
                                             const CircuitConfig& base,
                                             int vbs_index,
                                             const std::vector<double>& signed_ts,
                                             double r);

// Least-squares slope of log(y) against log(x); both inputs positive.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace cvdqs
