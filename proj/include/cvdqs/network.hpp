#pragma once

#include <Eigen/Dense>

#include <vector>

#include "cvdqs/gaussian.hpp"
#include "cvdqs/task.hpp"

namespace cvdqs {

// Variable-beamsplitter tap-off bus serving M sensors. VBS k taps a fraction
// T_k of the residual bus into output port k; the final residual is port M.
// Port amplitudes are therefore
//   a_k = sqrt(T_k) * prod_{j<k} sqrt(1 - T_j)     for k < M,
//   a_M = prod_j sqrt(1 - T_j),
// all non-negative. `port_map` assigns chain ports to sensors (0-based:
// sensor port_map[k] receives port k) and `sensor_phase` holds the optical
// phase at each sensor, restricted to {0, pi}; pi flips the sign of that
// sensor's share of the squeezed mode.
struct CircuitConfig {
  int num_sensors = 0;
  std::vector<double> vbs_chain;     // M-1 transmissivities in [0, 1]
  std::vector<int> port_map;         // permutation of 0..M-1
  std::vector<double> sensor_phase;  // per sensor, 0 or pi
  std::vector<double> efficiency;    // per sensor eta in [0, 1]

  void validate() const;
  static CircuitConfig identity(int num_sensors);  // trivial map, no loss
};

// Signed share of the squeezed mode arriving at each sensor; the squared
// entries sum to 1.
struct AmplitudeDistribution {
  Eigen::VectorXd c;

  int num_sensors() const { return static_cast<int>(c.size()); }
  void validate() const;
};

AmplitudeDistribution amplitudes_from_circuit(const CircuitConfig& circuit);

// Inverts the chain: finds VBS transmissivities whose port amplitudes under
// `port_map` reproduce |c|, with sensor phases pi wherever c is negative.
// Once the residual bus is exhausted the remaining transmissivities are set
// to zero (any value would do; no light reaches them).
CircuitConfig circuit_from_amplitudes(const Eigen::VectorXd& c,
                                      const std::vector<int>& port_map);

// Variance-optimal distribution for a task at uniform efficiency.
// Displacement picture: c = v / vbar (signed). RF picture: c_m^2 =
// |u_m| / sum|u|, signs fixed to +; weight signs ride on the RF delay signs.
AmplitudeDistribution optimal_amplitudes(const SensingTask& task);

// Squeezes one mode by r, routes it through the VBS chain, permutes ports to
// sensors, applies the {0, pi} sensor phases, then per-sensor loss. The
// resulting p-block covariance is
//   0.25 * (I + (exp(-2r) - 1) * q q^T),  q = sqrt(eta) .* c,
// with the x block the same under r -> -r and no x-p correlations.
GaussianState prepare_network_state(double r, const CircuitConfig& circuit);

}  // namespace cvdqs
