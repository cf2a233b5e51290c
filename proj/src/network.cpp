#include "cvdqs/network.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cvdqs {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPhaseTol = 1e-9;
constexpr double kNormTol = 1e-10;
constexpr double kExhaustedBus = 1e-24;  // squared residual amplitude

int phase_sign(double phase) {
  if (std::abs(phase) <= kPhaseTol) {
    return 1;
  }
  if (std::abs(phase - kPi) <= kPhaseTol) {
    return -1;
  }
  throw std::invalid_argument(
      "sensor_phase entries must be 0 or pi, got " + std::to_string(phase));
}

void check_port_map(const std::vector<int>& port_map, int num_sensors) {
  if (static_cast<int>(port_map.size()) != num_sensors) {
    throw std::invalid_argument("port_map length must equal the sensor count");
  }
  std::vector<bool> seen(num_sensors, false);
  for (int sensor : port_map) {
    if (sensor < 0 || sensor >= num_sensors || seen[sensor]) {
      throw std::invalid_argument(
          "port_map must be a permutation of 0..M-1");
    }
    seen[sensor] = true;
  }
}

}  // namespace

void CircuitConfig::validate() const {
  if (num_sensors <= 0) {
    throw std::invalid_argument("CircuitConfig: sensor count must be positive");
  }
  if (static_cast<int>(vbs_chain.size()) != num_sensors - 1) {
    throw std::invalid_argument(
        "CircuitConfig: a chain serving M sensors needs M-1 beamsplitters");
  }
  for (double t : vbs_chain) {
    if (!(t >= 0.0 && t <= 1.0)) {
      throw std::invalid_argument(
          "CircuitConfig: VBS transmissivities must lie in [0, 1]");
    }
  }
  check_port_map(port_map, num_sensors);
  if (static_cast<int>(sensor_phase.size()) != num_sensors) {
    throw std::invalid_argument("CircuitConfig: sensor_phase length mismatch");
  }
  for (double phase : sensor_phase) {
    phase_sign(phase);
  }
  if (static_cast<int>(efficiency.size()) != num_sensors) {
    throw std::invalid_argument("CircuitConfig: efficiency length mismatch");
  }
  for (double eta : efficiency) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
      throw std::invalid_argument(
          "CircuitConfig: efficiencies must lie in [0, 1]");
    }
  }
}

CircuitConfig CircuitConfig::identity(int num_sensors) {
  CircuitConfig circuit;
  circuit.num_sensors = num_sensors;
  circuit.vbs_chain.assign(std::max(0, num_sensors - 1), 0.0);
  circuit.port_map.resize(num_sensors);
  std::iota(circuit.port_map.begin(), circuit.port_map.end(), 0);
  circuit.sensor_phase.assign(num_sensors, 0.0);
  circuit.efficiency.assign(num_sensors, 1.0);
  circuit.validate();
  return circuit;
}

void AmplitudeDistribution::validate() const {
  if (c.size() == 0) {
    throw std::invalid_argument("AmplitudeDistribution: empty");
  }
  if (!c.allFinite()) {
    throw std::invalid_argument("AmplitudeDistribution: non-finite amplitude");
  }
  const double norm2 = c.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTol) {
    throw std::invalid_argument(
        "AmplitudeDistribution: squared amplitudes must sum to 1, got " +
        std::to_string(norm2));
  }
}

AmplitudeDistribution amplitudes_from_circuit(const CircuitConfig& circuit) {
  circuit.validate();
  const int m = circuit.num_sensors;
  Eigen::VectorXd c = Eigen::VectorXd::Zero(m);
  double residual = 1.0;  // amplitude still on the bus
  for (int k = 0; k < m - 1; ++k) {
    const double t = circuit.vbs_chain[k];
    c[circuit.port_map[k]] = residual * std::sqrt(t);
    residual *= std::sqrt(1.0 - t);
  }
  c[circuit.port_map[m - 1]] = residual;
  for (int sensor = 0; sensor < m; ++sensor) {
    c[sensor] *= phase_sign(circuit.sensor_phase[sensor]);
  }
  AmplitudeDistribution out{std::move(c)};
  out.validate();
  return out;
}

CircuitConfig circuit_from_amplitudes(const Eigen::VectorXd& c,
                                      const std::vector<int>& port_map) {
  AmplitudeDistribution dist{c};
  dist.validate();
  const int m = dist.num_sensors();
  check_port_map(port_map, m);

  CircuitConfig circuit;
  circuit.num_sensors = m;
  circuit.port_map = port_map;
  circuit.sensor_phase.assign(m, 0.0);
  circuit.efficiency.assign(m, 1.0);
  for (int sensor = 0; sensor < m; ++sensor) {
    if (c[sensor] < 0.0) {
      circuit.sensor_phase[sensor] = kPi;
    }
  }

  circuit.vbs_chain.resize(m - 1);
  double residual2 = 1.0;  // squared amplitude still on the bus
  for (int k = 0; k < m - 1; ++k) {
    const double share2 = c[port_map[k]] * c[port_map[k]];
    if (residual2 <= kExhaustedBus) {
      circuit.vbs_chain[k] = 0.0;
      continue;
    }
    // Clamp against roundoff; share2 cannot exceed what is left on the bus.
    circuit.vbs_chain[k] = std::min(1.0, std::max(0.0, share2 / residual2));
    residual2 = std::max(0.0, residual2 - share2);
  }
  circuit.validate();
  return circuit;
}

AmplitudeDistribution optimal_amplitudes(const SensingTask& task) {
  task.validate();
  const int m = task.num_sensors();
  Eigen::VectorXd c(m);
  if (task.picture == Picture::kDisplacement) {
    const double vbar = task.weights.norm();
    c = task.weights / vbar;
  } else {
    const double total = task.weights.cwiseAbs().sum();
    for (int i = 0; i < m; ++i) {
      c[i] = std::sqrt(std::abs(task.weights[i]) / total);
    }
  }
  AmplitudeDistribution out{std::move(c)};
  out.validate();
  return out;
}

GaussianState prepare_network_state(double r, const CircuitConfig& circuit) {
  circuit.validate();
  if (!std::isfinite(r)) {
    throw std::invalid_argument("prepare_network_state: r must be finite");
  }
  const int m = circuit.num_sensors;
  GaussianState state = vacuum(m);
  squeeze(state, 0, r);

  // Chain in canonical order: step k leaves the tap on mode k (port k) and
  // moves the residual bus to mode k+1.
  for (int k = 0; k < m - 1; ++k) {
    apply_symplectic(state,
                     Beamsplitter{k, k + 1, circuit.vbs_chain[k]});
  }

  // Route port k (mode k) to sensor port_map[k].
  std::vector<int> source_mode(m);
  for (int k = 0; k < m; ++k) {
    source_mode[circuit.port_map[k]] = k;
  }
  permute_modes(state, source_mode);

  for (int sensor = 0; sensor < m; ++sensor) {
    if (phase_sign(circuit.sensor_phase[sensor]) < 0) {
      apply_symplectic(state, PhaseShift{sensor, kPi});
    }
  }
  for (int sensor = 0; sensor < m; ++sensor) {
    apply_loss(state, LossChannel{sensor, circuit.efficiency[sensor]});
  }
  return state;
}

}  // namespace cvdqs
