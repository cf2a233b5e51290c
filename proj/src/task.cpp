#include "cvdqs/task.hpp"

#include <stdexcept>

namespace cvdqs {

void SensingTask::validate() const {
  if (weights.size() == 0) {
    throw std::invalid_argument("SensingTask: weights are empty");
  }
  if (!weights.allFinite()) {
    throw std::invalid_argument("SensingTask: weights must be finite");
  }
  if (weights.cwiseAbs().maxCoeff() == 0.0) {
    throw std::invalid_argument("SensingTask: weights must not all be zero");
  }
  if (data_signs.size() != static_cast<std::size_t>(weights.size())) {
    throw std::invalid_argument("SensingTask: data_signs length mismatch");
  }
  for (int s : data_signs) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("SensingTask: data signs must be +1 or -1");
    }
  }
}

SensingTask average_amplitude_task(int num_sensors) {
  if (num_sensors <= 0) {
    throw std::invalid_argument("average_amplitude_task: bad sensor count");
  }
  SensingTask task;
  task.picture = Picture::kRfParameter;
  task.target = RfTarget::kAmplitudeVolts;
  task.weights =
      Eigen::VectorXd::Constant(num_sensors, 1.0 / num_sensors);
  task.data_signs.assign(num_sensors, 1);
  task.label = "average-amplitude";
  return task;
}

SensingTask edge_phase_task() {
  SensingTask task;
  task.picture = Picture::kRfParameter;
  task.target = RfTarget::kPhaseRadians;
  task.weights = Eigen::VectorXd(3);
  task.weights << -1.5, 2.0, -0.5;
  task.data_signs.assign(3, 1);
  task.label = "edge-phase-difference";
  return task;
}

SensingTask central_phase_task() {
  SensingTask task;
  task.picture = Picture::kRfParameter;
  task.target = RfTarget::kPhaseRadians;
  task.weights = Eigen::VectorXd(3);
  task.weights << -0.5, 0.0, 0.5;
  task.data_signs.assign(3, 1);
  task.label = "central-phase-difference";
  return task;
}

}  // namespace cvdqs
