#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace cvdqs {

// Two equivalent descriptions of a distributed linear-combination estimand.
// In the displacement picture the parameters are the quadrature displacements
// themselves and the weights apply directly. In the RF picture the parameters
// are per-sensor field amplitudes or phases and the weights apply to those,
// with the transduction gain folded into the estimator.
enum class Picture { kDisplacement, kRfParameter };

// Which per-sensor scene parameter carries the estimand in the RF picture.
enum class RfTarget { kAmplitudeVolts, kPhaseRadians };

struct SensingTask {
  Picture picture = Picture::kDisplacement;
  RfTarget target = RfTarget::kAmplitudeVolts;
  Eigen::VectorXd weights;      // not all zero; length M
  std::vector<int> data_signs;  // s_m in {-1, +1}, applied in postprocessing
  std::string label;

  int num_sensors() const { return static_cast<int>(weights.size()); }
  void validate() const;
};

// Preset templates used throughout: a plain average of the field amplitudes,
// and one-sided / centered finite-difference stencils for the phase gradient.
SensingTask average_amplitude_task(int num_sensors);
SensingTask edge_phase_task();     // weights (-3/2, 2, -1/2)
SensingTask central_phase_task();  // weights (-1/2, 0, 1/2)

}  // namespace cvdqs
