#pragma once

#include <Eigen/Dense>

#include <vector>

namespace cvdqs {

// Electro-optic pickup at each sensor. An RF field of amplitude E_m [volts]
// at phase phi_m displaces the phase quadrature of that sensor's optical mode
// by
//   d_m = sqrt(2) * pi * g_m * (|c_m| * carrier_amplitude)
//         * (eo_coefficient * E_m / (2 * v_pi)) * sin(phi_m),
// linear in phi_m near zero and maximal at phi = pi/2. g_m in {-1, +1} is the
// RF delay sign (a pi delay on the drive line). The homodyne frame follows
// the carrier, so only |c_m| enters the signal path; optical pi phases show
// up in the noise correlations instead.
struct RfScene {
  Eigen::VectorXd amplitudes_v;  // E_m, >= 0
  Eigen::VectorXd phases_rad;    // phi_m
  std::vector<int> delay_signs;  // g_m in {-1, +1}
  double carrier_amplitude = 0.0;
  double eo_coefficient = 1.0;
  double v_pi = 4.0;  // volts

  int num_sensors() const { return static_cast<int>(amplitudes_v.size()); }
  void validate() const;

  // Working-point defaults: 80 mV at phi = pi/2 on every sensor, chosen so a
  // unit-amplitude sensor sees a displacement of 5 vacuum standard
  // deviations.
  static RfScene defaults(int num_sensors);
};

double displacement_from_rf(const RfScene& scene, double amplitude_share,
                            int sensor);

// Uniform linear array receiving a plane wave.
struct ArrayGeometry {
  double spacing_m = 0.05;
  double carrier_hz = 3.0e9;

  void validate() const;
  // Phase advance per element for a wave arriving at `aoa_rad` off broadside.
  double gradient_from_aoa(double aoa_rad) const;
};

// Linear phase ramp across the array: phi_m = gradient * (m - reference).
Eigen::VectorXd phases_from_aoa(const ArrayGeometry& geometry, double aoa_rad,
                                int num_sensors, int reference_sensor);

// Inverse of gradient_from_aoa; throws std::domain_error when the gradient
// exceeds what any physical angle can produce.
double aoa_from_phase_gradient(const ArrayGeometry& geometry,
                               double gradient_rad);

struct SourceInference {
  double ideal_db = 0.0;    // loss-free squeezing level
  double efficiency = 1.0;  // source transmission eta_s
  bool degenerate = false;  // (0 dB, 0 dB) input: vacuum, eta indeterminate
};

// Recovers the loss-free squeezing level and the source efficiency from a
// measured squeezing/anti-squeezing pair (both in positive dB). Requires
// anti >= sq >= 0; throws NoSolutionError when no efficiency in (0, 1] fits.
SourceInference infer_source(double squeezing_db, double antisqueezing_db);

// Overall transmission that degrades `ideal_db` of squeezing to the measured
// level: eta = (1 - 10^(-measured/10)) / (1 - 10^(-ideal/10)).
double efficiency_from_network_squeezing(double ideal_db, double measured_db);

// Mean photon number of a squeezed vacuum at the given loss-free level:
// N_S = sinh^2(r) with r = ideal_db * ln(10) / 20.
double mean_photon_from_db(double ideal_db);
double db_from_mean_photon(double mean_photon);

}  // namespace cvdqs
