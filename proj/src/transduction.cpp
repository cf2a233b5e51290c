#include "cvdqs/transduction.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cvdqs/decibel.hpp"
#include "cvdqs/errors.hpp"

namespace cvdqs {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSpeedOfLight = 299792458.0;  // m/s
constexpr double kEfficiencySlack = 1e-12;

}  // namespace

void RfScene::validate() const {
  const int m = num_sensors();
  if (m <= 0) {
    throw std::invalid_argument("RfScene: no sensors");
  }
  if (phases_rad.size() != m ||
      static_cast<int>(delay_signs.size()) != m) {
    throw std::invalid_argument("RfScene: per-sensor field lengths disagree");
  }
  if (!amplitudes_v.allFinite() || !phases_rad.allFinite()) {
    throw std::invalid_argument("RfScene: non-finite scene values");
  }
  if (amplitudes_v.minCoeff() < 0.0) {
    throw std::invalid_argument("RfScene: field amplitudes must be >= 0");
  }
  for (int g : delay_signs) {
    if (g != 1 && g != -1) {
      throw std::invalid_argument("RfScene: delay signs must be +1 or -1");
    }
  }
  if (!(carrier_amplitude > 0.0) || !(v_pi > 0.0) ||
      !std::isfinite(eo_coefficient) || eo_coefficient == 0.0) {
    throw std::invalid_argument("RfScene: bad transduction constants");
  }
}

RfScene RfScene::defaults(int num_sensors) {
  RfScene scene;
  scene.amplitudes_v = Eigen::VectorXd::Constant(num_sensors, 0.080);
  scene.phases_rad = Eigen::VectorXd::Constant(num_sensors, kPi / 2.0);
  scene.delay_signs.assign(num_sensors, 1);
  scene.eo_coefficient = 1.0;
  scene.v_pi = 4.0;
  // 5 vacuum standard deviations (= 2.5 quadrature units) at the working
  // point: sqrt(2)*pi*a_c*(0.080 / 8) = 2.5.
  scene.carrier_amplitude = 250.0 / (std::sqrt(2.0) * kPi);
  scene.validate();
  return scene;
}

double displacement_from_rf(const RfScene& scene, double amplitude_share,
                            int sensor) {
  scene.validate();
  if (sensor < 0 || sensor >= scene.num_sensors()) {
    throw std::invalid_argument("displacement_from_rf: sensor out of range");
  }
  if (!std::isfinite(amplitude_share)) {
    throw std::invalid_argument(
        "displacement_from_rf: amplitude share must be finite");
  }
  const double carrier = std::abs(amplitude_share) * scene.carrier_amplitude;
  return std::sqrt(2.0) * kPi * scene.delay_signs[sensor] * carrier *
         (scene.eo_coefficient * scene.amplitudes_v[sensor] /
          (2.0 * scene.v_pi)) *
         std::sin(scene.phases_rad[sensor]);
}

void ArrayGeometry::validate() const {
  if (!(spacing_m > 0.0) || !(carrier_hz > 0.0)) {
    throw std::invalid_argument(
        "ArrayGeometry: spacing and carrier frequency must be positive");
  }
}

double ArrayGeometry::gradient_from_aoa(double aoa_rad) const {
  validate();
  if (!(std::abs(aoa_rad) < kPi / 2.0)) {
    throw std::invalid_argument(
        "ArrayGeometry: angle of arrival must satisfy |aoa| < pi/2");
  }
  return 2.0 * kPi * carrier_hz * spacing_m * std::sin(aoa_rad) /
         kSpeedOfLight;
}

Eigen::VectorXd phases_from_aoa(const ArrayGeometry& geometry, double aoa_rad,
                                int num_sensors, int reference_sensor) {
  if (num_sensors <= 0 || reference_sensor < 0 ||
      reference_sensor >= num_sensors) {
    throw std::invalid_argument("phases_from_aoa: bad sensor indices");
  }
  const double gradient = geometry.gradient_from_aoa(aoa_rad);
  Eigen::VectorXd phases(num_sensors);
  for (int m = 0; m < num_sensors; ++m) {
    phases[m] = gradient * (m - reference_sensor);
  }
  return phases;
}

double aoa_from_phase_gradient(const ArrayGeometry& geometry,
                               double gradient_rad) {
  geometry.validate();
  if (!std::isfinite(gradient_rad)) {
    throw std::invalid_argument("aoa_from_phase_gradient: non-finite gradient");
  }
  const double sine = gradient_rad * kSpeedOfLight /
                      (2.0 * kPi * geometry.carrier_hz * geometry.spacing_m);
  if (std::abs(sine) > 1.0) {
    throw std::domain_error(
        "aoa_from_phase_gradient: gradient outside the visible region");
  }
  return std::asin(sine);
}

SourceInference infer_source(double squeezing_db, double antisqueezing_db) {
  if (!std::isfinite(squeezing_db) || !std::isfinite(antisqueezing_db)) {
    throw std::invalid_argument("infer_source: non-finite dB values");
  }
  if (squeezing_db < 0.0 || antisqueezing_db < squeezing_db) {
    throw std::invalid_argument(
        "infer_source: requires antisqueezing_db >= squeezing_db >= 0");
  }
  if (squeezing_db == 0.0 && antisqueezing_db == 0.0) {
    return SourceInference{0.0, 1.0, true};
  }

  // Measured variance ratios: a = eta*exp(-2r) + 1 - eta (below vacuum),
  // b = eta*exp(+2r) + 1 - eta (above). Eliminating r gives a closed form
  // for eta; exp(2r) follows from b.
  const double a = variance_ratio_from_db(squeezing_db);
  const double b = variance_ratio_from_db(-antisqueezing_db);
  const double eta = (b - 1.0) * (1.0 - a) / (a + b - 2.0);
  if (!(eta > 0.0) || eta > 1.0 + kEfficiencySlack) {
    throw NoSolutionError(
        "infer_source: no source efficiency in (0, 1] reproduces the pair (" +
        std::to_string(squeezing_db) + " dB, " +
        std::to_string(antisqueezing_db) + " dB)");
  }
  const double eta_clamped = std::min(eta, 1.0);
  const double exp2r = (b - 1.0) / eta_clamped + 1.0;
  if (!(exp2r >= 1.0)) {
    throw NoSolutionError("infer_source: inferred squeezing is negative");
  }
  return SourceInference{10.0 * std::log10(exp2r), eta_clamped, false};
}

double efficiency_from_network_squeezing(double ideal_db, double measured_db) {
  if (!(ideal_db > 0.0)) {
    throw std::invalid_argument(
        "efficiency_from_network_squeezing: ideal level must be positive");
  }
  if (measured_db < 0.0 || measured_db > ideal_db) {
    throw std::invalid_argument(
        "efficiency_from_network_squeezing: measured level must lie in "
        "[0, ideal]");
  }
  return (1.0 - variance_ratio_from_db(measured_db)) /
         (1.0 - variance_ratio_from_db(ideal_db));
}

double mean_photon_from_db(double ideal_db) {
  if (!std::isfinite(ideal_db) || ideal_db < 0.0) {
    throw std::invalid_argument(
        "mean_photon_from_db: level must be finite and >= 0");
  }
  const double r = ideal_db * std::log(10.0) / 20.0;
  const double s = std::sinh(r);
  return s * s;
}

double db_from_mean_photon(double mean_photon) {
  if (!std::isfinite(mean_photon) || mean_photon < 0.0) {
    throw std::invalid_argument(
        "db_from_mean_photon: mean photon number must be >= 0");
  }
  const double r = std::asinh(std::sqrt(mean_photon));
  return 20.0 * r / std::log(10.0);
}

}  // namespace cvdqs
