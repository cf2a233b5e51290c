#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "cvdqs/errors.hpp"
#include "cvdqs/random.hpp"
#include "cvdqs/transduction.hpp"

using namespace cvdqs;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Geometry whose phase gradient reduces to sin(aoa): unit spacing with the
// carrier chosen so 2*pi*f*d/c0 = 1.
ArrayGeometry unit_geometry() {
  ArrayGeometry geometry;
  geometry.spacing_m = 1.0;
  geometry.carrier_hz = 299792458.0 / (2.0 * kPi);
  return geometry;
}

// Independent solver for the source-loss model. The measured pair pins down
//   (a - 1 + eta) * (b - 1 + eta) = eta^2,
// with a, b the below/above-vacuum variance ratios; bisect for eta rather
// than trusting any closed form.
SourceInference bisected_source(double squeezing_db, double antisqueezing_db) {
  const double a = std::pow(10.0, -squeezing_db / 10.0);
  const double b = std::pow(10.0, antisqueezing_db / 10.0);
  auto mismatch = [&](double eta) {
    return (a - 1.0 + eta) * (b - 1.0 + eta) - eta * eta;
  };
  double lo = std::max(1e-15, (1.0 - a) + 1e-15);
  double hi = 1.0;
  REQUIRE(mismatch(lo) < 0.0);
  REQUIRE(mismatch(hi) >= 0.0);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (mismatch(mid) < 0.0 ? lo : hi) = mid;
  }
  const double eta = 0.5 * (lo + hi);
  const double exp2r = (b - 1.0 + eta) / eta;
  return SourceInference{10.0 * std::log10(exp2r), eta, false};
}

}  // namespace

TEST_CASE("default working point displaces by five vacuum sigmas") {
  const RfScene scene = RfScene::defaults(1);
  CHECK(displacement_from_rf(scene, 1.0, 0) ==
        doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("displacement is sinusoidal in the RF phase") {
  RfScene scene = RfScene::defaults(1);
  for (double phi : {0.0, 0.3, 1.0, kPi / 2.0, 2.0, kPi, 4.5}) {
    scene.phases_rad[0] = phi;
    CHECK(displacement_from_rf(scene, 1.0, 0) ==
          doctest::Approx(2.5 * std::sin(phi)).epsilon(1e-12));
  }
}

TEST_CASE("displacement is odd in the delay sign and even in the share "
          "sign") {
  RfScene scene = RfScene::defaults(1);
  const double base = displacement_from_rf(scene, 0.7, 0);
  CHECK(displacement_from_rf(scene, -0.7, 0) ==
        doctest::Approx(base).epsilon(1e-15));
  scene.delay_signs[0] = -1;
  CHECK(displacement_from_rf(scene, 0.7, 0) ==
        doctest::Approx(-base).epsilon(1e-15));
}

TEST_CASE("displacement is linear in field amplitude and amplitude share") {
  RfScene scene = RfScene::defaults(1);
  scene.amplitudes_v[0] = 0.040;
  CHECK(displacement_from_rf(scene, 1.0, 0) ==
        doctest::Approx(1.25).epsilon(1e-12));
  scene.amplitudes_v[0] = 0.080;
  CHECK(displacement_from_rf(scene, 0.5, 0) ==
        doctest::Approx(1.25).epsilon(1e-12));
}

TEST_CASE("small-angle response is linear to first order") {
  RfScene scene = RfScene::defaults(1);
  scene.phases_rad[0] = 0.01;
  const double d = displacement_from_rf(scene, 1.0, 0);
  CHECK(std::abs(d / (2.5 * 0.01) - 1.0) < 1e-4);
}

TEST_CASE("displacement rejects bad arguments") {
  const RfScene scene = RfScene::defaults(2);
  CHECK_THROWS_AS(displacement_from_rf(scene, 1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(displacement_from_rf(scene, 1.0, -1), std::invalid_argument);
  const double nan = std::nan("");
  CHECK_THROWS_AS(displacement_from_rf(scene, nan, 0), std::invalid_argument);
}

TEST_CASE("scene validation rejects inconsistent descriptions") {
  RfScene scene = RfScene::defaults(2);
  scene.amplitudes_v[1] = -0.01;
  CHECK_THROWS_AS(scene.validate(), std::invalid_argument);

  scene = RfScene::defaults(2);
  scene.delay_signs = {1, 0};
  CHECK_THROWS_AS(scene.validate(), std::invalid_argument);

  scene = RfScene::defaults(2);
  scene.phases_rad = Eigen::VectorXd::Zero(3);
  CHECK_THROWS_AS(scene.validate(), std::invalid_argument);

  scene = RfScene::defaults(2);
  scene.v_pi = 0.0;
  CHECK_THROWS_AS(scene.validate(), std::invalid_argument);
}

TEST_CASE("plane-wave phases form a ramp through the reference sensor") {
  const ArrayGeometry geometry = unit_geometry();
  const double increment = std::sin(0.1);
  CHECK(increment == doctest::Approx(0.09983341664682815).epsilon(1e-14));

  const Eigen::VectorXd phases = phases_from_aoa(geometry, 0.1, 3, 1);
  CHECK(phases[0] == doctest::Approx(-increment).epsilon(1e-12));
  CHECK(phases[1] == 0.0);
  CHECK(phases[2] == doctest::Approx(increment).epsilon(1e-12));

  CHECK(phases_from_aoa(geometry, 0.0, 4, 0).isZero(0.0));

  const Eigen::VectorXd mirrored = phases_from_aoa(geometry, -0.1, 3, 1);
  CHECK((mirrored + phases).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("angle of arrival round-trips through the phase gradient") {
  const ArrayGeometry geometry = unit_geometry();
  for (double aoa = -1.5; aoa <= 1.5; aoa += 0.25) {
    const double gradient = geometry.gradient_from_aoa(aoa);
    CHECK(aoa_from_phase_gradient(geometry, gradient) ==
          doctest::Approx(aoa).epsilon(1e-12));
  }
  CHECK_THROWS_AS(aoa_from_phase_gradient(geometry, 1.5), std::domain_error);
  CHECK_THROWS_AS(geometry.gradient_from_aoa(1.6), std::invalid_argument);

  ArrayGeometry bad = geometry;
  bad.spacing_m = 0.0;
  CHECK_THROWS_AS(bad.gradient_from_aoa(0.1), std::invalid_argument);
}

TEST_CASE("source inference reproduces the reference pair") {
  const SourceInference inferred = infer_source(4.0, 10.0);
  CHECK(!inferred.degenerate);
  CHECK(std::abs(inferred.ideal_db - 11.74723) < 1e-3);
  CHECK(std::abs(inferred.efficiency - 0.64503) < 1e-4);
}

TEST_CASE("source inference agrees with a bisection solver") {
  const double pairs[][2] = {
      {4.0, 10.0}, {3.0, 8.0}, {1.0, 12.0}, {5.5, 6.0}, {0.3, 9.0}};
  for (const auto& pair : pairs) {
    const SourceInference expected = bisected_source(pair[0], pair[1]);
    const SourceInference got = infer_source(pair[0], pair[1]);
    CHECK(std::abs(got.efficiency - expected.efficiency) < 1e-9);
    CHECK(std::abs(got.ideal_db - expected.ideal_db) < 1e-9);
  }
}

TEST_CASE("source inference round-trips forward-generated pairs") {
  GaussianStream rng(4215);
  for (int trial = 0; trial < 200; ++trial) {
    const double r = 0.05 + 1.6 * rng.uniform01();
    const double eta = 0.05 + 0.95 * rng.uniform01();
    const double below = eta * std::exp(-2.0 * r) + 1.0 - eta;
    const double above = eta * std::exp(2.0 * r) + 1.0 - eta;
    const SourceInference got =
        infer_source(-10.0 * std::log10(below), 10.0 * std::log10(above));
    CHECK(std::abs(got.efficiency - eta) < 1e-9);
    CHECK(std::abs(got.ideal_db - 20.0 * r / std::log(10.0)) < 1e-9);
  }
}

TEST_CASE("lossless and degenerate source pairs") {
  const SourceInference pure = infer_source(6.0, 6.0);
  CHECK(pure.efficiency == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pure.ideal_db == doctest::Approx(6.0).epsilon(1e-12));

  const SourceInference vacuum = infer_source(0.0, 0.0);
  CHECK(vacuum.degenerate);
  CHECK(vacuum.ideal_db == 0.0);
}

TEST_CASE("source inference rejects impossible pairs") {
  CHECK_THROWS_AS(infer_source(10.0, 4.0), std::invalid_argument);
  CHECK_THROWS_AS(infer_source(-1.0, 3.0), std::invalid_argument);
  CHECK_THROWS_AS(infer_source(std::nan(""), 3.0), std::invalid_argument);
  // Zero measured squeezing alongside real anti-squeezing fits no
  // transmission in (0, 1].
  CHECK_THROWS_AS(infer_source(0.0, 6.0), NoSolutionError);
}

TEST_CASE("network efficiency from degraded squeezing") {
  CHECK(std::abs(efficiency_from_network_squeezing(11.7, 3.2) - 0.559175) <
        1e-4);
  CHECK(efficiency_from_network_squeezing(7.3, 7.3) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(efficiency_from_network_squeezing(11.7, 0.0) == 0.0);
  CHECK_THROWS_AS(efficiency_from_network_squeezing(3.2, 11.7),
                  std::invalid_argument);
  CHECK_THROWS_AS(efficiency_from_network_squeezing(0.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("mean photon number of the loss-free source") {
  CHECK(std::abs(mean_photon_from_db(11.7) - 3.214673) < 1e-4);
  CHECK(std::abs(mean_photon_from_db(7.95) - 1.099419) < 1e-4);
  CHECK(mean_photon_from_db(0.0) == 0.0);
  for (double db : {0.5, 3.0, 7.95, 11.7, 15.0}) {
    CHECK(db_from_mean_photon(mean_photon_from_db(db)) ==
          doctest::Approx(db).epsilon(1e-9));
  }
}
