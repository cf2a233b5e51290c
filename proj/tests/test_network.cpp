#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include <Eigen/Dense>

#include "cvdqs/gaussian.hpp"
#include "cvdqs/network.hpp"
#include "cvdqs/random.hpp"
#include "cvdqs/task.hpp"

using namespace cvdqs;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Expected covariance of the distributed squeezed mode: both quadrature
// blocks are identity plus a rank-one update along the signed, loss-scaled
// amplitude vector.
Eigen::MatrixXd closed_form_cov(double r, const Eigen::VectorXd& c,
                                const Eigen::VectorXd& eta) {
  const int m = static_cast<int>(c.size());
  Eigen::VectorXd scaled(m);
  for (int i = 0; i < m; ++i) {
    scaled[i] = std::sqrt(eta[i]) * c[i];
  }
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const double outer = scaled[i] * scaled[j];
      cov(2 * i, 2 * j) = 0.25 * (std::expm1(2.0 * r) * outer);
      cov(2 * i + 1, 2 * j + 1) = 0.25 * (std::expm1(-2.0 * r) * outer);
    }
    cov(2 * i, 2 * i) += 0.25;
    cov(2 * i + 1, 2 * i + 1) += 0.25;
  }
  return cov;
}

}  // namespace

TEST_CASE("tap-off chain amplitudes follow the residual-bus product") {
  CircuitConfig circuit = CircuitConfig::identity(3);
  circuit.vbs_chain = {1.0 / 3.0, 0.5};
  const AmplitudeDistribution dist = amplitudes_from_circuit(circuit);
  for (int i = 0; i < 3; ++i) {
    CHECK(dist.c[i] == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-12));
  }
}

TEST_CASE("port map routes chain ports onto the labeled sensors") {
  CircuitConfig circuit = CircuitConfig::identity(3);
  circuit.vbs_chain = {0.5, 0.75};
  circuit.port_map = {1, 0, 2};
  const AmplitudeDistribution dist = amplitudes_from_circuit(circuit);
  CHECK(dist.c[0] * dist.c[0] == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(dist.c[1] * dist.c[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(dist.c[2] * dist.c[2] == doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("optical pi phases flip the amplitude signs") {
  CircuitConfig circuit = CircuitConfig::identity(2);
  circuit.vbs_chain = {0.25};
  circuit.sensor_phase = {kPi, 0.0};
  const AmplitudeDistribution dist = amplitudes_from_circuit(circuit);
  CHECK(dist.c[0] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(dist.c[1] == doctest::Approx(std::sqrt(0.75)).epsilon(1e-12));
}

TEST_CASE("circuit synthesis inverts the chain, including signs") {
  GaussianStream rng(31415);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + static_cast<int>(rng.uniform01() * 5.0);
    Eigen::VectorXd c(m);
    for (int i = 0; i < m; ++i) {
      c[i] = rng.uniform01() - 0.35;  // mixed signs, occasionally tiny
    }
    c /= c.norm();

    std::vector<int> port_map(m);
    for (int i = 0; i < m; ++i) {
      port_map[i] = i;
    }
    for (int i = m - 1; i > 0; --i) {
      const int j = static_cast<int>(rng.uniform01() * (i + 1));
      std::swap(port_map[i], port_map[j]);
    }

    const CircuitConfig circuit = circuit_from_amplitudes(c, port_map);
    const AmplitudeDistribution back = amplitudes_from_circuit(circuit);
    CHECK((back.c - c).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("synthesis handles a fully tapped bus") {
  Eigen::VectorXd c(3);
  c << 1.0, 0.0, 0.0;
  const CircuitConfig circuit =
      circuit_from_amplitudes(c, std::vector<int>{0, 1, 2});
  CHECK(circuit.vbs_chain[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(circuit.vbs_chain[1] == 0.0);
  const AmplitudeDistribution back = amplitudes_from_circuit(circuit);
  CHECK((back.c - c).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("optimal amplitudes: mean-aligned for displacements, square-root "
          "law for RF weights") {
  SensingTask displacement;
  displacement.picture = Picture::kDisplacement;
  displacement.weights = Eigen::Vector3d(0.3, -0.4, 1.2);
  displacement.data_signs = {1, 1, 1};
  const AmplitudeDistribution d = optimal_amplitudes(displacement);
  CHECK(d.c[0] == doctest::Approx(0.3 / 1.3).epsilon(1e-12));
  CHECK(d.c[1] == doctest::Approx(-0.4 / 1.3).epsilon(1e-12));
  CHECK(d.c[2] == doctest::Approx(1.2 / 1.3).epsilon(1e-12));

  const AmplitudeDistribution e = optimal_amplitudes(edge_phase_task());
  CHECK(e.c[0] == doctest::Approx(std::sqrt(0.375)).epsilon(1e-12));
  CHECK(e.c[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(e.c[2] == doctest::Approx(std::sqrt(0.125)).epsilon(1e-12));
}

TEST_CASE("grid search confirms the optimal amplitude law in both pictures") {
  const double r = 0.9;
  const double eta = 0.8;
  const double quantum = std::expm1(-2.0 * r);
  const double step = 1e-3;
  const int n = static_cast<int>(std::round(1.0 / step));

  SUBCASE("RF picture: estimator noise term is minimized at |c|^2 "
          "proportional to |u|") {
    const Eigen::Vector3d u(-1.5, 2.0, -0.5);
    // Scaled variance oracle for sign-aligned settings: the cross term does
    // not depend on c, so only sum u^2 / c^2 moves on the simplex.
    auto noise_term = [&](double c0, double c1, double c2) {
      return u[0] * u[0] / c0 + u[1] * u[1] / c1 + u[2] * u[2] / c2;
    };
    double best = std::numeric_limits<double>::infinity();
    double best_c0 = 0.0;
    double best_c1 = 0.0;
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n - i; ++j) {
        const double c0 = i * step;
        const double c1 = j * step;
        const double value = noise_term(c0, c1, 1.0 - c0 - c1);
        if (value < best) {
          best = value;
          best_c0 = c0;
          best_c1 = c1;
        }
      }
    }
    const AmplitudeDistribution opt = optimal_amplitudes(edge_phase_task());
    const double at_opt = noise_term(opt.c[0] * opt.c[0], opt.c[1] * opt.c[1],
                                     opt.c[2] * opt.c[2]);
    CHECK(at_opt <= best + 1e-9);
    CHECK(std::abs(opt.c[0] * opt.c[0] - best_c0) <= 2.0 * step);
    CHECK(std::abs(opt.c[1] * opt.c[1] - best_c1) <= 2.0 * step);
  }

  SUBCASE("displacement picture: variance is minimized at c parallel to the "
          "weights") {
    const Eigen::Vector3d v(0.3, -0.4, 1.2);
    auto variance4 = [&](double a0, double a1, double a2) {
      // Amplitude signs aligned with the weights; a_i are squared moduli.
      const double dot = std::abs(v[0]) * std::sqrt(a0) +
                         std::abs(v[1]) * std::sqrt(a1) +
                         std::abs(v[2]) * std::sqrt(a2);
      return v.squaredNorm() + quantum * eta * dot * dot;
    };
    double best = std::numeric_limits<double>::infinity();
    double best_a0 = 0.0;
    double best_a1 = 0.0;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n - i; ++j) {
        const double a0 = i * step;
        const double a1 = j * step;
        const double value = variance4(a0, a1, 1.0 - a0 - a1);
        if (value < best) {
          best = value;
          best_a0 = a0;
          best_a1 = a1;
        }
      }
    }
    SensingTask task;
    task.picture = Picture::kDisplacement;
    task.weights = v;
    task.data_signs = {1, 1, 1};
    const AmplitudeDistribution opt = optimal_amplitudes(task);
    const double at_opt = variance4(opt.c[0] * opt.c[0], opt.c[1] * opt.c[1],
                                    opt.c[2] * opt.c[2]);
    CHECK(at_opt <= best + 1e-9);
    CHECK(std::abs(opt.c[0] * opt.c[0] - best_a0) <= 2.0 * step);
    CHECK(std::abs(opt.c[1] * opt.c[1] - best_a1) <= 2.0 * step);
  }
}

TEST_CASE("prepared network state matches the rank-one covariance form") {
  const double r = 1.0;
  CircuitConfig circuit;
  circuit.num_sensors = 3;
  circuit.vbs_chain = {0.5, 0.75};
  circuit.port_map = {1, 0, 2};
  circuit.sensor_phase = {0.0, kPi, 0.0};
  circuit.efficiency = {0.9, 0.7, 0.56};

  const GaussianState state = prepare_network_state(r, circuit);
  CHECK(state.mean().isZero(0.0));

  const AmplitudeDistribution dist = amplitudes_from_circuit(circuit);
  const Eigen::VectorXd eta =
      Eigen::Map<const Eigen::VectorXd>(circuit.efficiency.data(), 3);
  const Eigen::MatrixXd expected = closed_form_cov(r, dist.c, eta);
  CHECK((state.cov() - expected).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("prepared network state matches a from-scratch matrix composition") {
  const double r = 0.9;
  const double t = 0.64;
  CircuitConfig circuit;
  circuit.num_sensors = 2;
  circuit.vbs_chain = {t};
  circuit.port_map = {1, 0};
  circuit.sensor_phase = {kPi, 0.0};
  circuit.efficiency = {0.8, 0.5};

  // Squeeze, split, relabel, phase, then per-mode loss, all written out
  // against the interleaved (x1, p1, x2, p2) ordering.
  Eigen::Matrix4d squeezer = Eigen::Matrix4d::Identity();
  squeezer(0, 0) = std::exp(r);
  squeezer(1, 1) = std::exp(-r);

  Eigen::Matrix4d splitter;
  const double root_t = std::sqrt(t);
  const double root_u = std::sqrt(1.0 - t);
  splitter << root_t, 0.0, -root_u, 0.0,  //
      0.0, root_t, 0.0, -root_u,          //
      root_u, 0.0, root_t, 0.0,           //
      0.0, root_u, 0.0, root_t;

  Eigen::Matrix4d relabel = Eigen::Matrix4d::Zero();
  relabel(0, 2) = 1.0;  // sensor 1 reads chain port 2
  relabel(1, 3) = 1.0;
  relabel(2, 0) = 1.0;  // sensor 2 reads chain port 1
  relabel(3, 1) = 1.0;

  Eigen::Matrix4d phase = Eigen::Matrix4d::Identity();
  phase(0, 0) = -1.0;  // pi rotation on sensor 1
  phase(1, 1) = -1.0;

  const Eigen::Matrix4d total = phase * relabel * splitter * squeezer;
  Eigen::Matrix4d cov = 0.25 * total * total.transpose();

  Eigen::Matrix4d damp = Eigen::Matrix4d::Identity();
  damp(0, 0) = damp(1, 1) = std::sqrt(circuit.efficiency[0]);
  damp(2, 2) = damp(3, 3) = std::sqrt(circuit.efficiency[1]);
  cov = damp * cov * damp +
        0.25 * (Eigen::Matrix4d::Identity() - damp * damp);

  const GaussianState state = prepare_network_state(r, circuit);
  CHECK((state.cov() - cov).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("circuit validation rejects inconsistent descriptions") {
  CircuitConfig circuit = CircuitConfig::identity(3);
  circuit.vbs_chain = {0.5};  // needs two entries
  CHECK_THROWS_AS(circuit.validate(), std::invalid_argument);

  circuit = CircuitConfig::identity(3);
  circuit.vbs_chain = {0.5, 1.5};
  CHECK_THROWS_AS(circuit.validate(), std::invalid_argument);

  circuit = CircuitConfig::identity(3);
  circuit.port_map = {0, 0, 1};
  CHECK_THROWS_AS(circuit.validate(), std::invalid_argument);

  circuit = CircuitConfig::identity(3);
  circuit.sensor_phase = {0.0, 0.5, 0.0};  // only 0 and pi are wired
  CHECK_THROWS_AS(circuit.validate(), std::invalid_argument);

  circuit = CircuitConfig::identity(3);
  circuit.efficiency = {0.5, 1.0, 1.2};
  CHECK_THROWS_AS(circuit.validate(), std::invalid_argument);

  Eigen::VectorXd bad(2);
  bad << 1.0, 1.0;  // squared moduli sum to 2
  CHECK_THROWS_AS(AmplitudeDistribution{bad}.validate(),
                  std::invalid_argument);
}
