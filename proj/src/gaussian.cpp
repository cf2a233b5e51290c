#include "cvdqs/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace cvdqs {

namespace {

void check_mode(int mode, int num_modes, const char* where) {
  if (mode < 0 || mode >= num_modes) {
    throw std::invalid_argument(std::string(where) + ": mode index " +
                                std::to_string(mode) + " out of range for " +
                                std::to_string(num_modes) + " modes");
  }
}

}  // namespace

GaussianState::GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd cov)
    : num_modes_(0) {
  update(std::move(mean), std::move(cov));
}

void GaussianState::update(Eigen::VectorXd mean, Eigen::MatrixXd cov) {
  const Eigen::Index dim = mean.size();
  if (dim <= 0 || dim % 2 != 0) {
    throw std::invalid_argument(
        "GaussianState: mean length must be a positive even number, got " +
        std::to_string(dim));
  }
  if (cov.rows() != dim || cov.cols() != dim) {
    throw std::invalid_argument("GaussianState: covariance must be " +
                                std::to_string(dim) + "x" +
                                std::to_string(dim));
  }
  if (!mean.allFinite() || !cov.allFinite()) {
    throw std::invalid_argument("GaussianState: moments must be finite");
  }
  // The tolerance is relative to the covariance scale: symplectic products
  // on badly conditioned states leave roundoff asymmetry proportional to the
  // largest entry, and that drift is absorbed rather than rejected.
  const double asym = (cov - cov.transpose()).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, cov.cwiseAbs().maxCoeff());
  if (asym > kSymmetryTol * scale) {
    char text[64];
    std::snprintf(text, sizeof(text), "%.3e", asym);
    throw std::invalid_argument(std::string("GaussianState: covariance ") +
                                "asymmetry " + text + " exceeds tolerance");
  }
  num_modes_ = static_cast<int>(dim / 2);
  mean_ = std::move(mean);
  cov_ = 0.5 * (cov + cov.transpose());
}

void GaussianState::shift_mean(int index, double delta) {
  if (index < 0 || index >= mean_.size()) {
    throw std::invalid_argument("GaussianState::shift_mean: index out of range");
  }
  if (!std::isfinite(delta)) {
    throw std::invalid_argument("GaussianState::shift_mean: non-finite shift");
  }
  mean_[index] += delta;
}

GaussianState vacuum(int num_modes) {
  if (num_modes <= 0) {
    throw std::invalid_argument("vacuum: number of modes must be positive");
  }
  const int dim = 2 * num_modes;
  return GaussianState(Eigen::VectorXd::Zero(dim),
                       kVacuumVariance *
                           Eigen::MatrixXd::Identity(dim, dim));
}

Eigen::MatrixXd symplectic_form(int num_modes) {
  if (num_modes <= 0) {
    throw std::invalid_argument("symplectic_form: number of modes must be positive");
  }
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * num_modes, 2 * num_modes);
  for (int m = 0; m < num_modes; ++m) {
    omega(2 * m, 2 * m + 1) = 1.0;
    omega(2 * m + 1, 2 * m) = -1.0;
  }
  return omega;
}

Eigen::MatrixXd symplectic_matrix(const SymplecticOp& op, int num_modes) {
  if (num_modes <= 0) {
    throw std::invalid_argument(
        "symplectic_matrix: number of modes must be positive");
  }
  const int dim = 2 * num_modes;
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(dim, dim);

  if (const auto* sq = std::get_if<Squeezer>(&op)) {
    check_mode(sq->mode, num_modes, "symplectic_matrix(squeezer)");
    if (!std::isfinite(sq->r)) {
      throw std::invalid_argument("symplectic_matrix: squeezer r must be finite");
    }
    const double shrink = std::exp(-sq->r);
    const double grow = std::exp(sq->r);
    const int x = 2 * sq->mode;
    const int p = x + 1;
    if (sq->squeezed == Quadrature::kP) {
      s(x, x) = grow;
      s(p, p) = shrink;
    } else {
      s(x, x) = shrink;
      s(p, p) = grow;
    }
    return s;
  }

  if (const auto* ps = std::get_if<PhaseShift>(&op)) {
    check_mode(ps->mode, num_modes, "symplectic_matrix(phase_shift)");
    if (!std::isfinite(ps->angle)) {
      throw std::invalid_argument(
          "symplectic_matrix: phase shift angle must be finite");
    }
    const double c = std::cos(ps->angle);
    const double sn = std::sin(ps->angle);
    const int x = 2 * ps->mode;
    const int p = x + 1;
    s(x, x) = c;
    s(x, p) = sn;
    s(p, x) = -sn;
    s(p, p) = c;
    return s;
  }

  const auto& bs = std::get<Beamsplitter>(op);
  check_mode(bs.mode_a, num_modes, "symplectic_matrix(beamsplitter)");
  check_mode(bs.mode_b, num_modes, "symplectic_matrix(beamsplitter)");
  if (bs.mode_a == bs.mode_b) {
    throw std::invalid_argument(
        "symplectic_matrix: beamsplitter modes must be distinct");
  }
  if (!(bs.transmissivity >= 0.0 && bs.transmissivity <= 1.0)) {
    throw std::invalid_argument(
        "symplectic_matrix: beamsplitter transmissivity must lie in [0, 1]");
  }
  const double t = std::sqrt(bs.transmissivity);
  const double rf = std::sqrt(1.0 - bs.transmissivity);
  const int ax = 2 * bs.mode_a;
  const int bx = 2 * bs.mode_b;
  for (int q = 0; q < 2; ++q) {  // same mixing on x and p
    s(ax + q, ax + q) = t;
    s(ax + q, bx + q) = -rf;
    s(bx + q, ax + q) = rf;
    s(bx + q, bx + q) = t;
  }
  return s;
}

void apply_symplectic(GaussianState& state, const SymplecticOp& op) {
  const Eigen::MatrixXd s = symplectic_matrix(op, state.num_modes());
  state.update(s * state.mean(), s * state.cov() * s.transpose());
}

void squeeze(GaussianState& state, int mode, double r) {
  apply_symplectic(state, Squeezer{mode, r, Quadrature::kP});
}

void apply_loss(GaussianState& state, const LossChannel& channel) {
  check_mode(channel.mode, state.num_modes(), "apply_loss");
  if (!(channel.efficiency >= 0.0 && channel.efficiency <= 1.0)) {
    throw std::invalid_argument("apply_loss: efficiency must lie in [0, 1]");
  }
  const int dim = 2 * state.num_modes();
  const int x = 2 * channel.mode;
  const double root = std::sqrt(channel.efficiency);

  Eigen::VectorXd scale = Eigen::VectorXd::Ones(dim);
  scale[x] = root;
  scale[x + 1] = root;

  Eigen::VectorXd mean = scale.asDiagonal() * state.mean();
  Eigen::MatrixXd cov = scale.asDiagonal() * state.cov() * scale.asDiagonal();
  const double vacuum_refill = (1.0 - channel.efficiency) * kVacuumVariance;
  cov(x, x) += vacuum_refill;
  cov(x + 1, x + 1) += vacuum_refill;
  state.update(std::move(mean), std::move(cov));
}

void displace(GaussianState& state, int mode, double dx, double dp) {
  check_mode(mode, state.num_modes(), "displace");
  state.shift_mean(2 * mode, dx);
  state.shift_mean(2 * mode + 1, dp);
}

void permute_modes(GaussianState& state, const std::vector<int>& source_mode) {
  const int m = state.num_modes();
  if (static_cast<int>(source_mode.size()) != m) {
    throw std::invalid_argument("permute_modes: permutation length mismatch");
  }
  std::vector<bool> seen(source_mode.size(), false);
  for (int src : source_mode) {
    if (src < 0 || src >= m || seen[src]) {
      throw std::invalid_argument(
          "permute_modes: source_mode must be a permutation of 0..M-1");
    }
    seen[src] = true;
  }
  const int dim = 2 * m;
  Eigen::MatrixXd perm = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < m; ++i) {
    perm(2 * i, 2 * source_mode[i]) = 1.0;
    perm(2 * i + 1, 2 * source_mode[i] + 1) = 1.0;
  }
  state.update(perm * state.mean(), perm * state.cov() * perm.transpose());
}

Moments homodyne_stats(const GaussianState& state, const HomodyneSpec& spec) {
  check_mode(spec.mode, state.num_modes(), "homodyne_stats");
  if (!std::isfinite(spec.angle)) {
    throw std::invalid_argument("homodyne_stats: angle must be finite");
  }
  const int x = 2 * spec.mode;
  const double c = std::cos(spec.angle);
  const double sn = std::sin(spec.angle);
  Moments out;
  out.mean = c * state.mean()[x] + sn * state.mean()[x + 1];
  out.variance = c * c * state.cov()(x, x) + sn * sn * state.cov()(x + 1, x + 1) +
                 2.0 * c * sn * state.cov()(x, x + 1);
  return out;
}

Eigen::MatrixXd homodyne_sample(const GaussianState& state,
                                const std::vector<HomodyneSpec>& specs,
                                long num_shots, GaussianStream& rng) {
  if (specs.empty()) {
    throw std::invalid_argument("homodyne_sample: no homodyne specs given");
  }
  if (num_shots < 1) {
    throw std::invalid_argument("homodyne_sample: shot count must be >= 1");
  }
  const int n = static_cast<int>(specs.size());
  std::vector<bool> used(state.num_modes(), false);
  Eigen::MatrixXd select = Eigen::MatrixXd::Zero(n, 2 * state.num_modes());
  for (int i = 0; i < n; ++i) {
    check_mode(specs[i].mode, state.num_modes(), "homodyne_sample");
    if (!std::isfinite(specs[i].angle)) {
      throw std::invalid_argument("homodyne_sample: angle must be finite");
    }
    if (used[specs[i].mode]) {
      throw std::invalid_argument(
          "homodyne_sample: duplicate mode in joint homodyne");
    }
    used[specs[i].mode] = true;
    select(i, 2 * specs[i].mode) = std::cos(specs[i].angle);
    select(i, 2 * specs[i].mode + 1) = std::sin(specs[i].angle);
  }

  const Eigen::VectorXd mean = select * state.mean();
  const Eigen::MatrixXd cov = select * state.cov() * select.transpose();
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error(
        "homodyne_sample: selected covariance is not positive definite");
  }
  const Eigen::MatrixXd chol = llt.matrixL();

  Eigen::MatrixXd samples(num_shots, n);
  Eigen::VectorXd z(n);
  for (long shot = 0; shot < num_shots; ++shot) {
    for (int i = 0; i < n; ++i) {
      z[i] = rng.next();
    }
    samples.row(shot) = (mean + chol * z).transpose();
  }
  return samples;
}

Eigen::VectorXd symplectic_eigenvalues(const GaussianState& state) {
  const int m = state.num_modes();
  const Eigen::MatrixXd prod = symplectic_form(m) * state.cov();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(prod, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("symplectic_eigenvalues: eigensolver failed");
  }
  // Eigenvalues of Omega * Sigma come in +/- i*nu pairs for Sigma > 0.
  std::vector<double> magnitudes(2 * m);
  for (int i = 0; i < 2 * m; ++i) {
    magnitudes[i] = std::abs(solver.eigenvalues()[i]);
  }
  std::sort(magnitudes.begin(), magnitudes.end(), std::greater<double>());
  Eigen::VectorXd out(m);
  for (int i = 0; i < m; ++i) {
    out[i] = 0.5 * (magnitudes[2 * i] + magnitudes[2 * i + 1]);
  }
  return out;
}

bool is_physical(const GaussianState& state, double slack) {
  const Eigen::VectorXd nu = symplectic_eigenvalues(state);
  return nu.minCoeff() >= kVacuumVariance - slack;
}

}  // namespace cvdqs
