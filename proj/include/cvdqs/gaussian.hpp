#pragma once

#include <Eigen/Dense>

#include <variant>
#include <vector>

#include "cvdqs/random.hpp"

namespace cvdqs {

// Quadrature ordering is interleaved: (x_1, p_1, x_2, p_2, ..., x_M, p_M).
// The vacuum variance is 1/4 per quadrature, so a vacuum covariance is
// 0.25 * identity and squeezing r takes the p variance to 0.25 * exp(-2r).
inline constexpr double kVacuumVariance = 0.25;

// Covariance matrices are kept symmetric to this tolerance, measured
// relative to the largest covariance entry.
inline constexpr double kSymmetryTol = 1e-10;

// Slack allowed on uncertainty-principle checks: every symplectic eigenvalue
// of a physical covariance matrix must be >= 1/4 - kPhysicalitySlack.
inline constexpr double kPhysicalitySlack = 1e-9;

enum class Quadrature { kX, kP };

// Gaussian state of M bosonic modes: mean quadrature vector of length 2M and
// a symmetric 2M x 2M covariance matrix.
class GaussianState {
 public:
  GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd cov);

  int num_modes() const { return num_modes_; }
  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::MatrixXd& cov() const { return cov_; }

  // Replaces both moments; validates dimensions, finiteness, and symmetry
  // (the stored covariance is the symmetrized input, which stops roundoff
  // drift from accumulating over long operation chains).
  void update(Eigen::VectorXd mean, Eigen::MatrixXd cov);

  // Shifts the mean only; measurement statistics of second moments are
  // unaffected by displacements.
  void shift_mean(int index, double delta);

 private:
  int num_modes_;
  Eigen::VectorXd mean_;
  Eigen::MatrixXd cov_;
};

// Single-mode squeezer. r > 0 shrinks the variance of `squeezed` by
// exp(-2r) and grows the conjugate quadrature by exp(+2r).
struct Squeezer {
  int mode = 0;
  double r = 0.0;
  Quadrature squeezed = Quadrature::kP;
};

// Single-mode rotation by `angle`; angle == pi negates both quadratures.
struct PhaseShift {
  int mode = 0;
  double angle = 0.0;
};

// Two-mode mixing with energy transmissivity T in [0, 1]:
//   out_a = sqrt(T) in_a - sqrt(1-T) in_b
//   out_b = sqrt(1-T) in_a + sqrt(T) in_b
// The reflection into mode_a carries the minus sign, so a tap-off chain that
// repeatedly splits its first argument keeps non-negative amplitudes on every
// output port.
struct Beamsplitter {
  int mode_a = 0;
  int mode_b = 1;
  double transmissivity = 0.5;
};

using SymplecticOp = std::variant<Squeezer, PhaseShift, Beamsplitter>;

// Pure loss with efficiency eta in [0, 1] on one mode: the mean scales by
// sqrt(eta) and the lost fraction is replaced by vacuum noise.
struct LossChannel {
  int mode = 0;
  double efficiency = 1.0;
};

// Homodyne of one mode at LO angle theta measures
// x * cos(theta) + p * sin(theta); angle pi/2 reads the p quadrature.
struct HomodyneSpec {
  int mode = 0;
  double angle = 0.0;
};

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

GaussianState vacuum(int num_modes);

// Standard symplectic form for the interleaved ordering: block diagonal
// copies of [[0, 1], [-1, 0]].
Eigen::MatrixXd symplectic_form(int num_modes);

// Dense 2M x 2M matrix S of the operation; every op satisfies
// S * Omega * S^T = Omega.
Eigen::MatrixXd symplectic_matrix(const SymplecticOp& op, int num_modes);

void apply_symplectic(GaussianState& state, const SymplecticOp& op);
void squeeze(GaussianState& state, int mode, double r);
void apply_loss(GaussianState& state, const LossChannel& channel);
void displace(GaussianState& state, int mode, double dx, double dp);

// Relabels modes: mode i of the result is mode source_mode[i] of the input.
// `source_mode` must be a permutation of 0..M-1.
void permute_modes(GaussianState& state, const std::vector<int>& source_mode);

Moments homodyne_stats(const GaussianState& state, const HomodyneSpec& spec);

// Joint homodyne samples across distinct modes, one row per shot and one
// column per spec, drawn with the given stream. Cross-sensor correlations
// follow the covariance matrix exactly. Duplicate modes are rejected: a
// simultaneous homodyne of both quadratures of one mode is unphysical.
Eigen::MatrixXd homodyne_sample(const GaussianState& state,
                                const std::vector<HomodyneSpec>& specs,
                                long num_shots, GaussianStream& rng);

// Williamson spectrum of the covariance matrix, descending. All values equal
// kVacuumVariance for pure states; physical states never dip below it beyond
// numerical slack.
Eigen::VectorXd symplectic_eigenvalues(const GaussianState& state);

bool is_physical(const GaussianState& state, double slack = kPhysicalitySlack);

}  // namespace cvdqs
