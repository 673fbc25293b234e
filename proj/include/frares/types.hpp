#pragma once

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace frares {

/// A discrete-time fractional-order plant with linear sensing.
///
/// Holds the state dynamics matrix A (n x n), the sensor map C (p x n) and
/// one fractional differencing order per state. Orders live in [0, 2); an
/// order of zero degenerates that state to ordinary LTI dynamics.
///
/// All types in this library are plain value types: immutable after
/// construction by convention, safe to copy and to share across threads.
struct FracSystem {
  Eigen::MatrixXd A;      ///< state dynamics, n x n
  Eigen::MatrixXd C;      ///< sensor map, p x n
  Eigen::VectorXd alpha;  ///< fractional orders, length n, each in [0, 2)

  int n() const { return static_cast<int>(A.rows()); }
  int p() const { return static_cast<int>(C.rows()); }

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Closed-form propagators for a FracSystem over a fixed horizon.
///
/// G[m] maps the initial state to the state m steps later. Aj holds the
/// convolution kernel of the state recursion: Aj[0] = A - diag(psi(alpha, 1)),
/// Aj[j] = -diag(psi(alpha, j + 1)) for j >= 1. Both lists have `horizon`
/// entries and satisfy
///   G[0] = I,  G[m] = sum_{j=0}^{m-1} Aj[j] * G[m-1-j].
struct PropagatorCache {
  FracSystem system;
  int horizon = 0;
  std::vector<Eigen::MatrixXd> G;
  std::vector<Eigen::MatrixXd> Aj;

  int n() const { return system.n(); }
  int p() const { return system.p(); }
};

/// A p x k block of sensor outputs; column m is the measurement at step m.
struct MeasurementBlock {
  Eigen::MatrixXd Y;
  std::vector<std::string> channel_labels;  ///< optional, length p when set
  Eigen::VectorXd timestamps;               ///< optional, length k when set

  int channels() const { return static_cast<int>(Y.rows()); }
  int steps() const { return static_cast<int>(Y.cols()); }
};

/// Additive sensor artifacts confined to a fixed channel set.
///
/// The support never changes over time; only the per-step values do.
/// Channel indices are 0-based everywhere in memory (file formats use
/// 1-based channel numbers, converted at the I/O boundary).
struct ArtifactSpec {
  enum class Mode {
    Constant,      ///< e_i[m] = amplitude on supported channels
    ScaledRandom,  ///< e_i[m] = +/- amplitude * ||x[m]||_2, random sign
    ElectrodePop,  ///< amplitude for the first pop_steps, then white noise
  };

  std::vector<int> support;  ///< 0-based channels, sorted and unique
  Mode mode = Mode::Constant;
  double amplitude = 1.0;
  int pop_steps = 4;         ///< ElectrodePop only: duration of the pop
  double noise_scale = 1.0;  ///< ElectrodePop only: post-pop noise sigma

  bool empty() const { return support.empty(); }

  /// Throws std::invalid_argument if the support is out of range for a
  /// p-channel system, unsorted, or duplicated.
  void validate(int p) const;
};

/// Everything simulate_outputs produced, kept for test introspection.
struct SimulationOutput {
  MeasurementBlock block;    ///< Y = C * states + artifacts
  Eigen::MatrixXd artifacts; ///< realized e, p x k
  Eigen::MatrixXd states;    ///< noise-free trajectory, n x k
};

}  // namespace frares
