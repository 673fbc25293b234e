#pragma once

#include <Eigen/Dense>

#include <cstdint>

#include "frares/types.hpp"

namespace frares {

/// Grünwald–Letnikov coefficient of a fractional difference.
///
/// Evaluated by the multiplicative recursion
///   gl_coefficient(order, 0) = 1,
///   gl_coefficient(order, j) = gl_coefficient(order, j-1) * (j-1-order) / j,
/// which is total for j >= 0 and finite orders, and agrees with the
/// gamma-ratio definition wherever that one is finite. Equals
/// (-1)^j * binom(order, j).
double gl_coefficient(double order, int j);

/// Per-state coefficient vector: entry i is gl_coefficient(alpha[i], j).
Eigen::VectorXd gl_coefficients(const Eigen::Ref<const Eigen::VectorXd>& alpha,
                                int j);

/// Builds the propagators G_0 .. G_{k-1} and convolution kernel A_0 .. A_{k-1}
/// for the given system. Deterministic; validates the system first.
PropagatorCache build_propagators(const FracSystem& system, int k);

/// Closed-form trajectory: column m is G_m * x0, for m = 0 .. k-1.
/// Column 0 echoes x0 exactly.
Eigen::MatrixXd propagate(const PropagatorCache& cache,
                          const Eigen::Ref<const Eigen::VectorXd>& x0);

/// Simulates sensor outputs y[m] = C G_m x0 + e[m] with the artifact values
/// drawn reproducibly from `seed`. The realized artifact matrix and the
/// noise-free states are returned alongside the measurement block.
SimulationOutput simulate_outputs(const PropagatorCache& cache,
                                  const Eigen::Ref<const Eigen::VectorXd>& x0,
                                  const ArtifactSpec& artifacts,
                                  std::uint64_t seed);

namespace detail {

/// Streaming artifact generator shared by simulate_outputs and the scenario
/// builder; `global_step` lets windowed callers keep one continuous profile.
class ArtifactStream {
 public:
  ArtifactStream(const ArtifactSpec& spec, std::uint64_t seed);

  /// Artifact column for one time step. `state` is the clean state at that
  /// step (used by the ScaledRandom mode). Entries off the support are zero.
  Eigen::VectorXd column(int p, int global_step,
                         const Eigen::Ref<const Eigen::VectorXd>& state);

 private:
  ArtifactSpec spec_;
  std::mt19937_64 engine_;
};

}  // namespace detail

}  // namespace frares
