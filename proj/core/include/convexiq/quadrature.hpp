#pragma once

#include "convexiq/types.hpp"

#include <cstddef>
#include <functional>
#include <optional>

namespace convexiq {

/// Product rule on S^(d-1) in hyperspherical coordinates: Gauss-Legendre in
/// each polar angle (resolution nodes on [0, pi]) times the trapezoid rule in
/// the azimuth (2 * resolution nodes on [0, 2 pi)).
struct QuadratureSpec {
  int resolution = 512;
  /// When set, the resolution is doubled (starting from `resolution`) until
  /// two successive estimates differ by at most this much, or the cap is hit.
  std::optional<double> target_error;
  int max_resolution = 4096;
  /// Upper bound on sphere points per evaluation. In d >= 4 the resolution is
  /// lowered until the grid fits.
  std::size_t max_points = std::size_t{1} << 22;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // |I(r) - I(r/2)|
  int resolution = 0;  // resolution actually used
  std::size_t points = 0;
};

/// Evaluates a function on a batch of unit directions (one per row).
using SphereBatchFn = std::function<void(const Eigen::MatrixXd& dirs, Eigen::VectorXd& values)>;

/// Integral of f over S^(d-1) at a fixed resolution (no error estimate).
double integrate_sphere_fixed(int d, int resolution, const SphereBatchFn& f);

/// Integral with error estimate per QuadratureSpec.
QuadratureResult integrate_sphere(int d, const QuadratureSpec& spec, const SphereBatchFn& f);

/// Largest resolution r <= requested with 2 r^(d-1) <= max_points; d <= 3
/// grids are never capped.
int effective_resolution(int d, int requested, std::size_t max_points);

/// Gauss-Legendre nodes and weights on [a, b].
void gauss_legendre(int count, double a, double b, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace convexiq
