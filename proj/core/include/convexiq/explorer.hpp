#pragma once

#include "convexiq/body.hpp"
#include "convexiq/measures.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace convexiq {

/// F(K) = V_1(K) / sum_i V_1(K|e_i^perp). Throws UndefinedValue when the
/// denominator vanishes (K a point).
Measure functional_F(const Body& body, const QuadratureSpec& q = {});

/// p(t) = integral of sin^(n-1) over [pi/2 - arctan t, pi/2]; t >= 0.
double p_function(double t, int n);

/// J_K(x2) = h_K(x1, x2, 0) / x1 with x1 = sqrt(1 - x2^2), 0 <= x2 <= 1/sqrt 2.
/// Needs n = 3.
double j_function_n3(const Body& body, double x2);

/// True when h_K(g u) = h_K(u) on `pairs` random (g, u) pairs.
bool has_cube_symmetry(const Body& body, int pairs = 16, std::uint64_t seed = 1, double tol = 1e-9);

struct JSample {
  double x2 = 0.0;
  double j = 0.0;
};
/// `samples` equally spaced points on [0, 1/sqrt 2]. Throws InvalidArgument
/// if the body fails has_cube_symmetry.
std::vector<JSample> j_curve(const Body& body, int samples = 64);

struct K1Repro {
  double v1_sphere;      // 2D quadrature over the fundamental region
  double v1_sphere_err;
  double v1_inner;       // 1D quadrature of the closed-form inner integral
  double v1_inner_err;
  double v1_generic;     // generic sphere quadrature of h_K1
  double v1_generic_err;
  double v1_k2;          // v1_polytope_exact on sqrt(pi/2) C^3
  double v1_k2_closed;   // 6 arccos(1/3) / sqrt(pi)
};
K1Repro reproduce_K1(const QuadratureSpec& q = {});

struct Eq1Repro {
  double v1_cross;        // V_1(C^3)
  double v1_projection;   // V_1(C^3|e_i^perp), same for every i
  double ratio;           // V_1(C^3)^2 / sum_i V_1(C^3|e_i^perp)^2
  double mth_constant;    // 4/pi^2
};
Eq1Repro reproduce_eq1_falsification();

struct ReproRow {
  std::string target;
  std::string quantity;
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};
/// Targets: k1, eq1-c3, c0, meyer-octahedron, all.
std::vector<ReproRow> repro_rows(const std::string& target, const QuadratureSpec& q = {});
bool is_repro_target(const std::string& target);

struct ChebyshevResult {
  bool applicable = false;
  bool holds = false;
  double sum = 0.0;
  std::string reason;  // why inapplicable
};
/// Discrete Chebyshev-type check: f with zero mean and a single sign change
/// from negative to positive, g nonnegative and nondecreasing => sum f g >= 0.
ChebyshevResult chebyshev_check(const std::vector<double>& f, const std::vector<double>& g);

}  // namespace convexiq
