#pragma once

#include "convexiq/body.hpp"
#include "convexiq/quadrature.hpp"

namespace convexiq {

/// A measured quantity with an absolute error estimate. Exact paths report
/// error 0 and exact = true; their only error is floating-point rounding.
struct Measure {
  double value = 0.0;
  double error = 0.0;
  bool exact = true;
};

/// n-volume; 0 when affine_dim < n.
double volume(const VPolytope& p);

/// Sum of facet areas for full-dimensional P. A P of affine dimension n-1 is
/// counted from both sides (2 * its (n-1)-measure); lower dimensions give 0.
double surface_area(const VPolytope& p);

/// V_{n-1} = surface_area / 2.
double v_top(const VPolytope& p);

/// d-measure of P in its own affine hull (d = affine_dim).
double relative_volume(const VPolytope& p);

/// (d-1)-measure of the relative boundary (d = affine_dim); for d = 1 this is 2.
double relative_boundary(const VPolytope& p);

/// V_1 of a 3-polytope in R^3 from edge lengths and exterior angles.
/// Throws Unsupported unless n = 3 and P is full-dimensional.
double v1_polytope_exact(const VPolytope& p);

/// V_1 = (1/kappa_{n-1}) * integral of h over S^{n-1}.
Measure v1_quadrature(const Body& body, const QuadratureSpec& q = {});

/// Exact V_m of a zonotope: sum over m-subsets of generators of 2^m sqrt(det G^T G).
double vm_zonotope(const Zonotope& z, int m);

/// V_m of a polytope, d = affine_dim. Exact for m >= d-2 (which covers every
/// m when d <= 3); V_1 by quadrature in the polytope's own affine hull when
/// d >= 4. Other combinations throw Unsupported.
Measure vm_polytope(const VPolytope& p, int m, const QuadratureSpec& q = {});

/// V_m of any body, dispatching on the representation.
Measure intrinsic_volume(const Body& body, int m, const QuadratureSpec& q = {});

/// Parallelepiped base + sum t_j g_j, t in [0,1]^m, in R^n.
struct FlatSet {
  Vec base;
  PointList generators;

  /// Validates dimensions and that the generators are linearly independent.
  static FlatSet make(Vec base, PointList generators);

  [[nodiscard]] int ambient_dim() const { return static_cast<int>(base.size()); }
  [[nodiscard]] int flat_dim() const { return static_cast<int>(generators.size()); }
};

/// m-dimensional Hausdorff measure: sqrt(det G^T G).
double hausdorff_flat(const FlatSet& f);

/// Image under x -> x|e_i^perp, written in R^{n-1} (coordinate i deleted).
/// The image may be degenerate, in which case its measure is 0.
FlatSet project_flat(const FlatSet& f, CoordinateIndex i);

}  // namespace convexiq
