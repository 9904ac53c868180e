#pragma once

#include "convexiq/body.hpp"

namespace convexiq {

/// K|e_i^perp, kept in R^n with coordinate i set to zero. Balls stay symbolic
/// (a tilted lower-dimensional ball projects to an ellipse: Unsupported).
Body project(const Body& body, CoordinateIndex i);

/// K|e_i^perp written in R^{n-1} (coordinate i deleted). Needs n >= 3.
Body project_reduced(const Body& body, CoordinateIndex i);

/// K|u^perp for any nonzero u, kept in R^n.
Body project_onto_hyperplane(const Body& body, const Vec& u);

/// {x in P : x_i = 0} via vertices on the hyperplane plus crossings of
/// boundary edges. May be empty.
VPolytope section(const VPolytope& p, CoordinateIndex i);

/// {x in P : x_i = t}.
VPolytope section_at(const VPolytope& p, CoordinateIndex i, double t);

/// Section of any body; balls and K1 are handled symbolically.
Body section(const Body& body, CoordinateIndex i);

/// (1/|G|) sum over the hyperoctahedral group of gK. Needs n <= 5; throws
/// Unsupported once the running sum passes 200000 vertices (generic inputs in
/// n >= 4 hit this quickly).
VPolytope g_symmetral(const Body& body);

struct SteinerResult {
  VPolytope body;
  double volume_error = 0.0;  // |vol(result) - vol(input)|
};

/// Steiner symmetral in direction e_i of a polytope in R^3. The body is cut
/// into slices orthogonal to another axis at `slabs` equally spaced levels
/// plus every vertex level; each slice is symmetrized exactly and the result
/// is the hull of the symmetrized slices.
SteinerResult steiner_symmetrize(const VPolytope& p, CoordinateIndex i, int slabs);

}  // namespace convexiq
