#pragma once

#include "convexiq/types.hpp"

#include <vector>

namespace convexiq {

/// One boundary simplex of a hull, expressed in the hull's intrinsic frame.
struct HullFacet {
  std::vector<int> vertices;  // `dim` indices into Hull::vertices
  Vec normal;                 // outward unit normal (intrinsic coordinates)
  double offset = 0.0;        // normal . x <= offset on the hull
};

/// Convex hull of a finite point set together with its intrinsic frame.
///
/// The hull lives in the affine subspace origin + span(basis). For dim >= 2 the
/// relative boundary is triangulated into (dim-1)-simplices; coplanar simplices
/// are kept separate (a square facet of a cube shows up as two triangles).
/// Only extreme points are kept as vertices, in lexicographic order.
struct Hull {
  int ambient_dim = 0;
  int dim = -1;  // -1 for the empty set
  Vec origin;
  Mat basis;  // ambient_dim x dim, orthonormal columns
  PointList vertices;  // ambient coordinates
  PointList local;     // intrinsic coordinates, same order as `vertices`
  std::vector<HullFacet> facets;
  Vec interior;  // intrinsic coordinates of a relative-interior point

  [[nodiscard]] Vec to_local(const Vec& x) const;
  [[nodiscard]] Vec to_ambient(const Vec& y) const;
  [[nodiscard]] bool empty() const { return dim < 0; }
};

/// Absolute tolerance used for coplanarity and duplicate detection, relative
/// to the extent of the point set.
inline constexpr double kHullTolerance = 1e-10;

/// Computes the hull of `points` (all of dimension `ambient_dim`).
Hull compute_hull(const PointList& points, int ambient_dim);

/// Affine dimension of a point set: rank of the centered point matrix with
/// singular values below 1e-9 (relative to the largest) treated as zero.
int affine_rank(const PointList& points);

/// Rank of a set of direction vectors (same tolerance policy).
int vector_rank(const PointList& vectors);

}  // namespace convexiq
