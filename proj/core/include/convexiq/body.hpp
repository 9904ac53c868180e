#pragma once

#include "convexiq/hull.hpp"
#include "convexiq/symmetry.hpp"
#include "convexiq/types.hpp"

#include <memory>
#include <string>
#include <variant>

namespace convexiq {

/// Polytope given by its vertices. Always canonical: only extreme points,
/// duplicates merged at 1e-10, lexicographic vertex order. May be empty
/// (the result of a section that misses the body).
class VPolytope {
 public:
  /// Hull of an arbitrary nonempty point list.
  static VPolytope from_points(const PointList& points);
  static VPolytope empty(int n);

  [[nodiscard]] int ambient_dim() const { return hull_->ambient_dim; }
  [[nodiscard]] int affine_dim() const { return hull_->dim; }
  [[nodiscard]] bool is_empty() const { return hull_->dim < 0; }
  [[nodiscard]] const PointList& vertices() const { return hull_->vertices; }
  [[nodiscard]] const Hull& hull() const { return *hull_; }

  [[nodiscard]] double support(const Vec& u) const;
  [[nodiscard]] VPolytope scaled(double factor) const;
  [[nodiscard]] VPolytope translated(const Vec& shift) const;

  friend bool operator==(const VPolytope& a, const VPolytope& b);

 private:
  explicit VPolytope(std::shared_ptr<const Hull> hull) : hull_(std::move(hull)) {}
  std::shared_ptr<const Hull> hull_;
};

/// center + sum_i [-g_i, g_i].
class Zonotope {
 public:
  /// Drops zero generators, flips each generator so its first nonzero
  /// coordinate is positive, and sorts generators lexicographically.
  Zonotope(Vec center, PointList generators);

  [[nodiscard]] int ambient_dim() const { return static_cast<int>(center_.size()); }
  [[nodiscard]] const Vec& center() const { return center_; }
  [[nodiscard]] const PointList& generators() const { return generators_; }

  [[nodiscard]] double support(const Vec& u) const;
  [[nodiscard]] int affine_dim() const;
  /// Vertex enumeration through all sign patterns (at most 2^20 of them).
  [[nodiscard]] VPolytope to_polytope() const;

  friend bool operator==(const Zonotope&, const Zonotope&) = default;

 private:
  Vec center_;
  PointList generators_;
};

/// Euclidean ball of dimension span.cols() lying in center + span(span).
/// A full-dimensional ball has span = identity.
class Ball {
 public:
  Ball(Vec center, double radius);
  Ball(Vec center, double radius, Mat span);

  [[nodiscard]] int ambient_dim() const { return static_cast<int>(center_.size()); }
  [[nodiscard]] const Vec& center() const { return center_; }
  [[nodiscard]] double radius() const { return radius_; }
  [[nodiscard]] const Mat& span() const { return span_; }
  [[nodiscard]] int affine_dim() const { return radius_ > 0.0 ? static_cast<int>(span_.cols()) : 0; }
  [[nodiscard]] bool full_dimensional() const { return span_.cols() == ambient_dim(); }

  [[nodiscard]] double support(const Vec& u) const;

 private:
  Vec center_;
  double radius_;
  Mat span_;
};

enum class NamedId { Cross, Cube, K1, K2 };

/// Standard bodies: cross(n) = conv{+-e_i}, cube(n) = [-1,1]^n,
/// K1 = conv of the three unit coordinate disks in R^3, K2 = sqrt(pi/2) cross(3).
class Named {
 public:
  static constexpr int kDefaultFineness = 256;

  Named(NamedId id, int n, int fineness = kDefaultFineness);

  [[nodiscard]] NamedId id() const { return id_; }
  [[nodiscard]] int ambient_dim() const { return n_; }
  [[nodiscard]] int fineness() const { return fineness_; }
  [[nodiscard]] int affine_dim() const { return n_; }

  [[nodiscard]] double support(const Vec& u) const;
  /// VPolytope form; for K1 an inscribed polytope with `fineness` points per disk.
  [[nodiscard]] VPolytope expand() const;
  [[nodiscard]] VPolytope expand(int fineness) const;
  /// cube(n) as a zonotope with generators e_i.
  [[nodiscard]] Zonotope as_zonotope() const;
  [[nodiscard]] bool exact_polytope() const { return id_ != NamedId::K1; }

  friend bool operator==(const Named&, const Named&) = default;

 private:
  NamedId id_;
  int n_;
  int fineness_;
};

std::string to_string(NamedId id);
NamedId named_id_from_string(const std::string& s);

enum class BodyKind { VPolytope, Zonotope, Ball, Named };

/// Tagged union over the supported body representations.
class Body {
 public:
  using Rep = std::variant<VPolytope, Zonotope, Ball, Named>;

  Body(VPolytope p) : rep_(std::move(p)) {}
  Body(Zonotope z) : rep_(std::move(z)) {}
  Body(Ball b) : rep_(std::move(b)) {}
  Body(Named n) : rep_(std::move(n)) {}

  [[nodiscard]] const Rep& rep() const { return rep_; }
  [[nodiscard]] BodyKind kind() const { return static_cast<BodyKind>(rep_.index()); }
  [[nodiscard]] int ambient_dim() const;

  template <class T>
  [[nodiscard]] const T* get_if() const {
    return std::get_if<T>(&rep_);
  }

  /// Polytope form of polytopal bodies (VPolytope, Zonotope, Named);
  /// throws Unsupported for balls.
  [[nodiscard]] VPolytope to_polytope() const;
  [[nodiscard]] bool is_zonoid() const;

 private:
  Rep rep_;
};

std::string to_string(BodyKind kind);

/// h_K(u) = sup{x . u : x in K}. Throws InvalidArgument on a zero direction.
double support(const Body& body, const Vec& direction);

VPolytope convex_hull(const PointList& points);

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q);

/// Image of the body under a signed coordinate permutation.
Body apply_symmetry(const Body& body, const SignedPermutation& g);

int affine_dim(const Body& body);

/// lambda * K (about the origin).
Body scale(const Body& body, double factor);

}  // namespace convexiq
