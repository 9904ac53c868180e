#include "convexiq/body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace convexiq {

// --- VPolytope -------------------------------------------------------------

VPolytope VPolytope::from_points(const PointList& points) {
  if (points.empty()) throw InvalidArgument("convex_hull: empty point list");
  const int n = static_cast<int>(points.front().size());
  return VPolytope(std::make_shared<const Hull>(compute_hull(points, n)));
}

VPolytope VPolytope::empty(int n) { return VPolytope(std::make_shared<const Hull>(compute_hull({}, n))); }

double VPolytope::support(const Vec& u) const {
  if (is_empty()) throw UndefinedValue("support function of the empty set");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : vertices()) best = std::max(best, v.dot(u));
  return best;
}

VPolytope VPolytope::scaled(double factor) const {
  if (!(factor > 0.0) || is_empty()) {
    if (is_empty()) return *this;
    PointList pts;
    for (const auto& v : vertices()) pts.push_back(factor * v);
    return from_points(pts);
  }
  auto h = std::make_shared<Hull>(*hull_);
  h->origin *= factor;
  for (auto& v : h->vertices) v *= factor;
  for (auto& y : h->local) y *= factor;
  for (auto& f : h->facets) f.offset *= factor;
  h->interior *= factor;
  return VPolytope(std::move(h));
}

VPolytope VPolytope::translated(const Vec& shift) const {
  if (is_empty()) return *this;
  auto h = std::make_shared<Hull>(*hull_);
  h->origin += shift;
  for (auto& v : h->vertices) v += shift;
  // ordering may change only if shift breaks ties, which it cannot (same shift for all)
  return VPolytope(std::move(h));
}

bool operator==(const VPolytope& a, const VPolytope& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.vertices().size() != b.vertices().size()) return false;
  for (std::size_t i = 0; i < a.vertices().size(); ++i) {
    if ((a.vertices()[i] - b.vertices()[i]).cwiseAbs().maxCoeff() > kHullTolerance) return false;
  }
  return true;
}

VPolytope convex_hull(const PointList& points) { return VPolytope::from_points(points); }

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw InvalidArgument("minkowski_sum: dimension mismatch");
  if (p.is_empty() || q.is_empty()) return VPolytope::empty(p.ambient_dim());
  const VPolytope& big = p.vertices().size() >= q.vertices().size() ? p : q;
  const VPolytope& small = &big == &p ? q : p;
  const Hull& h = big.hull();
  const int n = big.ambient_dim();
  PointList sums;
  if (h.dim != n || small.vertices().size() == 1) {
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& a : big.vertices()) {
      for (const auto& b : small.vertices()) sums.push_back(a + b);
    }
    return VPolytope::from_points(sums);
  }
  // Normal-fan filter: if one vertex b of the small summand is the unique
  // maximizer on every facet normal at a, the cone of a lies inside the cone
  // of b and a + b is the only candidate from a.
  std::vector<std::vector<int>> incident(h.vertices.size());
  PointList normals;
  normals.reserve(h.facets.size());
  for (std::size_t f = 0; f < h.facets.size(); ++f) {
    normals.push_back(h.basis * h.facets[f].normal);
    for (int v : h.facets[f].vertices) incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(f));
  }
  const auto& sv = small.vertices();
  double scale = 0.0;
  for (const auto& b : sv) scale = std::max(scale, b.cwiseAbs().maxCoeff());
  const double tol = 1e-9 * std::max(1.0, scale);
  std::vector<int> best(normals.size());
  for (std::size_t f = 0; f < normals.size(); ++f) {
    double top = -std::numeric_limits<double>::infinity(), second = top;
    int arg = -1;
    for (std::size_t k = 0; k < sv.size(); ++k) {
      const double t = sv[k].dot(normals[f]);
      if (t > top) {
        second = top;
        top = t;
        arg = static_cast<int>(k);
      } else if (t > second) {
        second = t;
      }
    }
    best[f] = top - second > tol ? arg : -1;
  }
  for (std::size_t a = 0; a < h.vertices.size(); ++a) {
    int only = incident[a].empty() ? -1 : best[static_cast<std::size_t>(incident[a].front())];
    for (int f : incident[a]) {
      if (best[static_cast<std::size_t>(f)] != only) only = -1;
    }
    if (only >= 0) {
      sums.push_back(h.vertices[a] + sv[static_cast<std::size_t>(only)]);
    } else {
      for (const auto& b : sv) sums.push_back(h.vertices[a] + b);
    }
  }
  return VPolytope::from_points(sums);
}

// --- Zonotope --------------------------------------------------------------

Zonotope::Zonotope(Vec center, PointList generators) : center_(std::move(center)) {
  check_dimension(static_cast<int>(center_.size()));
  check_finite(center_);
  double scale = 0.0;
  for (const auto& g : generators) {
    if (g.size() != center_.size()) throw InvalidArgument("Zonotope: generator dimension mismatch");
    check_finite(g);
    scale = std::max(scale, g.norm());
  }
  for (auto& g : generators) {
    if (g.norm() <= 1e-14 * std::max(1.0, scale)) continue;
    for (Eigen::Index i = 0; i < g.size(); ++i) {
      if (g(i) != 0.0) {
        if (g(i) < 0.0) g = -g;
        break;
      }
    }
    generators_.push_back(g);
  }
  std::sort(generators_.begin(), generators_.end(), lex_less);
}

double Zonotope::support(const Vec& u) const {
  double h = center_.dot(u);
  for (const auto& g : generators_) h += std::abs(g.dot(u));
  return h;
}

int Zonotope::affine_dim() const { return vector_rank(generators_); }

VPolytope Zonotope::to_polytope() const {
  PointList current{center_};
  VPolytope acc = VPolytope::from_points(current);
  for (const auto& g : generators_) {
    PointList next;
    next.reserve(acc.vertices().size() * 2);
    for (const auto& v : acc.vertices()) {
      next.push_back(v + g);
      next.push_back(v - g);
    }
    acc = VPolytope::from_points(next);
  }
  return acc;
}

// --- Ball ------------------------------------------------------------------

Ball::Ball(Vec center, double radius) : Ball(center, radius, Mat::Identity(center.size(), center.size())) {}

Ball::Ball(Vec center, double radius, Mat span) : center_(std::move(center)), radius_(radius), span_(std::move(span)) {
  check_dimension(static_cast<int>(center_.size()));
  check_finite(center_);
  if (!(radius_ >= 0.0) || !std::isfinite(radius_)) throw InvalidArgument("Ball: radius must be finite and nonnegative");
  if (span_.rows() != center_.size()) throw InvalidArgument("Ball: span has wrong row count");
  Mat gram = span_.transpose() * span_;
  if (!gram.isApprox(Mat::Identity(span_.cols(), span_.cols()), 1e-9)) {
    throw InvalidArgument("Ball: span columns must be orthonormal");
  }
}

double Ball::support(const Vec& u) const { return center_.dot(u) + radius_ * (span_.transpose() * u).norm(); }

// --- Named -----------------------------------------------------------------

Named::Named(NamedId id, int n, int fineness) : id_(id), n_(n), fineness_(fineness) {
  check_dimension(n);
  if ((id == NamedId::K1 || id == NamedId::K2) && n != 3) throw InvalidArgument("K1 and K2 live in R^3");
  if (fineness < 8) throw InvalidArgument("Named: fineness must be at least 8");
}

double Named::support(const Vec& u) const {
  switch (id_) {
    case NamedId::Cross:
      return u.cwiseAbs().maxCoeff();
    case NamedId::Cube:
      return u.cwiseAbs().sum();
    case NamedId::K1: {
      const double m = u.cwiseAbs2().minCoeff();
      return std::sqrt(std::max(0.0, u.squaredNorm() - m));
    }
    case NamedId::K2:
      return std::sqrt(std::numbers::pi / 2.0) * u.cwiseAbs().maxCoeff();
  }
  return 0.0;
}

VPolytope Named::expand() const { return expand(fineness_); }

VPolytope Named::expand(int fineness) const {
  PointList pts;
  switch (id_) {
    case NamedId::Cross:
    case NamedId::K2: {
      const double t = id_ == NamedId::K2 ? std::sqrt(std::numbers::pi / 2.0) : 1.0;
      for (int i = 0; i < n_; ++i) {
        pts.push_back(t * unit_vec(n_, i));
        pts.push_back(-t * unit_vec(n_, i));
      }
      break;
    }
    case NamedId::Cube: {
      for (std::uint32_t mask = 0; mask < (1u << n_); ++mask) {
        Vec v(n_);
        for (int i = 0; i < n_; ++i) v(i) = (mask >> i) & 1u ? 1.0 : -1.0;
        pts.push_back(v);
      }
      break;
    }
    case NamedId::K1: {
      for (int axis = 0; axis < 3; ++axis) {
        const int a = (axis + 1) % 3, b = (axis + 2) % 3;
        for (int k = 0; k < fineness; ++k) {
          const double t = 2.0 * std::numbers::pi * k / fineness;
          Vec v = Vec::Zero(3);
          v(a) = std::cos(t);
          v(b) = std::sin(t);
          pts.push_back(v);
        }
      }
      break;
    }
  }
  return VPolytope::from_points(pts);
}

Zonotope Named::as_zonotope() const {
  if (id_ != NamedId::Cube) throw InvalidArgument("only cube(n) is a zonotope among named bodies");
  PointList gens;
  for (int i = 0; i < n_; ++i) gens.push_back(unit_vec(n_, i));
  return {zero_vec(n_), gens};
}

std::string to_string(NamedId id) {
  switch (id) {
    case NamedId::Cross: return "cross";
    case NamedId::Cube: return "cube";
    case NamedId::K1: return "K1";
    case NamedId::K2: return "K2";
  }
  return "?";
}

NamedId named_id_from_string(const std::string& s) {
  if (s == "cross") return NamedId::Cross;
  if (s == "cube") return NamedId::Cube;
  if (s == "K1") return NamedId::K1;
  if (s == "K2") return NamedId::K2;
  throw InvalidArgument("unknown named body '" + s + "'");
}

// --- Body ------------------------------------------------------------------

int Body::ambient_dim() const {
  return std::visit([](const auto& b) { return b.ambient_dim(); }, rep_);
}

VPolytope Body::to_polytope() const {
  if (const auto* p = get_if<VPolytope>()) return *p;
  if (const auto* z = get_if<Zonotope>()) return z->to_polytope();
  if (const auto* n = get_if<Named>()) return n->expand();
  throw Unsupported("a ball has no polytope form");
}

bool Body::is_zonoid() const {
  switch (kind()) {
    case BodyKind::Zonotope:
    case BodyKind::Ball:
      return true;
    case BodyKind::Named: {
      const auto& nm = std::get<Named>(rep_);
      return nm.id() == NamedId::Cube || (nm.id() == NamedId::Cross && nm.ambient_dim() == 2);
    }
    case BodyKind::VPolytope: {
      const auto& p = std::get<VPolytope>(rep_);
      if (p.affine_dim() <= 1) return true;
      if (p.affine_dim() != 2) return false;
      // planar bodies are zonoids iff centrally symmetric
      Vec c = zero_vec(p.ambient_dim());
      for (const auto& v : p.vertices()) c += v;
      c /= static_cast<double>(p.vertices().size());
      PointList reflected;
      for (const auto& v : p.vertices()) reflected.push_back(2.0 * c - v);
      return VPolytope::from_points(reflected) == p;
    }
  }
  return false;
}

std::string to_string(BodyKind kind) {
  switch (kind) {
    case BodyKind::VPolytope: return "vpolytope";
    case BodyKind::Zonotope: return "zonotope";
    case BodyKind::Ball: return "ball";
    case BodyKind::Named: return "named";
  }
  return "?";
}

double support(const Body& body, const Vec& direction) {
  if (direction.size() != body.ambient_dim()) throw InvalidArgument("support: direction has wrong dimension");
  if (direction.squaredNorm() == 0.0) throw InvalidArgument("support: zero direction");
  return std::visit([&](const auto& b) { return b.support(direction); }, body.rep());
}

Body apply_symmetry(const Body& body, const SignedPermutation& g) {
  if (g.dim() != body.ambient_dim()) throw InvalidArgument("apply_symmetry: dimension mismatch");
  switch (body.kind()) {
    case BodyKind::VPolytope: {
      const auto& p = *body.get_if<VPolytope>();
      if (p.is_empty()) return p;
      PointList pts;
      for (const auto& v : p.vertices()) pts.push_back(g.apply(v));
      return VPolytope::from_points(pts);
    }
    case BodyKind::Zonotope: {
      const auto& z = *body.get_if<Zonotope>();
      PointList gens;
      for (const auto& v : z.generators()) gens.push_back(g.apply(v));
      return Zonotope(g.apply(z.center()), gens);
    }
    case BodyKind::Ball: {
      const auto& b = *body.get_if<Ball>();
      Mat span(b.span().rows(), b.span().cols());
      for (Eigen::Index c = 0; c < span.cols(); ++c) span.col(c) = g.apply(b.span().col(c));
      return Ball(g.apply(b.center()), b.radius(), span);
    }
    case BodyKind::Named:
      // cross, cube, K1 and K2 are all invariant under the hyperoctahedral group
      return body;
  }
  return body;
}

int affine_dim(const Body& body) {
  return std::visit([](const auto& b) { return b.affine_dim(); }, body.rep());
}

Body scale(const Body& body, double factor) {
  if (!std::isfinite(factor)) throw InvalidArgument("scale: factor must be finite");
  switch (body.kind()) {
    case BodyKind::VPolytope:
      return body.get_if<VPolytope>()->scaled(factor);
    case BodyKind::Zonotope: {
      const auto& z = *body.get_if<Zonotope>();
      PointList gens;
      for (const auto& g : z.generators()) gens.push_back(factor * g);
      return Zonotope(factor * z.center(), gens);
    }
    case BodyKind::Ball: {
      const auto& b = *body.get_if<Ball>();
      return Ball(factor * b.center(), std::abs(factor) * b.radius(), b.span());
    }
    case BodyKind::Named: {
      const auto& nm = *body.get_if<Named>();
      if (nm.id() == NamedId::Cube) return scale(Body(nm.as_zonotope()), factor);
      return nm.expand().scaled(factor);
    }
  }
  return body;
}

}  // namespace convexiq
