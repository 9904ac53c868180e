#include "convexiq/coord_ops.hpp"

#include "convexiq/measures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>

namespace convexiq {

namespace {

constexpr double kUnitTol = 1e-9;
// Sums of many generic images grow like (#edge directions)^(n-1) vertices.
constexpr std::size_t kSymmetralVertexBudget = 200000;

PointList map_points(const PointList& pts, const auto& f) {
  PointList out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(f(p));
  return out;
}

// Ball image under an orthogonal projection matrix `proj`.
Ball project_ball(const Ball& b, const Mat& proj) {
  const Mat image = proj * b.span();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(Eigen::MatrixXd(image), Eigen::ComputeThinU);
  Mat span(b.ambient_dim(), 0);
  for (Eigen::Index j = 0; j < svd.singularValues().size(); ++j) {
    const double s = svd.singularValues()(j);
    if (std::abs(s - 1.0) <= kUnitTol) {
      span.conservativeResize(Eigen::NoChange, span.cols() + 1);
      span.col(span.cols() - 1) = svd.matrixU().col(j);
    } else if (s > kUnitTol) {
      throw Unsupported("projection of a tilted lower-dimensional ball is an ellipsoid");
    }
  }
  return {proj * b.center(), b.radius(), span};
}

Body delete_coordinate(const Body& body, int k) {
  const int n = body.ambient_dim();
  auto drop = [&](const Vec& v) {
    Vec out(n - 1);
    for (int a = 0, b = 0; a < n; ++a) {
      if (a != k) out(b++) = v(a);
    }
    return out;
  };
  switch (body.kind()) {
    case BodyKind::VPolytope: {
      const auto& p = *body.get_if<VPolytope>();
      if (p.is_empty()) return VPolytope::empty(n - 1);
      return VPolytope::from_points(map_points(p.vertices(), drop));
    }
    case BodyKind::Zonotope: {
      const auto& z = *body.get_if<Zonotope>();
      return Zonotope(drop(z.center()), map_points(z.generators(), drop));
    }
    case BodyKind::Ball: {
      const auto& b = *body.get_if<Ball>();
      Mat span(n - 1, b.span().cols());
      for (Eigen::Index c = 0; c < span.cols(); ++c) span.col(c) = drop(b.span().col(c));
      return Ball(drop(b.center()), b.radius(), span);
    }
    case BodyKind::Named:
      break;
  }
  throw Error("delete_coordinate: unexpected named body");
}

// The unit disk of K1 orthogonal to e_k, which is both its section and its projection.
Ball k1_disk(int k) {
  Mat span(3, 2);
  span.setZero();
  for (int a = 0, c = 0; a < 3; ++a) {
    if (a != k) span(a, c++) = 1.0;
  }
  return {zero_vec(3), 1.0, span};
}

double extent_of(const PointList& pts) {
  double e = 0.0;
  for (const auto& p : pts) e = std::max(e, p.cwiseAbs().maxCoeff());
  return std::max(1.0, e);
}

}  // namespace

Body project(const Body& body, CoordinateIndex i) {
  const int n = body.ambient_dim();
  const int k = i.zero_based(n);
  auto zero = [k](Vec v) {
    v(k) = 0.0;
    return v;
  };
  switch (body.kind()) {
    case BodyKind::VPolytope: {
      const auto& p = *body.get_if<VPolytope>();
      if (p.is_empty()) return p;
      return VPolytope::from_points(map_points(p.vertices(), zero));
    }
    case BodyKind::Zonotope: {
      const auto& z = *body.get_if<Zonotope>();
      return Zonotope(zero(z.center()), map_points(z.generators(), zero));
    }
    case BodyKind::Ball: {
      Mat proj = Mat::Identity(n, n);
      proj(k, k) = 0.0;
      return project_ball(*body.get_if<Ball>(), proj);
    }
    case BodyKind::Named: {
      const auto& nm = *body.get_if<Named>();
      if (nm.id() == NamedId::Cube) return project(Body(nm.as_zonotope()), i);
      if (nm.id() == NamedId::K1) return k1_disk(k);
      return project(Body(nm.expand()), i);
    }
  }
  throw Error("project: unknown body kind");
}

Body project_reduced(const Body& body, CoordinateIndex i) {
  const int n = body.ambient_dim();
  const int k = i.zero_based(n);
  if (n - 1 < kMinDim) throw InvalidArgument("project_reduced: result would have dimension below 2");
  if (const auto* nm = body.get_if<Named>()) {
    if (nm->id() == NamedId::Cross || nm->id() == NamedId::Cube) return Named(nm->id(), n - 1, nm->fineness());
    if (nm->id() == NamedId::K1) return Ball(zero_vec(2), 1.0);
  }
  return delete_coordinate(project(body, i), k);
}

Body project_onto_hyperplane(const Body& body, const Vec& u) {
  const int n = body.ambient_dim();
  if (u.size() != n) throw InvalidArgument("project_onto_hyperplane: dimension mismatch");
  check_finite(u);
  if (u.norm() == 0.0) throw InvalidArgument("project_onto_hyperplane: zero normal");
  const Vec w = u.normalized();
  auto proj = [&](const Vec& v) -> Vec { return v - v.dot(w) * w; };
  switch (body.kind()) {
    case BodyKind::VPolytope: {
      const auto& p = *body.get_if<VPolytope>();
      if (p.is_empty()) return p;
      return VPolytope::from_points(map_points(p.vertices(), proj));
    }
    case BodyKind::Zonotope: {
      const auto& z = *body.get_if<Zonotope>();
      return Zonotope(proj(z.center()), map_points(z.generators(), proj));
    }
    case BodyKind::Ball:
      return project_ball(*body.get_if<Ball>(), Mat(Mat::Identity(n, n) - w * w.transpose()));
    case BodyKind::Named: {
      const auto& nm = *body.get_if<Named>();
      if (nm.id() == NamedId::Cube) return project_onto_hyperplane(Body(nm.as_zonotope()), u);
      return project_onto_hyperplane(Body(nm.expand()), u);
    }
  }
  throw Error("project_onto_hyperplane: unknown body kind");
}

VPolytope section_at(const VPolytope& p, CoordinateIndex i, double t) {
  const int n = p.ambient_dim();
  const int k = i.zero_based(n);
  if (p.is_empty()) return p;
  const auto& verts = p.vertices();
  const double tol = kHullTolerance * extent_of(verts);
  PointList pts;
  auto on_plane = [&](Vec v) {
    v(k) = t;
    pts.push_back(v);
  };
  for (const auto& v : verts) {
    if (std::abs(v(k) - t) <= tol) on_plane(v);
  }
  auto cross_edge = [&](int a, int b) {
    const double da = verts[a](k) - t, db = verts[b](k) - t;
    if ((da < -tol && db > tol) || (da > tol && db < -tol)) {
      const double s = da / (da - db);
      on_plane(verts[a] + s * (verts[b] - verts[a]));
    }
  };
  const Hull& h = p.hull();
  if (h.dim == 1) {
    cross_edge(0, 1);
  } else if (h.dim >= 2) {
    std::set<std::pair<int, int>> seen;
    for (const auto& f : h.facets) {
      for (std::size_t a = 0; a < f.vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < f.vertices.size(); ++b) {
          auto e = std::minmax(f.vertices[a], f.vertices[b]);
          if (seen.insert(e).second) cross_edge(e.first, e.second);
        }
      }
    }
  }
  if (pts.empty()) return VPolytope::empty(n);
  return VPolytope::from_points(pts);
}

VPolytope section(const VPolytope& p, CoordinateIndex i) { return section_at(p, i, 0.0); }

Body section(const Body& body, CoordinateIndex i) {
  const int n = body.ambient_dim();
  const int k = i.zero_based(n);
  switch (body.kind()) {
    case BodyKind::VPolytope:
      return section(*body.get_if<VPolytope>(), i);
    case BodyKind::Zonotope:
      return section(body.get_if<Zonotope>()->to_polytope(), i);
    case BodyKind::Ball: {
      const auto& b = *body.get_if<Ball>();
      // {c + S y : |y| <= r, c_k + w.y = 0} with w = S^T e_k
      const Eigen::VectorXd w = b.span().row(k).transpose();
      const double ck = b.center()(k);
      const double tol = kHullTolerance * std::max(1.0, b.radius());
      if (w.norm() <= kUnitTol) {
        if (std::abs(ck) <= tol) return b;
        return VPolytope::empty(n);
      }
      const Eigen::VectorXd y0 = -ck * w / w.squaredNorm();
      const double r2 = b.radius() * b.radius() - y0.squaredNorm();
      if (r2 < -tol * tol) return VPolytope::empty(n);
      Eigen::HouseholderQR<Eigen::MatrixXd> qr{Eigen::MatrixXd(w)};
      const Eigen::MatrixXd q = qr.householderQ();
      const Eigen::MatrixXd orth = q.rightCols(w.size() - 1);
      Vec center = b.center() + b.span() * y0;
      center(k) = 0.0;
      Mat span = b.span() * orth;
      return Ball(center, std::sqrt(std::max(0.0, r2)), span);
    }
    case BodyKind::Named: {
      const auto& nm = *body.get_if<Named>();
      if (nm.id() == NamedId::K1) return k1_disk(k);
      if (nm.id() == NamedId::Cube) return section(nm.as_zonotope().to_polytope(), i);
      return section(nm.expand(), i);
    }
  }
  throw Error("section: unknown body kind");
}

VPolytope g_symmetral(const Body& body) {
  const int n = body.ambient_dim();
  if (n > 5) throw InvalidArgument("g_symmetral: limited to n <= 5 (group order 2^n n!)");
  const VPolytope p = body.to_polytope();
  if (p.is_empty()) return p;
  // Identical images are merged and weighted by multiplicity.
  std::map<std::vector<double>, int> images;
  for_each_signed_permutation(n, [&](const SignedPermutation& g) {
    std::vector<double> key;
    key.reserve(p.vertices().size() * static_cast<std::size_t>(n));
    PointList pts = map_points(p.vertices(), [&](const Vec& v) { return g.apply(v); });
    std::sort(pts.begin(), pts.end(), lex_less);
    for (const auto& v : pts) key.insert(key.end(), v.data(), v.data() + n);
    ++images[key];
  });
  const double order = static_cast<double>(hyperoctahedral_order(n));
  std::optional<VPolytope> acc;
  for (const auto& [key, count] : images) {
    const double w = count / order;
    PointList pts;
    for (std::size_t a = 0; a < key.size(); a += static_cast<std::size_t>(n)) {
      pts.push_back(w * Eigen::Map<const Eigen::VectorXd>(key.data() + a, n));
    }
    const VPolytope term = VPolytope::from_points(pts);
    acc = acc ? minkowski_sum(*acc, term) : term;
    if (acc->vertices().size() > kSymmetralVertexBudget) {
      throw Unsupported("g_symmetral: vertex count exceeds " + std::to_string(kSymmetralVertexBudget));
    }
  }
  return *acc;
}

namespace {

// Chord length of a convex polygon (given by its hull vertices in cyclic
// order, coordinates (a, b)) along the line b = level, measured in a.
std::pair<double, bool> chord(const std::vector<Eigen::Vector2d>& poly, double level, double tol) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  auto take = [&](double a) {
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  };
  const std::size_t m = poly.size();
  for (std::size_t j = 0; j < m; ++j) {
    const auto& p = poly[j];
    const auto& q = poly[(j + 1) % m];
    if (std::abs(p.y() - level) <= tol) take(p.x());
    if ((p.y() - level) * (q.y() - level) < 0.0) {
      const double s = (level - p.y()) / (q.y() - p.y());
      take(p.x() + s * (q.x() - p.x()));
    }
  }
  if (hi < lo) return {0.0, false};
  return {hi - lo, true};
}

std::vector<Eigen::Vector2d> monotone_chain(std::vector<Eigen::Vector2d> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  if (pts.size() < 3) return pts;
  auto turn = [](const auto& o, const auto& a, const auto& b) {
    return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
  };
  std::vector<Eigen::Vector2d> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && turn(h[k - 2], h[k - 1], p) <= 0.0) --k;
    h[k++] = p;
  }
  for (std::size_t j = pts.size() - 1, t = k + 1; j-- > 0;) {
    while (k >= t && turn(h[k - 2], h[k - 1], pts[j]) <= 0.0) --k;
    h[k++] = pts[j];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

SteinerResult steiner_symmetrize(const VPolytope& p, CoordinateIndex i, int slabs) {
  if (p.ambient_dim() != 3) throw Unsupported("steiner_symmetrize is implemented for n = 3 only");
  if (slabs < 16) throw InvalidArgument("steiner_symmetrize: slabs must be at least 16");
  const int a = i.zero_based(3);
  if (p.is_empty()) return {p, 0.0};
  const int j = (a + 1) % 3;  // slicing axis
  const int b = (a + 2) % 3;  // remaining axis of each slice
  const auto& verts = p.vertices();
  const double tol = kHullTolerance * extent_of(verts);

  double lo = verts.front()(j), hi = lo;
  std::vector<double> levels;
  for (const auto& v : verts) {
    lo = std::min(lo, v(j));
    hi = std::max(hi, v(j));
    levels.push_back(v(j));
  }
  for (int s = 0; s <= slabs; ++s) levels.push_back(lo + (hi - lo) * s / slabs);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end(), [&](double x, double y) { return y - x <= tol; }),
               levels.end());

  PointList out;
  for (double t : levels) {
    const VPolytope slice = section_at(p, CoordinateIndex{j + 1}, t);
    if (slice.is_empty()) continue;
    std::vector<Eigen::Vector2d> flat;
    for (const auto& v : slice.vertices()) flat.emplace_back(v(a), v(b));
    const auto poly = monotone_chain(flat);
    for (const auto& q : poly) {
      const auto [len, hit] = chord(poly, q.y(), tol);
      if (!hit) continue;
      Vec x(3);
      x(j) = t;
      x(b) = q.y();
      x(a) = len / 2.0;
      out.push_back(x);
      x(a) = -len / 2.0;
      out.push_back(x);
    }
  }
  SteinerResult result{VPolytope::from_points(out), 0.0};
  result.volume_error = std::abs(volume(result.body) - volume(p));
  return result;
}

}  // namespace convexiq
