#include "convexiq/measures.hpp"

#include "convexiq/constants.hpp"

#include <cmath>
#include <numbers>
#include <algorithm>
#include <map>

namespace convexiq {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// (k)-measure of the simplex spanned by k edge vectors (columns of e).
double simplex_measure(const Eigen::MatrixXd& e) {
  const Eigen::MatrixXd gram = e.transpose() * e;
  return std::sqrt(std::max(0.0, gram.determinant())) / factorial(static_cast<int>(e.cols()));
}

Eigen::MatrixXd vertex_matrix(const PointList& pts) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(pts.size()), pts.empty() ? 0 : pts.front().size());
  for (std::size_t i = 0; i < pts.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = pts[i].transpose();
  return m;
}

// Integral of h over the sphere for the point set with rows `verts`.
QuadratureResult integrate_polytope_support(const Eigen::MatrixXd& verts, const QuadratureSpec& q) {
  const Eigen::MatrixXd vt = verts.transpose();
  return integrate_sphere(static_cast<int>(verts.cols()), q, [&](const Eigen::MatrixXd& dirs, Eigen::VectorXd& out) {
    out = (dirs * vt).rowwise().maxCoeff();
  });
}

// V_{d-2} of a d-polytope (d >= 3): sum over ridges of the boundary
// triangulation of ridge measure times the angle between the two adjacent
// facet normals over 2 pi. Ridges interior to a flat facet contribute 0.
double ridge_sum(const Hull& h) {
  const int d = h.dim;
  std::map<std::vector<int>, std::pair<int, int>> ridges;
  std::vector<int> key(d - 1);
  for (int f = 0; f < static_cast<int>(h.facets.size()); ++f) {
    const auto& simplex = h.facets[f].vertices;
    for (int skip = 0; skip < d; ++skip) {
      for (int a = 0, b = 0; a < d; ++a) {
        if (a != skip) key[b++] = simplex[a];
      }
      std::sort(key.begin(), key.end());
      auto [it, inserted] = ridges.try_emplace(key, f, -1);
      if (!inserted) it->second.second = f;
    }
  }
  double total = 0.0;
  Eigen::MatrixXd e(d, d - 2);
  for (const auto& [ridge, fs] : ridges) {
    if (fs.second < 0) throw Error("ridge_sum: open ridge in hull triangulation");
    const Vec& n1 = h.facets[fs.first].normal;
    const Vec& n2 = h.facets[fs.second].normal;
    const double angle = 2.0 * std::atan2((n1 - n2).norm(), (n1 + n2).norm());
    if (angle == 0.0) continue;
    for (int j = 1; j < d - 1; ++j) e.col(j - 1) = h.local[ridge[j]] - h.local[ridge[0]];
    total += simplex_measure(e) * angle;
  }
  return total / (2.0 * std::numbers::pi);
}

Measure from_quadrature(const QuadratureResult& r, int d) {
  const double k = kappa(d - 1);
  return {r.value / k, r.error / k, false};
}

}  // namespace

double relative_volume(const VPolytope& p) {
  const Hull& h = p.hull();
  if (h.dim < 0) return 0.0;
  if (h.dim == 0) return 1.0;
  if (h.dim == 1) return (h.local[1] - h.local[0]).norm();
  const int d = h.dim;
  double total = 0.0;
  Eigen::MatrixXd m(d, d);
  for (const auto& f : h.facets) {
    for (int j = 0; j < d; ++j) m.col(j) = h.local[f.vertices[j]] - h.interior;
    total += std::abs(m.determinant());
  }
  return total / factorial(d);
}

double relative_boundary(const VPolytope& p) {
  const Hull& h = p.hull();
  if (h.dim <= 0) return 0.0;
  if (h.dim == 1) return 2.0;
  const int d = h.dim;
  double total = 0.0;
  Eigen::MatrixXd e(d, d - 1);
  for (const auto& f : h.facets) {
    for (int j = 1; j < d; ++j) e.col(j - 1) = h.local[f.vertices[j]] - h.local[f.vertices[0]];
    total += simplex_measure(e);
  }
  return total;
}

double volume(const VPolytope& p) { return p.affine_dim() == p.ambient_dim() ? relative_volume(p) : 0.0; }

double surface_area(const VPolytope& p) {
  const int n = p.ambient_dim();
  if (p.affine_dim() == n) return relative_boundary(p);
  if (p.affine_dim() == n - 1) return 2.0 * relative_volume(p);
  return 0.0;
}

double v_top(const VPolytope& p) { return surface_area(p) / 2.0; }

double v1_polytope_exact(const VPolytope& p) {
  if (p.ambient_dim() != 3 || p.affine_dim() != 3) {
    throw Unsupported("v1_polytope_exact needs a full-dimensional polytope in R^3");
  }
  return ridge_sum(p.hull());
}

Measure v1_quadrature(const Body& body, const QuadratureSpec& q) {
  const int n = body.ambient_dim();
  if (const auto* p = body.get_if<VPolytope>()) {
    if (p->is_empty()) return {0.0, 0.0, true};
    return from_quadrature(integrate_polytope_support(vertex_matrix(p->vertices()), q), n);
  }
  if (const auto* z = body.get_if<Zonotope>()) {
    const Eigen::MatrixXd gt = vertex_matrix(z->generators()).transpose();
    const Eigen::VectorXd c = z->center();
    auto r = integrate_sphere(n, q, [&](const Eigen::MatrixXd& dirs, Eigen::VectorXd& out) {
      out = dirs * c;
      if (gt.cols() > 0) out += (dirs * gt).cwiseAbs().rowwise().sum();
    });
    return from_quadrature(r, n);
  }
  auto r = integrate_sphere(n, q, [&](const Eigen::MatrixXd& dirs, Eigen::VectorXd& out) {
    out.resize(dirs.rows());
    for (Eigen::Index i = 0; i < dirs.rows(); ++i) out(i) = support(body, dirs.row(i).transpose());
  });
  return from_quadrature(r, n);
}

double vm_zonotope(const Zonotope& z, int m) {
  const int n = z.ambient_dim();
  if (m < 0 || m > n) throw InvalidArgument("vm_zonotope: order out of range");
  if (m == 0) return 1.0;
  const auto& g = z.generators();
  const int k = static_cast<int>(g.size());
  if (k < m) return 0.0;
  std::vector<int> pick(m);
  for (int i = 0; i < m; ++i) pick[i] = i;
  Eigen::MatrixXd cols(n, m);
  double total = 0.0;
  while (true) {
    for (int j = 0; j < m; ++j) cols.col(j) = g[pick[j]];
    total += std::sqrt(std::max(0.0, (cols.transpose() * cols).determinant()));
    int j = m - 1;
    while (j >= 0 && pick[j] == k - m + j) --j;
    if (j < 0) break;
    ++pick[j];
    for (int t = j + 1; t < m; ++t) pick[t] = pick[t - 1] + 1;
  }
  return std::ldexp(total, m);
}

Measure vm_polytope(const VPolytope& p, int m, const QuadratureSpec& q) {
  const int n = p.ambient_dim();
  if (m < 0 || m > n) throw InvalidArgument("vm_polytope: order out of range");
  if (p.is_empty()) return {0.0, 0.0, true};
  const int d = p.affine_dim();
  if (m == 0) return {1.0, 0.0, true};
  if (m > d) return {0.0, 0.0, true};
  if (m == d) return {relative_volume(p), 0.0, true};
  if (m == d - 1) return {relative_boundary(p) / 2.0, 0.0, true};
  if (m == d - 2) return {ridge_sum(p.hull()), 0.0, true};
  if (m == 1) {
    Eigen::MatrixXd local = vertex_matrix(p.hull().local);
    local.rowwise() -= local.colwise().mean();
    return from_quadrature(integrate_polytope_support(local, q), d);
  }
  throw Unsupported("V_" + std::to_string(m) + " of a " + std::to_string(d) +
                    "-dimensional polytope has no implemented path");
}

Measure intrinsic_volume(const Body& body, int m, const QuadratureSpec& q) {
  const int n = body.ambient_dim();
  if (m < 0 || m > n) throw InvalidArgument("intrinsic_volume: order out of range");
  switch (body.kind()) {
    case BodyKind::VPolytope:
      return vm_polytope(*body.get_if<VPolytope>(), m, q);
    case BodyKind::Zonotope:
      return {vm_zonotope(*body.get_if<Zonotope>(), m), 0.0, true};
    case BodyKind::Ball: {
      const auto& b = *body.get_if<Ball>();
      if (b.radius() == 0.0) return {m == 0 ? 1.0 : 0.0, 0.0, true};
      return {ball_intrinsic_volume(static_cast<int>(b.span().cols()), m, b.radius()), 0.0, true};
    }
    case BodyKind::Named: {
      const auto& nm = *body.get_if<Named>();
      if (nm.id() == NamedId::Cube) return {vm_zonotope(nm.as_zonotope(), m), 0.0, true};
      if (nm.exact_polytope()) return vm_polytope(nm.expand(), m, q);
      if (m == 1) return v1_quadrature(body, q);
      // K1 beyond V_1: inscribed polytope, error from halving the fineness
      const Measure fine = vm_polytope(nm.expand(), m, q);
      const Measure coarse = vm_polytope(nm.expand(nm.fineness() / 2), m, q);
      return {fine.value, std::abs(fine.value - coarse.value) + fine.error, false};
    }
  }
  throw Error("intrinsic_volume: unknown body kind");
}

FlatSet FlatSet::make(Vec base, PointList generators) {
  check_dimension(static_cast<int>(base.size()));
  check_finite(base);
  for (const auto& g : generators) {
    if (g.size() != base.size()) throw InvalidArgument("FlatSet: generator dimension mismatch");
    check_finite(g);
  }
  if (generators.empty() || static_cast<Eigen::Index>(generators.size()) > base.size()) {
    throw InvalidArgument("FlatSet: need 1..n generators");
  }
  if (vector_rank(generators) != static_cast<int>(generators.size())) {
    throw InvalidArgument("FlatSet: generators are linearly dependent");
  }
  return FlatSet{std::move(base), std::move(generators)};
}

double hausdorff_flat(const FlatSet& f) {
  const auto m = static_cast<Eigen::Index>(f.generators.size());
  Eigen::MatrixXd g(f.base.size(), m);
  for (Eigen::Index j = 0; j < m; ++j) g.col(j) = f.generators[j];
  return std::sqrt(std::max(0.0, (g.transpose() * g).determinant()));
}

FlatSet project_flat(const FlatSet& f, CoordinateIndex i) {
  const int n = f.ambient_dim();
  const int k = i.zero_based(n);
  auto drop = [&](const Vec& v) {
    Vec out(n - 1);
    for (int a = 0, b = 0; a < n; ++a) {
      if (a != k) out(b++) = v(a);
    }
    return out;
  };
  FlatSet out;
  out.base = drop(f.base);
  for (const auto& g : f.generators) out.generators.push_back(drop(g));
  return out;
}

}  // namespace convexiq
