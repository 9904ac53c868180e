#include "convexiq/hull.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace convexiq {

Vec Hull::to_local(const Vec& x) const { return basis.transpose() * (x - origin); }

Vec Hull::to_ambient(const Vec& y) const { return origin + basis * y; }

namespace {

constexpr double kRankTolerance = 1e-9;

struct Frame {
  Vec origin;
  Mat basis;
  int dim = -1;
};

Frame affine_frame(const PointList& points, int n) {
  Frame f;
  if (points.empty()) return f;
  f.origin = zero_vec(n);
  for (const auto& p : points) f.origin += p;
  f.origin /= static_cast<double>(points.size());

  Eigen::MatrixXd centered(static_cast<Eigen::Index>(points.size()), n);
  for (std::size_t i = 0; i < points.size(); ++i) centered.row(static_cast<Eigen::Index>(i)) = (points[i] - f.origin).transpose();
  Eigen::BDCSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  double extent = 0.0;
  for (const auto& p : points) extent = std::max(extent, (p - f.origin).cwiseAbs().maxCoeff());
  int rank = 0;
  if (sv.size() > 0 && sv(0) > 1e-14 * std::max(1.0, extent)) {
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
      if (sv(k) > kRankTolerance * sv(0)) ++rank;
    }
  }
  f.dim = rank;
  f.basis = svd.matrixV().leftCols(rank);
  return f;
}

// Unordered key for a ridge (d-1 vertex ids).
struct RidgeKey {
  std::array<int, kMaxDim> ids{};
  friend bool operator==(const RidgeKey&, const RidgeKey&) = default;
};

struct RidgeHash {
  std::size_t operator()(const RidgeKey& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int id : k.ids) {
      h ^= static_cast<std::size_t>(id + 1);
      h *= 1099511628211ull;
    }
    return h;
  }
};

class Quickhull {
 public:
  Quickhull(const std::vector<Vec>& pts, int d, double eps) : pts_(pts), d_(d), eps_(eps) {}

  void run() {
    build_initial_simplex();
    std::vector<int> work;
    for (int f = 0; f < static_cast<int>(facets_.size()); ++f) work.push_back(f);
    while (!work.empty()) {
      int f = work.back();
      work.pop_back();
      if (!facets_[f].alive || facets_[f].outside.empty()) continue;
      int created_from = static_cast<int>(facets_.size());
      add_point(f);
      for (int g = created_from; g < static_cast<int>(facets_.size()); ++g) {
        if (facets_[g].alive && !facets_[g].outside.empty()) work.push_back(g);
      }
    }
  }

  struct Facet {
    std::array<int, kMaxDim> v{};
    std::array<int, kMaxDim> nb{};
    Vec normal;
    double offset = 0.0;
    std::vector<int> outside;
    int furthest = -1;
    double furthest_dist = 0.0;
    bool alive = true;
    int visit = -1;
  };

  const std::vector<Facet>& facets() const { return facets_; }
  const Vec& interior() const { return interior_; }

 private:
  double distance(const Facet& f, int p) const { return f.normal.dot(pts_[p]) - f.offset; }

  void orient(Facet& f) const {
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxDim, kMaxDim> edges(d_, d_ - 1);
    const Vec& base = pts_[f.v[0]];
    for (int k = 1; k < d_; ++k) edges.col(k - 1) = pts_[f.v[k]] - base;
    Vec normal;
    if (d_ == 2) {
      normal = Vec(2);
      normal << -edges(1, 0), edges(0, 0);
    } else if (d_ == 3) {
      Eigen::Vector3d a = edges.col(0), b = edges.col(1);
      Eigen::Vector3d c = a.cross(b);
      normal = Vec(3);
      normal << c(0), c(1), c(2);
    } else {
      Eigen::HouseholderQR<decltype(edges)> qr(edges);
      Mat q = qr.householderQ();
      normal = q.col(d_ - 1);
    }
    normal.normalize();
    double off = normal.dot(base);
    if (normal.dot(interior_) - off > 0) {
      normal = -normal;
      off = -off;
    }
    f.normal = normal;
    f.offset = off;
  }

  void build_initial_simplex() {
    const int np = static_cast<int>(pts_.size());
    std::vector<int> chosen;
    int i0 = 0;
    for (int i = 1; i < np; ++i) {
      if (pts_[i](0) < pts_[i0](0)) i0 = i;
    }
    chosen.push_back(i0);
    std::vector<Vec> dirs;
    for (int k = 0; k < d_; ++k) {
      int best = -1;
      double best_r = -1.0;
      for (int i = 0; i < np; ++i) {
        Vec r = pts_[i] - pts_[i0];
        for (const auto& q : dirs) r -= q.dot(r) * q;
        for (const auto& q : dirs) r -= q.dot(r) * q;
        double len = r.norm();
        if (len > best_r) {
          best_r = len;
          best = i;
        }
      }
      Vec r = pts_[best] - pts_[i0];
      for (const auto& q : dirs) r -= q.dot(r) * q;
      for (const auto& q : dirs) r -= q.dot(r) * q;
      dirs.push_back(r / r.norm());
      chosen.push_back(best);
    }
    interior_ = Vec::Zero(d_);
    for (int c : chosen) interior_ += pts_[c];
    interior_ /= static_cast<double>(d_ + 1);

    // facet j omits chosen[j]
    for (int j = 0; j <= d_; ++j) {
      Facet f;
      int slot = 0;
      for (int k = 0; k <= d_; ++k) {
        if (k == j) continue;
        f.v[slot] = chosen[k];
        // neighbor opposite chosen[k] is the facet omitting chosen[k]
        f.nb[slot] = k;
        ++slot;
      }
      orient(f);
      facets_.push_back(std::move(f));
    }
    std::vector<char> used(np, 0);
    for (int c : chosen) used[c] = 1;
    for (int i = 0; i < np; ++i) {
      if (used[i]) continue;
      for (auto& f : facets_) {
        double dist = distance(f, i);
        if (dist > eps_) {
          push_outside(f, i, dist);
          break;
        }
      }
    }
  }

  static void push_outside(Facet& f, int p, double dist) {
    f.outside.push_back(p);
    if (dist > f.furthest_dist || f.furthest < 0) {
      f.furthest = p;
      f.furthest_dist = dist;
    }
  }

  void add_point(int start) {
    const int p = facets_[start].furthest;
    ++stamp_;
    std::vector<int> visible{start};
    facets_[start].visit = stamp_;
    for (std::size_t q = 0; q < visible.size(); ++q) {
      const Facet& f = facets_[visible[q]];
      for (int j = 0; j < d_; ++j) {
        int g = f.nb[j];
        if (facets_[g].visit == stamp_) continue;
        if (distance(facets_[g], p) > eps_) {
          facets_[g].visit = stamp_;
          visible.push_back(g);
        }
      }
    }

    std::unordered_map<RidgeKey, std::pair<int, int>, RidgeHash> open_ridges;
    std::vector<int> created;
    for (int fi : visible) {
      for (int j = 0; j < d_; ++j) {
        int nbr = facets_[fi].nb[j];
        if (facets_[nbr].visit == stamp_) continue;
        Facet g;
        int slot = 0;
        for (int k = 0; k < d_; ++k) {
          if (k == j) continue;
          g.v[slot] = facets_[fi].v[k];
          ++slot;
        }
        g.v[d_ - 1] = p;
        g.nb[d_ - 1] = nbr;
        orient(g);
        const int gi = static_cast<int>(facets_.size());
        for (int k = 0; k < d_; ++k) {
          if (facets_[nbr].nb[k] == fi) facets_[nbr].nb[k] = gi;
        }
        facets_.push_back(std::move(g));
        created.push_back(gi);
        // ridges through p: drop one horizon vertex at a time
        for (int k = 0; k < d_ - 1; ++k) {
          RidgeKey key;
          key.ids.fill(-1);
          int s = 0;
          for (int t = 0; t < d_; ++t) {
            if (t == k) continue;
            key.ids[s++] = facets_[gi].v[t];
          }
          std::sort(key.ids.begin(), key.ids.begin() + s);
          auto it = open_ridges.find(key);
          if (it == open_ridges.end()) {
            open_ridges.emplace(key, std::make_pair(gi, k));
          } else {
            auto [other, other_slot] = it->second;
            facets_[gi].nb[k] = other;
            facets_[other].nb[other_slot] = gi;
            open_ridges.erase(it);
          }
        }
      }
    }

    std::vector<int> orphans;
    for (int fi : visible) {
      auto& f = facets_[fi];
      f.alive = false;
      for (int q : f.outside) {
        if (q != p) orphans.push_back(q);
      }
      f.outside.clear();
      f.outside.shrink_to_fit();
    }
    for (int q : orphans) {
      for (int gi : created) {
        double dist = distance(facets_[gi], q);
        if (dist > eps_) {
          push_outside(facets_[gi], q, dist);
          break;
        }
      }
    }
  }

  const std::vector<Vec>& pts_;
  int d_;
  double eps_;
  Vec interior_;
  std::vector<Facet> facets_;
  int stamp_ = 0;
};

struct RawHull {
  std::vector<int> vertex_ids;  // indices into the input, extreme points only
  std::vector<std::vector<int>> simplices;  // facet vertex ids (input indices)
  std::vector<Vec> normals;
  std::vector<double> offsets;
  Vec interior;
};

// Quickhull on full-dimensional local points, then drops boundary points that
// are not extreme (their incident facet normals do not span the space).
RawHull full_dimensional_hull(const std::vector<Vec>& local, const std::vector<int>& candidates, int d, double eps) {
  std::vector<int> ids = candidates;
  for (int round = 0; round < 8; ++round) {
    std::vector<Vec> pts;
    pts.reserve(ids.size());
    for (int id : ids) pts.push_back(local[id]);
    Quickhull qh(pts, d, eps);
    qh.run();

    std::vector<std::vector<int>> incident(pts.size());
    int nf = 0;
    for (int fi = 0; fi < static_cast<int>(qh.facets().size()); ++fi) {
      const auto& f = qh.facets()[fi];
      if (!f.alive) continue;
      ++nf;
      for (int k = 0; k < d; ++k) incident[f.v[k]].push_back(fi);
    }
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
      if (incident[i].empty()) continue;
      // cluster normals then test rank
      PointList normals;
      for (int fi : incident[i]) {
        const Vec& nrm = qh.facets()[fi].normal;
        bool seen = false;
        for (const auto& m : normals) {
          if (m.dot(nrm) > 1.0 - 1e-12) {
            seen = true;
            break;
          }
        }
        if (!seen) normals.push_back(nrm);
      }
      // pivoted Gram-Schmidt: take the largest residual each step
      int rank = 0;
      for (; rank < d; ++rank) {
        double top = 1e-8;
        std::size_t arg = normals.size();
        for (std::size_t k = 0; k < normals.size(); ++k) {
          const double r = normals[k].norm();
          if (r > top) {
            top = r;
            arg = k;
          }
        }
        if (arg == normals.size()) break;
        const Vec q = normals[arg] / top;
        for (auto& m : normals) m -= q.dot(m) * q;
      }
      if (rank == d) keep.push_back(i);
    }
    const bool all_extreme = static_cast<int>(keep.size()) == static_cast<int>(std::count_if(incident.begin(), incident.end(), [](const auto& v) { return !v.empty(); }));
    if (all_extreme || static_cast<int>(keep.size()) <= d) {
      RawHull out;
      out.interior = qh.interior();
      std::vector<char> used(pts.size(), 0);
      for (const auto& f : qh.facets()) {
        if (!f.alive) continue;
        std::vector<int> s;
        for (int k = 0; k < d; ++k) {
          s.push_back(ids[f.v[k]]);
          used[f.v[k]] = 1;
        }
        out.simplices.push_back(std::move(s));
        out.normals.push_back(f.normal);
        out.offsets.push_back(f.offset);
      }
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (used[i]) out.vertex_ids.push_back(ids[i]);
      }
      (void)nf;
      return out;
    }
    std::vector<int> next;
    for (int i : keep) next.push_back(ids[i]);
    ids = std::move(next);
  }
  throw Error("convex hull failed to stabilize");
}

// Removes near-duplicates (max-norm distance <= tol), keeping the first index.
std::vector<int> dedup_indices(const std::vector<Vec>& local, double tol) {
  std::vector<int> order(local.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (local[a](0) != local[b](0)) return local[a](0) < local[b](0);
    return a < b;
  });
  std::vector<char> dropped(local.size(), 0);
  std::vector<int> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int a = order[i];
    if (dropped[a]) continue;
    out.push_back(a);
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      int b = order[j];
      if (local[b](0) - local[a](0) > tol) break;
      if (!dropped[b] && (local[b] - local[a]).cwiseAbs().maxCoeff() <= tol) dropped[b] = 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int affine_rank(const PointList& points) {
  if (points.empty()) return -1;
  return affine_frame(points, static_cast<int>(points.front().size())).dim;
}

int vector_rank(const PointList& vectors) {
  if (vectors.empty()) return 0;
  const int n = static_cast<int>(vectors.front().size());
  Eigen::MatrixXd m(static_cast<Eigen::Index>(vectors.size()), n);
  for (std::size_t i = 0; i < vectors.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 1e-300) return 0;
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) > kRankTolerance * sv(0)) ++rank;
  }
  return rank;
}

Hull compute_hull(const PointList& points, int ambient_dim) {
  check_dimension(ambient_dim);
  Hull h;
  h.ambient_dim = ambient_dim;
  if (points.empty()) {
    h.origin = zero_vec(ambient_dim);
    h.basis = Mat::Zero(ambient_dim, 0);
    return h;
  }
  for (const auto& p : points) {
    if (p.size() != ambient_dim) throw InvalidArgument("convex_hull: mixed point dimensions");
    check_finite(p);
  }

  Frame frame = affine_frame(points, ambient_dim);
  h.dim = frame.dim;
  h.origin = frame.origin;
  h.basis = frame.basis;
  const int d = frame.dim;

  std::vector<Vec> local;
  local.reserve(points.size());
  double extent = 0.0;
  for (const auto& p : points) {
    local.push_back(h.to_local(p));
    extent = std::max(extent, (p - h.origin).cwiseAbs().maxCoeff());
  }
  const double eps = kHullTolerance * std::max(1.0, extent);

  std::vector<int> vertex_ids;
  RawHull raw;
  if (d == 0) {
    vertex_ids.push_back(0);
  } else if (d == 1) {
    int lo = 0, hi = 0;
    for (int i = 1; i < static_cast<int>(local.size()); ++i) {
      if (local[i](0) < local[lo](0)) lo = i;
      if (local[i](0) > local[hi](0)) hi = i;
    }
    vertex_ids = {lo, hi};
  } else {
    std::vector<int> candidates = dedup_indices(local, eps);
    raw = full_dimensional_hull(local, candidates, d, eps);
    vertex_ids = raw.vertex_ids;
  }

  std::sort(vertex_ids.begin(), vertex_ids.end(), [&](int a, int b) { return lex_less(points[a], points[b]); });
  std::unordered_map<int, int> remap;
  for (int i = 0; i < static_cast<int>(vertex_ids.size()); ++i) {
    remap[vertex_ids[i]] = i;
    h.vertices.push_back(points[vertex_ids[i]]);
    h.local.push_back(local[vertex_ids[i]]);
  }
  if (d >= 2) {
    h.interior = raw.interior;
    for (std::size_t s = 0; s < raw.simplices.size(); ++s) {
      HullFacet f;
      for (int id : raw.simplices[s]) f.vertices.push_back(remap.at(id));
      f.normal = raw.normals[s];
      f.offset = raw.offsets[s];
      h.facets.push_back(std::move(f));
    }
  } else {
    h.interior = Vec::Zero(d);
    for (const auto& y : h.local) h.interior += y;
    if (!h.local.empty()) h.interior /= static_cast<double>(h.local.size());
  }
  return h;
}

}  // namespace convexiq
