#include "convexiq/quadrature.hpp"

#include "convexiq/parallel.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace convexiq {

void QuadratureSpec::validate() const {
  if (resolution < 16) throw InvalidArgument("QuadratureSpec: resolution must be at least 16");
  if (max_resolution < resolution) throw InvalidArgument("QuadratureSpec: max_resolution below resolution");
  if (target_error && !(*target_error > 0.0)) throw InvalidArgument("QuadratureSpec: target_error must be positive");
  if (max_points < 64) throw InvalidArgument("QuadratureSpec: max_points too small");
}

void gauss_legendre(int count, double a, double b, std::vector<double>& nodes, std::vector<double>& weights) {
  // GSL tables are cheap to build but not free at n = 4096; keep them around.
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)>>
      cache;
  gsl_integration_glfixed_table* table = nullptr;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(count);
    if (it == cache.end()) {
      it = cache.emplace(count, std::unique_ptr<gsl_integration_glfixed_table,
                                                decltype(&gsl_integration_glfixed_table_free)>(
                                    gsl_integration_glfixed_table_alloc(count), gsl_integration_glfixed_table_free))
               .first;
    }
    table = it->second.get();
  }
  nodes.resize(count);
  weights.resize(count);
  for (int i = 0; i < count; ++i) {
    gsl_integration_glfixed_point(a, b, static_cast<size_t>(i), &nodes[i], &weights[i], table);
  }
}

int effective_resolution(int d, int requested, std::size_t max_points) {
  int r = requested;
  if (d <= 3) return r;
  auto points = [d](int res) { return 2.0 * std::pow(static_cast<double>(res), d - 1); };
  while (r > 4 && points(r) > static_cast<double>(max_points)) --r;
  return r;
}

namespace {

struct PolarLevel {
  std::vector<double> cos, sin, weight;
};

}  // namespace

double integrate_sphere_fixed(int d, int resolution, const SphereBatchFn& f) {
  if (d < 2) throw InvalidArgument("integrate_sphere: dimension must be at least 2");
  const int r = resolution;
  const int azimuth = 2 * r;
  const double dtheta = std::numbers::pi / r;
  std::vector<double> ct(azimuth), st(azimuth);
  for (int k = 0; k < azimuth; ++k) {
    ct[k] = std::cos(k * dtheta);
    st[k] = std::sin(k * dtheta);
  }

  if (d == 2) {
    Eigen::MatrixXd dirs(azimuth, 2);
    for (int k = 0; k < azimuth; ++k) dirs.row(k) << ct[k], st[k];
    Eigen::VectorXd values(azimuth);
    f(dirs, values);
    return values.sum() * dtheta;
  }

  // polar angle k (0-based) carries Jacobian sin^(d-2-k)
  const int polar = d - 2;
  std::vector<double> nodes, weights;
  gauss_legendre(r, 0.0, std::numbers::pi, nodes, weights);
  std::vector<PolarLevel> levels(polar);
  for (int k = 0; k < polar; ++k) {
    auto& lv = levels[k];
    lv.cos.resize(r);
    lv.sin.resize(r);
    lv.weight.resize(r);
    for (int i = 0; i < r; ++i) {
      lv.cos[i] = std::cos(nodes[i]);
      lv.sin[i] = std::sin(nodes[i]);
      lv.weight[i] = weights[i] * std::pow(lv.sin[i], d - 2 - k);
    }
  }

  // One chunk per node of the outermost polar angle.
  std::size_t inner = static_cast<std::size_t>(azimuth);
  for (int k = 1; k < polar; ++k) inner *= static_cast<std::size_t>(r);
  std::vector<double> partial(r, 0.0);
  parallel_for(static_cast<std::size_t>(r), [&](std::size_t outer) {
    Eigen::MatrixXd dirs(static_cast<Eigen::Index>(inner), d);
    Eigen::VectorXd wts(static_cast<Eigen::Index>(inner));
    std::vector<int> idx(polar, 0);
    idx[0] = static_cast<int>(outer);
    Eigen::Index row = 0;
    while (true) {
      double prefix = 1.0;
      double weight = dtheta;
      for (int k = 0; k < polar; ++k) {
        dirs(row, k) = prefix * levels[k].cos[idx[k]];
        prefix *= levels[k].sin[idx[k]];
        weight *= levels[k].weight[idx[k]];
      }
      for (int a = 0; a < azimuth; ++a, ++row) {
        if (a > 0) dirs.row(row).head(polar) = dirs.row(row - a).head(polar);
        dirs(row, d - 2) = prefix * ct[a];
        dirs(row, d - 1) = prefix * st[a];
        wts(row) = weight;
      }
      int k = polar - 1;
      while (k >= 1 && ++idx[k] == r) idx[k--] = 0;
      if (k < 1) break;
    }
    Eigen::VectorXd values(static_cast<Eigen::Index>(inner));
    f(dirs, values);
    partial[outer] = wts.dot(values);
  });
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

QuadratureResult integrate_sphere(int d, const QuadratureSpec& spec, const SphereBatchFn& f) {
  spec.validate();
  int r = effective_resolution(d, spec.resolution, spec.max_points);
  QuadratureResult out;
  double coarse = integrate_sphere_fixed(d, std::max(2, r / 2), f);
  double fine = integrate_sphere_fixed(d, r, f);
  if (spec.target_error) {
    while (std::abs(fine - coarse) > *spec.target_error && 2 * r <= spec.max_resolution &&
           effective_resolution(d, 2 * r, spec.max_points) == 2 * r) {
      r *= 2;
      coarse = fine;
      fine = integrate_sphere_fixed(d, r, f);
    }
  }
  out.value = fine;
  out.error = std::abs(fine - coarse);
  out.resolution = r;
  out.points = static_cast<std::size_t>(2.0 * std::pow(static_cast<double>(r), d - 1));
  return out;
}

}  // namespace convexiq
