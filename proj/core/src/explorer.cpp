#include "convexiq/explorer.hpp"

#include "convexiq/coord_ops.hpp"
#include "convexiq/inequalities.hpp"
#include "convexiq/quadrature.hpp"
#include "convexiq/symmetry.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <cmath>
#include <memory>
#include <numbers>
#include <random>

namespace convexiq {

using std::numbers::pi;

Measure functional_F(const Body& body, const QuadratureSpec& q) {
  const int n = body.ambient_dim();
  const Measure top = intrinsic_volume(body, 1, q);
  double denom = 0.0, denom_err = 0.0;
  bool exact = top.exact;
  for (int i = 1; i <= n; ++i) {
    const Measure m = intrinsic_volume(project(body, CoordinateIndex{i}), 1, q);
    denom += m.value;
    denom_err += m.error;
    exact = exact && m.exact;
  }
  if (denom <= 0.0) throw UndefinedValue("F(K): projections have zero mean width");
  const double value = top.value / denom;
  return {value, top.error / denom + value * denom_err / denom, exact};
}

double p_function(double t, int n) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidArgument("p(t) needs finite t >= 0");
  if (n < 1) throw InvalidArgument("p(t) needs n >= 1");
  if (t == 0.0) return 0.0;
  gsl_function f;
  auto integrand = [](double phi, void* params) { return std::pow(std::sin(phi), *static_cast<int*>(params) - 1); };
  f.function = integrand;
  f.params = &n;
  std::unique_ptr<gsl_integration_workspace, decltype(&gsl_integration_workspace_free)> ws(
      gsl_integration_workspace_alloc(256), gsl_integration_workspace_free);
  double result = 0.0, err = 0.0;
  gsl_error_handler_t* old = gsl_set_error_handler_off();
  const int status =
      gsl_integration_qags(&f, pi / 2 - std::atan(t), pi / 2, 0.0, 1e-13, 256, ws.get(), &result, &err);
  gsl_set_error_handler(old);
  if (status != GSL_SUCCESS && status != GSL_EROUND) throw UndefinedValue(gsl_strerror(status));
  return result;
}

double j_function_n3(const Body& body, double x2) {
  if (body.ambient_dim() != 3) throw InvalidArgument("J_K is implemented for n = 3 only");
  if (!(x2 >= 0.0 && x2 <= 1.0 / std::sqrt(2.0) + 1e-15)) throw InvalidArgument("x2 must lie in [0, 1/sqrt 2]");
  const double x1 = std::sqrt(1.0 - x2 * x2);
  return support(body, make_vec({x1, x2, 0.0})) / x1;
}

bool has_cube_symmetry(const Body& body, int pairs, std::uint64_t seed, double tol) {
  const int n = body.ambient_dim();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  for (int k = 0; k < pairs; ++k) {
    const auto g = SignedPermutation::random(n, rng);
    Vec u(n);
    for (int i = 0; i < n; ++i) u(i) = gauss(rng);
    const double a = support(body, u), b = support(body, g.apply(u));
    if (std::abs(a - b) > tol * std::max({1.0, std::abs(a), std::abs(b)})) return false;
  }
  return true;
}

std::vector<JSample> j_curve(const Body& body, int samples) {
  if (samples < 2) throw InvalidArgument("j_curve needs at least 2 samples");
  if (!has_cube_symmetry(body)) throw InvalidArgument("J_K needs a body with the symmetries of the cube");
  std::vector<JSample> out;
  const double hi = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < samples; ++k) {
    const double x2 = hi * k / (samples - 1);
    out.push_back({x2, j_function_n3(body, x2)});
  }
  return out;
}

// --- K1 ----------------------------------------------------------------------

namespace {

// h_K1 on the region pi/4 <= theta <= pi/2, 0 <= phi <= arctan(csc theta),
// times the area element sin(phi); integrated over the region at `nodes` GL
// points per axis.
double k1_region_2d(int nodes) {
  std::vector<double> th, tw, ph, pw;
  gauss_legendre(nodes, pi / 4, pi / 2, th, tw);
  double total = 0.0;
  for (int a = 0; a < nodes; ++a) {
    const double s = std::sin(th[a]);
    gauss_legendre(nodes, 0.0, std::atan(1.0 / s), ph, pw);
    double inner = 0.0;
    for (int b = 0; b < nodes; ++b) {
      const double sp = std::sin(ph[b]), cp = std::cos(ph[b]);
      inner += pw[b] * std::sqrt(s * s * sp * sp + cp * cp) * sp;
    }
    total += tw[a] * inner;
  }
  return 48.0 * total / pi;
}

double k1_inner_closed(double theta) {
  const double s = std::sin(theta), c = std::cos(theta), s2 = s * s;
  const double log_arg = (std::sqrt(2.0) + c) * s / ((c + 1.0) * std::sqrt(1.0 + s2));
  return 0.5 - s2 / (std::sqrt(2.0) * (1.0 + s2)) - s2 / (2.0 * c) * std::log(log_arg);
}

double k1_region_1d(int nodes) {
  std::vector<double> th, tw;
  gauss_legendre(nodes, pi / 4, pi / 2, th, tw);
  double total = 0.0;
  for (int a = 0; a < nodes; ++a) total += tw[a] * k1_inner_closed(th[a]);
  return 48.0 * total / pi;
}

}  // namespace

K1Repro reproduce_K1(const QuadratureSpec& q) {
  K1Repro r{};
  constexpr int kNodes = 96;
  r.v1_sphere = k1_region_2d(kNodes);
  r.v1_sphere_err = std::abs(r.v1_sphere - k1_region_2d(kNodes / 2));
  r.v1_inner = k1_region_1d(kNodes);
  r.v1_inner_err = std::abs(r.v1_inner - k1_region_1d(kNodes / 2));
  const Measure generic = v1_quadrature(Named(NamedId::K1, 3), q);
  r.v1_generic = generic.value;
  r.v1_generic_err = generic.error;
  r.v1_k2 = v1_polytope_exact(Named(NamedId::K2, 3).expand());
  r.v1_k2_closed = 6.0 * std::acos(1.0 / 3.0) / std::sqrt(pi);
  return r;
}

Eq1Repro reproduce_eq1_falsification() {
  Eq1Repro r{};
  const Named cross(NamedId::Cross, 3);
  r.v1_cross = v1_polytope_exact(cross.expand());
  double sum_sq = 0.0;
  for (int i = 1; i <= 3; ++i) {
    const double v = intrinsic_volume(project(cross, CoordinateIndex{i}), 1).value;
    r.v1_projection = v;
    sum_sq += v * v;
  }
  r.ratio = r.v1_cross * r.v1_cross / sum_sq;
  r.mth_constant = mth_lower_constant(3, 1);
  return r;
}

bool is_repro_target(const std::string& target) {
  return target == "k1" || target == "eq1-c3" || target == "c0" || target == "meyer-octahedron" || target == "all";
}

std::vector<ReproRow> repro_rows(const std::string& target, const QuadratureSpec& q) {
  if (!is_repro_target(target)) throw InvalidArgument("unknown repro target '" + target + "'");
  std::vector<ReproRow> rows;
  auto row = [&](std::string t, std::string what, double expected, double computed, double tol) {
    rows.push_back({std::move(t), std::move(what), expected, computed, tol, std::abs(computed - expected) <= tol});
  };
  const bool all = target == "all";
  if (all || target == "k1") {
    const auto k = reproduce_K1(q);
    row("k1", "V1(K1) fundamental-region quadrature", 3.8663, k.v1_sphere, 1e-3);
    row("k1", "V1(K1) inner-integral quadrature", 3.8663, k.v1_inner, 1e-3);
    row("k1", "V1(K1) inner-integral vs region quadrature", k.v1_sphere, k.v1_inner, 1e-5);
    row("k1", "V1(K1) full-sphere quadrature", 3.8663, k.v1_generic, 1e-3);
    row("k1", "V1(K2)", 4.1669, k.v1_k2, 1e-4);
    row("k1", "V1(K2) - V1(K1) > 0", 1.0, k.v1_k2 > k.v1_sphere ? 1.0 : 0.0, 0.0);
  }
  if (all || target == "eq1-c3") {
    const auto e = reproduce_eq1_falsification();
    row("eq1-c3", "V1(C3)^2 / sum V1(C3|e_i)^2", 0.46058, e.ratio, 1e-4);
    row("eq1-c3", "ratio < 1/2", 1.0, e.ratio < 0.5 ? 1.0 : 0.0, 0.0);
    row("eq1-c3", "(1/pi)(Gamma(1)/Gamma(3/2))^2", 0.40528, e.mth_constant, 1e-5);
    row("eq1-c3", "4/pi^2 < ratio", 1.0, e.mth_constant < e.ratio ? 1.0 : 0.0, 0.0);
  }
  if (all || target == "c0") {
    row("c0", "c0(3) = arccos(1/3)/pi", std::acos(1.0 / 3.0) / pi, c0_constant(3, q).value, 1e-12);
    const Measure c4 = c0_constant(4, q);
    // V1(C^4) = 3.671528572967415 from an independent high-precision integration.
    row("c0", "c0(4) by quadrature", 3.671528572967415 / (4.0 * 3.324758543877433), c4.value,
        std::max(1e-3, 10.0 * c4.error));
  }
  if (all || target == "meyer-octahedron") {
    const auto rep = evaluate("meyer", Named(NamedId::Cross, 3));
    row("meyer-octahedron", "V(C3)^2", 16.0 / 9.0, rep.lhs, 1e-12);
    row("meyer-octahedron", "(2/9) prod V2(C3 cap e_i)", 16.0 / 9.0, rep.rhs, 1e-12);
  }
  return rows;
}

ChebyshevResult chebyshev_check(const std::vector<double>& f, const std::vector<double>& g) {
  ChebyshevResult r;
  if (f.size() != g.size() || f.empty()) {
    r.reason = "f and g must be nonempty and the same length";
    return r;
  }
  double mean = 0.0, scale = 0.0;
  for (double v : f) {
    mean += v;
    scale = std::max(scale, std::abs(v));
  }
  mean /= static_cast<double>(f.size());
  if (std::abs(mean) > 1e-12 * std::max(1.0, scale)) {
    r.reason = "f does not have zero mean";
    return r;
  }
  int changes = 0;
  int last = 0;
  for (double v : f) {
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last == 1 && s == -1) {
      r.reason = "f changes sign from positive to negative";
      return r;
    }
    if (last == -1 && s == 1) ++changes;
    last = s;
  }
  if (changes > 1) {
    r.reason = "f changes sign more than once";
    return r;
  }
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g[k] < 0.0 || (k > 0 && g[k] < g[k - 1])) {
      r.reason = "g is not nonnegative and nondecreasing";
      return r;
    }
  }
  r.applicable = true;
  for (std::size_t k = 0; k < f.size(); ++k) r.sum += f[k] * g[k];
  // rounding in a zero-mean f can leave a tiny negative residue when g is flat
  double gmax = 0.0;
  for (double v : g) gmax = std::max(gmax, v);
  r.holds = r.sum >= -1e-12 * std::max(1.0, scale * gmax * static_cast<double>(f.size()));
  return r;
}

}  // namespace convexiq
