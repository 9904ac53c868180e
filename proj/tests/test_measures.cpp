#include "support.hpp"

#include <convexiq/constants.hpp>
#include <convexiq/measures.hpp>
#include <convexiq/symmetry.hpp>

#include <doctest.h>

#include <numbers>

using namespace convexiq;
using convexiq::test::rel_close;
namespace oracle = convexiq::test::oracle;

namespace {

const double kV1Cross3Closed = 12.0 * std::numbers::sqrt2 * std::acos(1.0 / 3.0) / (2.0 * std::numbers::pi);

PointList cube_vertices(int n, double side = 2.0) {
  PointList pts;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = (mask >> i) & 1u ? side / 2 : -side / 2;
    pts.push_back(v);
  }
  return pts;
}

}  // namespace

TEST_CASE("constants") {
  CHECK(kappa(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(kappa(1) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(kappa(2) == doctest::Approx(std::numbers::pi).epsilon(1e-12));
  CHECK(kappa(3) == doctest::Approx(4.0 * std::numbers::pi / 3.0).epsilon(1e-12));
  CHECK(sphere_area(3) == doctest::Approx(4.0 * std::numbers::pi).epsilon(1e-12));
  CHECK(binomial(6, 2) == 15.0);
  CHECK(c_ni(3, 1) == doctest::Approx(kappa(2) / 3.0));
  CHECK(ball_intrinsic_volume(3, 1, 1.0) == doctest::Approx(4.0));
  CHECK(ball_intrinsic_volume(3, 2, 2.0) == doctest::Approx(8.0 * std::numbers::pi));
  CHECK(ball_intrinsic_volume(2, 2, 1.0) == doctest::Approx(std::numbers::pi));
}

TEST_CASE("volume") {
  CHECK(volume(Named(NamedId::Cube, 3).expand()) == doctest::Approx(8.0));
  double fact = 1.0;
  for (int n = 2; n <= 6; ++n) {
    fact *= n;
    CHECK(volume(Named(NamedId::Cross, n).expand()) == doctest::Approx(std::pow(2.0, n) / fact).epsilon(1e-12));
  }
  CHECK(volume(test::poly3()) == doctest::Approx(oracle::kPoly3Volume).epsilon(1e-12));
  CHECK(volume(test::poly4()) == doctest::Approx(oracle::kPoly4Volume).epsilon(1e-12));
  CHECK(volume(VPolytope::from_points({unit_vec(3, 0), unit_vec(3, 1), zero_vec(3)})) == 0.0);
}

TEST_CASE("volume agrees with Monte Carlo") {
  const auto p = test::poly3();
  const Hull& h = p.hull();
  Vec lo = p.vertices()[0], hi = p.vertices()[0];
  for (const auto& v : p.vertices()) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const int samples = 1000000;
  int hits = 0;
  for (int k = 0; k < samples; ++k) {
    Vec x(3);
    for (int i = 0; i < 3; ++i) x(i) = lo(i) + (hi(i) - lo(i)) * uni(rng);
    const Vec y = h.to_local(x);
    bool in = true;
    for (const auto& f : h.facets) {
      if (f.normal.dot(y) > f.offset) {
        in = false;
        break;
      }
    }
    hits += in ? 1 : 0;
  }
  const double box = (hi - lo).prod();
  const double frac = static_cast<double>(hits) / samples;
  const double estimate = box * frac;
  const double se = box * std::sqrt(frac * (1.0 - frac) / samples);
  CHECK(std::abs(estimate - volume(p)) <= 3.0 * se);
}

TEST_CASE("surface area and V_{n-1}") {
  CHECK(surface_area(Named(NamedId::Cross, 3).expand()) == doctest::Approx(4.0 * std::sqrt(3.0)).epsilon(1e-12));
  CHECK(v_top(Named(NamedId::Cross, 3).expand()) == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-12));
  CHECK(surface_area(Named(NamedId::Cube, 3).expand()) == doctest::Approx(24.0));
  CHECK(v_top(Named(NamedId::Cube, 3).expand()) == doctest::Approx(12.0));
  CHECK(surface_area(test::poly3()) == doctest::Approx(oracle::kPoly3Surface).epsilon(1e-12));

  // square of side sqrt 2 lying in e_3^perp
  const double s = std::numbers::sqrt2 / 2;
  const auto square = VPolytope::from_points(
      {make_vec({s, s, 0}), make_vec({-s, s, 0}), make_vec({s, -s, 0}), make_vec({-s, -s, 0})});
  CHECK(v_top(square) == doctest::Approx(2.0));
  CHECK(intrinsic_volume(square, 2).value == doctest::Approx(2.0));
  CHECK(surface_area(VPolytope::from_points({unit_vec(3, 0), -unit_vec(3, 0)})) == 0.0);
}

TEST_CASE("exact V1 in R^3") {
  CHECK(std::abs(v1_polytope_exact(Named(NamedId::Cross, 3).expand()) - kV1Cross3Closed) <= 1e-12 * kV1Cross3Closed);
  CHECK(kV1Cross3Closed == doctest::Approx(oracle::kV1Cross3).epsilon(1e-14));
  CHECK(v1_polytope_exact(Named(NamedId::Cube, 3).expand()) == doctest::Approx(6.0).epsilon(1e-12));
  const double k2 = v1_polytope_exact(Named(NamedId::K2, 3).expand());
  CHECK(k2 == doctest::Approx(6.0 * std::acos(1.0 / 3.0) / std::sqrt(std::numbers::pi)).epsilon(1e-12));
  CHECK(std::abs(k2 - 4.1669) < 1e-4);
  CHECK(v1_polytope_exact(test::poly3()) == doctest::Approx(oracle::kPoly3V1).epsilon(1e-12));
  CHECK_THROWS_AS(v1_polytope_exact(test::poly4()), Unsupported);
  CHECK_THROWS_AS(v1_polytope_exact(VPolytope::from_points({unit_vec(3, 0), unit_vec(3, 1), zero_vec(3)})),
                  Unsupported);
}

TEST_CASE("quadrature self-calibration") {
  for (int d = 2; d <= 5; ++d) {
    QuadratureSpec q;
    q.resolution = 32;
    const auto r = integrate_sphere(d, q, [](const Eigen::MatrixXd& dirs, Eigen::VectorXd& out) {
      out = Eigen::VectorXd::Ones(dirs.rows());
    });
    CHECK(rel_close(r.value, sphere_area(d), 1e-6));
  }
  // a nonconstant polynomial: integral of x_1^2 over S^{d-1} is |S^{d-1}| / d
  for (int d = 2; d <= 4; ++d) {
    const double v = integrate_sphere_fixed(d, 64, [](const Eigen::MatrixXd& dirs, Eigen::VectorXd& out) {
      out = dirs.col(0).array().square().matrix();
    });
    CHECK(rel_close(v, sphere_area(d) / d, 1e-10));
  }
  QuadratureSpec bad;
  bad.resolution = 8;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  CHECK(effective_resolution(3, 4096, 100) == 4096);
  CHECK(effective_resolution(5, 512, std::size_t{1} << 22) < 512);
}

TEST_CASE("V1 by quadrature") {
  const auto ball = v1_quadrature(Ball(zero_vec(3), 1.0));
  CHECK(ball.value == doctest::Approx(4.0).epsilon(1e-9));
  CHECK_FALSE(ball.exact);

  const auto cross = v1_quadrature(Named(NamedId::Cross, 3));
  CHECK(std::abs(cross.value - kV1Cross3Closed) < 1e-4);

  QuadratureSpec adaptive;
  adaptive.resolution = 32;
  adaptive.target_error = 1e-6;
  const auto a = v1_quadrature(test::poly3(), adaptive);
  CHECK(std::abs(a.value - oracle::kPoly3V1) < 1e-5);
  CHECK(a.error <= 1e-6);

  const auto k1 = v1_quadrature(Named(NamedId::K1, 3));
  CHECK(std::abs(k1.value - 3.8663) < 1e-3);
  CHECK(std::abs(k1.value - oracle::kV1K1) < 1e-5);

  const auto c4 = intrinsic_volume(Named(NamedId::Cross, 4), 1);
  CHECK(std::abs(c4.value - oracle::kV1Cross4) < 1e-4);
  CHECK(std::abs(c4.value - oracle::kV1Cross4) <= std::max(10.0 * c4.error, 1e-6));
}

TEST_CASE("zonotope intrinsic volumes") {
  for (int n = 2; n <= 5; ++n) {
    const auto cube = Named(NamedId::Cube, n).as_zonotope();
    for (int m = 1; m <= n; ++m) {
      CHECK(vm_zonotope(cube, m) == doctest::Approx(binomial(n, m) * std::pow(2.0, m)).epsilon(1e-12));
    }
  }
  CHECK(vm_zonotope(Zonotope(zero_vec(3), {make_vec({1, 2, 2})}), 1) == doctest::Approx(6.0));
  const auto z = test::zono4();
  for (int m = 1; m <= 4; ++m) CHECK(vm_zonotope(z, m) == doctest::Approx(oracle::kZonoV[m]).epsilon(1e-12));
  CHECK(rel_close(vm_zonotope(z, 4), volume(z.to_polytope()), 1e-9));
  CHECK(vm_zonotope(z, 0) == 1.0);
  CHECK_THROWS_AS(vm_zonotope(z, -1), InvalidArgument);
  CHECK_THROWS_AS(vm_zonotope(z, 5), InvalidArgument);

  std::mt19937_64 rng(41);
  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k < 5; ++k) {
      const Zonotope zr(zero_vec(n), test::random_points(n, n + 2, rng));
      CHECK(rel_close(vm_zonotope(zr, n), volume(zr.to_polytope()), 1e-6));
      CHECK(rel_close(vm_zonotope(zr, n - 1), v_top(zr.to_polytope()), 1e-6));
    }
  }
}

TEST_CASE("polytope intrinsic volumes") {
  CHECK(intrinsic_volume(Named(NamedId::Cube, 4), 3).value == doctest::Approx(32.0));
  CHECK(intrinsic_volume(Named(NamedId::Cross, 3), 2).value == doctest::Approx(2.0 * std::sqrt(3.0)));
  CHECK(intrinsic_volume(Named(NamedId::Cross, 3), 1).value == doctest::Approx(kV1Cross3Closed).epsilon(1e-12));
  CHECK(intrinsic_volume(Named(NamedId::Cross, 3), 1).exact);

  const auto p4 = test::poly4();
  CHECK(vm_polytope(p4, 4).value == doctest::Approx(oracle::kPoly4Volume).epsilon(1e-12));
  CHECK(vm_polytope(p4, 3).value == doctest::Approx(oracle::kPoly4V3).epsilon(1e-12));
  CHECK(vm_polytope(p4, 2).value == doctest::Approx(oracle::kPoly4V2).epsilon(1e-10));
  CHECK(vm_polytope(p4, 2).exact);
  CHECK(vm_polytope(p4, 0).value == 1.0);

  const auto v1 = vm_polytope(p4, 1);
  CHECK_FALSE(v1.exact);
  CHECK(v1.error > 0.0);

  // m outside the exact range and not V1 has no path
  std::mt19937_64 rng(43);
  const auto p5 = convex_hull(test::random_points(5, 9, rng));
  CHECK_THROWS_AS(vm_polytope(p5, 2), Unsupported);
  CHECK_THROWS_AS(vm_polytope(p4, 5), InvalidArgument);

  // lower-dimensional polytopes are measured in their own hull
  const auto tri = VPolytope::from_points({zero_vec(4), unit_vec(4, 0), unit_vec(4, 1)});
  CHECK(intrinsic_volume(tri, 2).value == doctest::Approx(0.5));
  CHECK(intrinsic_volume(tri, 1).value == doctest::Approx((2.0 + std::numbers::sqrt2) / 2.0));
  CHECK(intrinsic_volume(tri, 3).value == 0.0);
}

TEST_CASE("balls") {
  CHECK(intrinsic_volume(Ball(zero_vec(3), 2.0), 1).value == doctest::Approx(8.0));
  CHECK(intrinsic_volume(Ball(zero_vec(4), 1.0), 4).value == doctest::Approx(kappa(4)));
  const Ball disk(zero_vec(3), 1.0, Mat::Identity(3, 3).leftCols(2));
  CHECK(intrinsic_volume(disk, 2).value == doctest::Approx(std::numbers::pi));
  CHECK(intrinsic_volume(disk, 1).value == doctest::Approx(std::numbers::pi));
  CHECK(intrinsic_volume(disk, 3).value == 0.0);
}

TEST_CASE("homogeneity") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> lam(0.05, 3.0);
  const Body bodies[] = {test::poly3(), test::poly4(), test::zono4(), Named(NamedId::Cross, 3)};
  for (const auto& b : bodies) {
    const int n = b.ambient_dim();
    for (int m = 2; m <= n; ++m) {
      const double l = lam(rng);
      const double a = intrinsic_volume(scale(b, l), m).value;
      const double c = intrinsic_volume(b, m).value;
      CHECK(rel_close(a, std::pow(l, m) * c, 1e-9));
    }
  }
  const double l = lam(rng);
  CHECK(rel_close(v1_polytope_exact(test::poly3().scaled(l)), l * oracle::kPoly3V1, 1e-9));
}

TEST_CASE("invariance under signed permutations") {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 10; ++k) {
    const auto g = SignedPermutation::random(4, rng);
    const Body img = apply_symmetry(test::zono4(), g);
    for (int m = 1; m <= 4; ++m) {
      CHECK(rel_close(intrinsic_volume(img, m).value, oracle::kZonoV[m], 1e-9));
    }
    const Body p = apply_symmetry(test::poly3(), SignedPermutation::random(3, rng));
    for (int m = 1; m <= 3; ++m) {
      CHECK(rel_close(intrinsic_volume(p, m).value, intrinsic_volume(test::poly3(), m).value, 1e-9));
    }
  }
}

TEST_CASE("monotonicity on nested bodies") {
  std::mt19937_64 rng(59);
  for (int n = 3; n <= 4; ++n) {
    for (int k = 0; k < 10; ++k) {
      auto pts = test::random_points(n, 2 * n + 4, rng);
      const auto outer = convex_hull(pts);
      pts.resize(n + 2);
      const auto inner = convex_hull(pts);
      for (int m = (n == 3 ? 1 : 2); m <= n; ++m) {
        CHECK(intrinsic_volume(inner, m).value <= intrinsic_volume(outer, m).value * (1 + 1e-12));
      }
    }
  }
  // cube inside the circumscribed ball
  for (int m = 1; m <= 3; ++m) {
    CHECK(intrinsic_volume(Named(NamedId::Cube, 3), m).value <=
          intrinsic_volume(Ball(zero_vec(3), std::sqrt(3.0)), m).value);
  }
}

TEST_CASE("flat sets") {
  const auto seg = FlatSet::make(zero_vec(3), {make_vec({1, 1, 1})});
  CHECK(hausdorff_flat(seg) == doctest::Approx(std::sqrt(3.0)));
  for (int i = 1; i <= 3; ++i) CHECK(hausdorff_flat(project_flat(seg, {i})) == doctest::Approx(std::numbers::sqrt2));

  const auto sq = FlatSet::make(zero_vec(3), {unit_vec(3, 0), unit_vec(3, 1)});
  CHECK(hausdorff_flat(sq) == doctest::Approx(1.0));
  CHECK(hausdorff_flat(project_flat(sq, {3})) == doctest::Approx(1.0));
  CHECK(hausdorff_flat(project_flat(sq, {1})) == doctest::Approx(0.0));
  CHECK_THROWS_AS(FlatSet::make(zero_vec(3), {unit_vec(3, 0), 2.0 * unit_vec(3, 0)}), InvalidArgument);
  CHECK_THROWS_AS(FlatSet::make(zero_vec(3), {make_vec({1, 0})}), InvalidArgument);

  std::mt19937_64 rng(61);
  for (int n = 2; n <= 6; ++n) {
    for (int m = 1; m <= n - 1; ++m) {
      for (int k = 0; k < 20; ++k) {
        const auto f = FlatSet::make(test::random_vec(n, rng), test::random_points(n, m, rng));
        const double lhs = std::pow(hausdorff_flat(f), 2);
        double rhs = 0.0;
        for (int i = 1; i <= n; ++i) rhs += std::pow(hausdorff_flat(project_flat(f, {i})), 2);
        CHECK(rel_close(lhs, rhs / (n - m), 1e-9));
      }
    }
  }
}

TEST_CASE("Minkowski integral inequality on a discretized sphere") {
  // (sum_i (int f_i^2)^{1/2}) >= ... direction: ||sum f_i||_2 <= sum ||f_i||_2
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const int d = 3, r = 24;
  for (int trial = 0; trial < 20; ++trial) {
    const Vec a = test::random_vec(d, rng), b = test::random_vec(d, rng);
    const double c = uni(rng);
    const auto norm2 = [&](auto&& fn) {
      return std::sqrt(integrate_sphere_fixed(d, r, [&](const Eigen::MatrixXd& dirs, Eigen::VectorXd& out) {
        out.resize(dirs.rows());
        for (Eigen::Index k = 0; k < dirs.rows(); ++k) {
          const double v = fn(Eigen::Vector3d(dirs.row(k).transpose()));
          out(k) = v * v;
        }
      }));
    };
    const auto f1 = [&](const Eigen::Vector3d& u) { return std::abs(a.dot(u)); };
    const auto f2 = [&](const Eigen::Vector3d& u) { return std::max(0.0, b.dot(u)) + c; };
    const double lhs = norm2([&](const Eigen::Vector3d& u) { return f1(u) + f2(u); });
    CHECK(lhs <= norm2(f1) + norm2(f2) + 1e-12);
  }
}

TEST_CASE("cube built from points matches the named cube") {
  const auto c = convex_hull(cube_vertices(4, 1.0));
  CHECK(volume(c) == doctest::Approx(1.0));
  CHECK(v_top(c) == doctest::Approx(4.0));
  CHECK(vm_polytope(c, 2).value == doctest::Approx(6.0));
}
