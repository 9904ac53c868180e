// Randomized property battery over generated corpora.
#include "support.hpp"

#include <convexiq/coord_ops.hpp>
#include <convexiq/corpus.hpp>
#include <convexiq/explorer.hpp>
#include <convexiq/inequalities.hpp>
#include <convexiq/symmetry.hpp>

#include <doctest.h>

using namespace convexiq;
using convexiq::test::rel_close;

namespace {

std::vector<Body> mixed_corpus(int n, int count, std::uint64_t seed) {
  CorpusSpec p;
  p.family = "random-polytope";
  p.n = n;
  p.count = count;
  p.seed = seed;
  p.size = n + 5;
  CorpusSpec z = p;
  z.family = "random-zonotope";
  z.size = n + 1;
  z.seed = seed + 1;
  auto out = generate_corpus(p);
  for (auto& b : generate_corpus(z)) out.push_back(std::move(b));
  return out;
}

// Orders with an exact path for every body of the corpus.
std::vector<int> exact_orders(int n) {
  if (n == 3) return {1, 2, 3};
  return {n - 2, n - 1, n};
}

}  // namespace

TEST_CASE("support: homogeneity and Minkowski additivity over corpora") {
  std::mt19937_64 rng(149);
  for (int n = 2; n <= 6; ++n) {
    const auto bodies = mixed_corpus(n, 5, 10 + n);
    for (const auto& b : bodies) {
      for (int k = 0; k < 10; ++k) {
        const Vec u = test::random_vec(n, rng);
        const double l = 3.0 * std::uniform_real_distribution<double>(0.01, 1.0)(rng);
        CHECK(rel_close(support(b, l * u), l * support(b, u), 1e-12, 1e-14));
      }
    }
    const auto s = minkowski_sum(bodies[0].to_polytope(), bodies[1].to_polytope());
    for (int k = 0; k < 100; ++k) {
      const Vec u = test::random_vec(n, rng);
      CHECK(rel_close(s.support(u), support(bodies[0], u) + support(bodies[1], u), 1e-9, 1e-12));
    }
  }
}

TEST_CASE("intrinsic volumes: symmetry invariance and homogeneity") {
  std::mt19937_64 rng(151);
  for (int n = 3; n <= 5; ++n) {
    for (const auto& b : mixed_corpus(n, 3, 20 + n)) {
      const auto g = SignedPermutation::random(n, rng);
      const Body img = apply_symmetry(b, g);
      const double l = std::uniform_real_distribution<double>(0.05, 3.0)(rng);
      const Body big = scale(b, l);
      for (int m : exact_orders(n)) {
        const double v = intrinsic_volume(b, m).value;
        CHECK(rel_close(intrinsic_volume(img, m).value, v, 1e-9));
        CHECK(rel_close(intrinsic_volume(big, m).value, std::pow(l, m) * v, 1e-9));
      }
    }
  }
}

TEST_CASE("projections: V_m does not grow, zonotopes stay compatible") {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& b : mixed_corpus(n, 4, 30 + n)) {
      for (int i = 1; i <= n; ++i) {
        const Body p = project(b, {i});
        for (int m : exact_orders(n)) {
          if (m == n) continue;
          if (n >= 4 && m < n - 2) continue;
          CHECK(intrinsic_volume(p, m).value <= intrinsic_volume(b, m).value * (1 + 1e-12));
        }
        if (const auto* z = b.get_if<Zonotope>()) {
          const auto* pz = p.get_if<Zonotope>();
          REQUIRE(pz != nullptr);
          CHECK(rel_close(vm_zonotope(*pz, n - 1), intrinsic_volume(p.to_polytope(), n - 1).value, 1e-9));
        }
      }
    }
  }
}

TEST_CASE("sections sit inside projections") {
  for (int n = 3; n <= 4; ++n) {
    for (const auto& b : mixed_corpus(n, 4, 40 + n)) {
      const auto poly = b.to_polytope();
      for (int i = 1; i <= n; ++i) {
        const auto s = section(poly, {i});
        const Body p = project(poly, {i});
        CHECK(intrinsic_volume(s, n - 1).value <= intrinsic_volume(p, n - 1).value + 1e-12);
        CHECK(intrinsic_volume(s, n - 2).value <= intrinsic_volume(p, n - 2).value + 1e-12);
      }
    }
  }
}

TEST_CASE("proven inequalities hold on random bodies") {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& b : mixed_corpus(n, 3, 50 + n)) {
      DefaultOracle oracle;
      BodyProfile prof(b, oracle);
      auto check = [&](const std::string& id, IneqParams p) {
        const auto r = evaluate(id, prof, p);
        CHECK_MESSAGE(!r.proven_violation(), id << " slack " << r.oriented_slack);
      };
      check("bm_upper", {});
      check("square_lower", {});
      check("loomis_whitney", {});
      IneqParams m1;
      m1.m = n - 1;
      check("cg_upper", m1);
      check("trivmax", m1);
      m1.m = n - 2;
      check("reverse_cs", m1);
      m1.p = 1.5;
      check("easy_bounds", m1);
    }
  }
}

TEST_CASE("F is a similarity invariant bounded below by the cross-polytope value") {
  std::mt19937_64 rng(157);
  const double c0 = c0_constant(3).value;
  CorpusSpec spec;
  spec.family = "random-polytope";
  spec.count = 40;
  spec.seed = 163;
  for (const auto& b : generate_corpus(spec)) {
    const double f = functional_F(b).value;
    CHECK(f >= c0 - 1e-12);
    CHECK(f <= 0.5 + 1e-12);
    CHECK(rel_close(functional_F(apply_symmetry(b, SignedPermutation::random(3, rng))).value, f, 1e-9));
    CHECK(rel_close(functional_F(b.to_polytope().translated(test::random_vec(3, rng))).value, f, 1e-9));
  }
}
