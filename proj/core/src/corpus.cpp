#include "convexiq/corpus.hpp"

#include "convexiq/symmetry.hpp"

#include <cstdio>

namespace convexiq {

void CorpusSpec::validate() const {
  check_dimension(n);
  if (count < 1) throw InvalidArgument("corpus count must be >= 1");
  if (!(scale > 0.0)) throw InvalidArgument("corpus scale must be positive");
  if (family == "random-polytope") {
    if (size < n + 1) throw InvalidArgument("random-polytope needs at least n+1 points");
  } else if (family == "random-zonotope" || family == "unconditional") {
    if (size < 1) throw InvalidArgument(family + " needs size >= 1");
  } else if (family == "g-symmetric") {
    if (size < 1) throw InvalidArgument("g-symmetric needs size >= 1");
    if (n > 4) throw InvalidArgument("g-symmetric orbits are limited to n <= 4");
  } else if (family == "named") {
    Named(named_id_from_string(named_id), n);
  } else {
    throw InvalidArgument("unknown corpus family '" + family + "'");
  }
}

namespace {

Vec gaussian(int n, double scale, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = scale * g(rng);
  return v;
}

}  // namespace

VPolytope random_polytope(int n, int points, double scale, std::mt19937_64& rng) {
  PointList pts;
  for (int k = 0; k < points; ++k) pts.push_back(gaussian(n, scale, rng));
  return VPolytope::from_points(pts);
}

Zonotope random_zonotope(int n, int generators, double scale, std::mt19937_64& rng) {
  PointList gens;
  for (int k = 0; k < generators; ++k) gens.push_back(gaussian(n, scale, rng));
  return {zero_vec(n), gens};
}

VPolytope sign_orbit_hull(const PointList& base) {
  if (base.empty()) throw InvalidArgument("sign_orbit_hull needs points");
  const int n = static_cast<int>(base.front().size());
  PointList pts;
  for (const auto& p : base) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Vec q = p;
      for (int i = 0; i < n; ++i) {
        if ((mask >> i) & 1u) q(i) = -q(i);
      }
      pts.push_back(q);
    }
  }
  return VPolytope::from_points(pts);
}

VPolytope cube_orbit_hull(const PointList& base) {
  if (base.empty()) throw InvalidArgument("cube_orbit_hull needs points");
  const int n = static_cast<int>(base.front().size());
  PointList pts;
  for_each_signed_permutation(n, [&](const SignedPermutation& g) {
    for (const auto& p : base) pts.push_back(g.apply(p));
  });
  return VPolytope::from_points(pts);
}

std::vector<Body> generate_corpus(const CorpusSpec& spec) {
  spec.validate();
  std::vector<Body> out;
  std::mt19937_64 rng(spec.seed);
  for (int k = 0; k < spec.count; ++k) {
    if (spec.family == "random-polytope") {
      out.emplace_back(random_polytope(spec.n, spec.size, spec.scale, rng));
    } else if (spec.family == "random-zonotope") {
      out.emplace_back(random_zonotope(spec.n, spec.size, spec.scale, rng));
    } else if (spec.family == "named") {
      out.emplace_back(Named(named_id_from_string(spec.named_id), spec.n));
    } else {
      PointList base;
      for (int j = 0; j < spec.size; ++j) base.push_back(gaussian(spec.n, spec.scale, rng));
      out.emplace_back(spec.family == "unconditional" ? sign_orbit_hull(base) : cube_orbit_hull(base));
    }
  }
  return out;
}

std::string corpus_name(const CorpusSpec& spec, int index) {
  std::string stem = spec.family == "named" ? spec.named_id : spec.family;
  char buf[32];
  std::snprintf(buf, sizeof buf, "-n%d-%04d", spec.n, index);
  return stem + buf;
}

}  // namespace convexiq
