#pragma once

#include "convexiq/body.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace convexiq {

/// Families:
///   random-polytope  hull of `size` Gaussian points
///   random-zonotope  `size` Gaussian generators about o
///   unconditional    hull of the sign orbits of `size` random points
///   g-symmetric      hull of the full hyperoctahedral orbits (n <= 4)
///   named            `named_id` (cross, cube, K1, K2)
struct CorpusSpec {
  std::string family = "random-polytope";
  int count = 1;
  int n = 3;
  std::uint64_t seed = 0;
  int size = 8;
  double scale = 1.0;
  std::string named_id = "cross";

  void validate() const;
};

std::vector<Body> generate_corpus(const CorpusSpec& spec);

/// File stem for body `index` of the corpus, e.g. "random-zonotope-n4-0003".
std::string corpus_name(const CorpusSpec& spec, int index);

// Single draws, shared with the search harness.
VPolytope random_polytope(int n, int points, double scale, std::mt19937_64& rng);
Zonotope random_zonotope(int n, int generators, double scale, std::mt19937_64& rng);
VPolytope sign_orbit_hull(const PointList& base);
VPolytope cube_orbit_hull(const PointList& base);

}  // namespace convexiq
