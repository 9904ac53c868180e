#pragma once

#include "convexiq/body.hpp"
#include "convexiq/inequalities.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace convexiq {

/// Problems: cg33 (cg_upper), prob4 (prob4_family), prob5 (prob5_family),
/// heron_n3, eq11_midrange (reverse_cs with 2 <= m <= n-3).
/// Families: zonotope, unconditional-polytope, cross-perturbation, random-polytope.
struct SearchConfig {
  std::string problem = "cg33";
  int n = 3;
  int m = 1;
  std::string family = "zonotope";
  int family_size = 6;  // generators or base points
  int iterations = 1000;
  int restarts = 4;
  double scale = 0.1;  // proposal standard deviation
  std::uint64_t seed = 42;
  std::optional<double> c;  // constant for prob4/prob5
  double tolerance = 1e-9;
  int quad_resolution = 128;

  /// Throws InvalidArgument on unknown problem or family, bad sizes, or a
  /// problem/family pair that makes no sense (prob4 on zonotopes).
  void validate() const;
  [[nodiscard]] std::string inequality_id() const;
  [[nodiscard]] IneqParams params() const;
};

struct SlackQuantiles {
  int block = 0;  // block index; blocks hold up to 1000 iterations
  double min = 0.0, q25 = 0.0, median = 0.0, q75 = 0.0, max = 0.0;
};

struct SearchResult {
  double best_slack = 0.0;
  std::optional<Body> witness;
  std::optional<IneqReport> best_report;
  std::vector<SlackQuantiles> trajectory;
  std::uint64_t seed = 0;
  std::string config_hash;
  /// best slack < -10 * tolerance, and every measure exact.
  bool violation = false;
};

/// Per-restart stream seed: splitmix64 of (master seed, restart index).
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index);

/// Random-restart hill descent on the oriented slack. Bodies are rescaled to
/// unit V_m before every evaluation. Deterministic for a fixed config.
SearchResult search(const SearchConfig& config);
SearchResult search(const SearchConfig& config, MeasureOracle& oracle);

}  // namespace convexiq
