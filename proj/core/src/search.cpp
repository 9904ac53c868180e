#include "convexiq/search.hpp"

#include "convexiq/corpus.hpp"
#include "convexiq/io.hpp"
#include "convexiq/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace convexiq {

namespace {

const std::vector<std::string> kProblems = {"cg33", "prob4", "prob5", "heron_n3", "eq11_midrange"};
const std::vector<std::string> kFamilies = {"zonotope", "unconditional-polytope", "cross-perturbation",
                                            "random-polytope"};

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

void SearchConfig::validate() const {
  if (!contains(kProblems, problem)) throw InvalidArgument("unknown search problem '" + problem + "'");
  if (!contains(kFamilies, family)) throw InvalidArgument("unknown body family '" + family + "'");
  check_dimension(n);
  if (iterations < 1) throw InvalidArgument("iterations must be >= 1");
  if (restarts < 1 || restarts > iterations) throw InvalidArgument("restarts must lie in 1..iterations");
  if (!(scale > 0.0) || !std::isfinite(scale)) throw InvalidArgument("proposal scale must be positive");
  if (!(tolerance > 0.0)) throw InvalidArgument("tolerance must be positive");
  if (quad_resolution < 16) throw InvalidArgument("quad_resolution must be >= 16");
  if (family == "random-polytope" && family_size < n + 1) {
    throw InvalidArgument("random-polytope needs family_size >= n+1");
  }
  if (family_size < 1) throw InvalidArgument("family_size must be >= 1");
  if (c && problem != "prob4" && problem != "prob5") throw InvalidArgument("c only applies to prob4 and prob5");
  auto need_m = [&](int lo, int hi) {
    if (m < lo || m > hi) {
      throw InvalidArgument(problem + " needs " + std::to_string(lo) + " <= m <= " + std::to_string(hi));
    }
  };
  if (problem == "cg33") need_m(1, n - 1);
  if (problem == "prob4" || problem == "prob5") need_m(1, n - 2);
  if (problem == "eq11_midrange") need_m(2, n - 3);
  if (problem == "heron_n3" && n != 3) throw InvalidArgument("heron_n3 needs n = 3");
  // the zonoid case of this lower bound is already settled
  if (problem == "prob4" && family == "zonotope") throw InvalidArgument("prob4 needs a non-zonotope family");
}

std::string SearchConfig::inequality_id() const {
  if (problem == "cg33") return "cg_upper";
  if (problem == "prob4") return "prob4_family";
  if (problem == "prob5") return "prob5_family";
  if (problem == "heron_n3") return "heron_n3";
  return "reverse_cs";
}

IneqParams SearchConfig::params() const {
  IneqParams p;
  if (problem != "heron_n3") p.m = m;
  if (problem == "prob4" || problem == "prob5") p.c = c;
  return p;
}

std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + (index + 1) * 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

struct Candidate {
  PointList params;
  std::optional<Body> body;
  std::optional<IneqReport> report;
  double slack = 0.0;
};

struct RestartOutcome {
  std::optional<Candidate> best;
  std::vector<double> slacks;  // one per evaluated proposal, in order
};

class Runner {
 public:
  Runner(const SearchConfig& c, MeasureOracle& oracle) : c_(c), oracle_(oracle) {
    opts_.base_tolerance = c.tolerance;
    opts_.quadrature.resolution = c.quad_resolution;
    norm_order_ = c.problem == "prob5" ? c.m + 1 : c.problem == "heron_n3" ? 2 : c.m;
  }

  RestartOutcome run(int restart, int iterations) {
    std::mt19937_64 rng(stream_seed(c_.seed, static_cast<std::uint64_t>(restart)));
    RestartOutcome out;
    std::optional<Candidate> current;
    for (int attempt = 0; attempt < 100 && !current; ++attempt) current = evaluate(initial(restart, attempt, rng));
    if (!current) throw InvalidArgument("search could not build a valid starting body");
    out.slacks.push_back(current->slack);
    std::normal_distribution<double> gauss;
    for (int it = 1; it < iterations; ++it) {
      PointList next = current->params;
      for (auto& p : next) {
        for (Eigen::Index i = 0; i < p.size(); ++i) p(i) += c_.scale * gauss(rng);
      }
      auto cand = evaluate(std::move(next));
      if (!cand) continue;
      out.slacks.push_back(cand->slack);
      if (cand->slack < current->slack) current = std::move(cand);
    }
    out.best = std::move(current);
    return out;
  }

 private:
  PointList initial(int restart, int attempt, std::mt19937_64& rng) const {
    const int n = c_.n;
    std::normal_distribution<double> gauss;
    PointList pts;
    if (c_.family == "cross-perturbation") {
      std::uniform_real_distribution<double> len(0.5, 1.5);
      const bool exact = restart == 0 && attempt == 0;
      for (int i = 0; i < n; ++i) {
        const double a = exact ? 1.0 : len(rng), b = exact ? 1.0 : len(rng);
        pts.push_back(a * unit_vec(n, i));
        pts.push_back(-b * unit_vec(n, i));
      }
      if (!exact) {
        for (auto& p : pts) {
          for (int i = 0; i < n; ++i) p(i) += c_.scale * gauss(rng);
        }
      }
      return pts;
    }
    for (int k = 0; k < c_.family_size; ++k) {
      Vec v(n);
      for (int i = 0; i < n; ++i) v(i) = gauss(rng);
      pts.push_back(v);
    }
    return pts;
  }

  Body build(const PointList& params) const {
    if (c_.family == "zonotope") return Zonotope(zero_vec(c_.n), params);
    if (c_.family == "unconditional-polytope") return sign_orbit_hull(params);
    return VPolytope::from_points(params);
  }

  // Rescales to unit V_k (k = norm_order_, or n-1 when V_k has no exact or
  // quadrature path for this body) and evaluates. Degenerate proposals give
  // nullopt.
  std::optional<Candidate> evaluate(PointList params) {
    try {
      Body body = build(params);
      if (affine_dim(body) < 1) return std::nullopt;
      double size = 0.0;
      int order = norm_order_;
      try {
        size = oracle_.measure(body, order).value;
      } catch (const Unsupported&) {
        order = c_.n - 1;
        size = oracle_.measure(body, order).value;
      }
      if (!(size > 0.0) || !std::isfinite(size)) return std::nullopt;
      const double lambda = std::pow(size, -1.0 / order);
      for (auto& p : params) p *= lambda;
      body = build(params);
      BodyProfile profile(body, oracle_);
      IneqReport rep = convexiq::evaluate(c_.inequality_id(), profile, c_.params(), opts_);
      if (!std::isfinite(rep.oriented_slack)) return std::nullopt;
      Candidate cand{std::move(params), std::move(body), std::nullopt, rep.oriented_slack};
      cand.report = std::move(rep);
      return cand;
    } catch (const InvalidArgument&) {
      throw;
    } catch (const Unsupported& e) {
      throw InvalidArgument(std::string("search needs a measure this body family lacks: ") + e.what());
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  const SearchConfig& c_;
  MeasureOracle& oracle_;
  EvalOptions opts_;
  int norm_order_;
};

double quantile(const std::vector<double>& sorted, double q) {
  const auto idx = static_cast<std::size_t>(std::floor(q * static_cast<double>(sorted.size() - 1)));
  return sorted[idx];
}

}  // namespace

SearchResult search(const SearchConfig& config, MeasureOracle& oracle) {
  config.validate();
  Runner runner(config, oracle);
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(config.restarts));
  parallel_for(outcomes.size(), [&](std::size_t r) {
    const int share = config.iterations / config.restarts + (static_cast<int>(r) < config.iterations % config.restarts);
    outcomes[r] = runner.run(static_cast<int>(r), share);
  });

  SearchResult res;
  res.seed = config.seed;
  res.config_hash = fnv1a_hex(search_config_to_json(config));
  const Candidate* best = nullptr;
  std::string best_print;
  std::vector<double> all;
  for (const auto& o : outcomes) {
    all.insert(all.end(), o.slacks.begin(), o.slacks.end());
    const Candidate& cand = *o.best;
    const std::string print = body_fingerprint(*cand.body);
    if (!best || cand.slack < best->slack || (cand.slack == best->slack && print < best_print)) {
      best = &cand;
      best_print = print;
    }
  }
  res.best_slack = best->slack;
  res.witness = best->body;
  res.best_report = best->report;
  res.violation = best->report->exact && best->slack < -10.0 * best->report->tolerance;

  constexpr std::size_t kBlock = 1000;
  for (std::size_t start = 0, b = 0; start < all.size(); start += kBlock, ++b) {
    std::vector<double> block(all.begin() + static_cast<std::ptrdiff_t>(start),
                              all.begin() + static_cast<std::ptrdiff_t>(std::min(all.size(), start + kBlock)));
    std::sort(block.begin(), block.end());
    res.trajectory.push_back({static_cast<int>(b), block.front(), quantile(block, 0.25), quantile(block, 0.5),
                              quantile(block, 0.75), block.back()});
  }
  return res;
}

SearchResult search(const SearchConfig& config) {
  QuadratureSpec q;
  q.resolution = config.quad_resolution;
  DefaultOracle oracle(q);
  return search(config, oracle);
}

}  // namespace convexiq
