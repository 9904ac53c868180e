// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <convexiq/constructors.hpp>
#include <convexiq/coord_ops.hpp>
#include <convexiq/corpus.hpp>
#include <convexiq/explorer.hpp>
#include <convexiq/inequalities.hpp>
#include <convexiq/io.hpp>
#include <convexiq_cli/commands.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

using namespace convexiq;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int k, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", k, title.c_str(), o.detail.c_str(), secs);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Vec random_vec(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = g(rng);
  return v;
}

VPolytope cross_with_axes(const std::vector<double>& t) {
  const int n = static_cast<int>(t.size());
  PointList pts;
  for (int i = 0; i < n; ++i) {
    pts.push_back(t[i] * unit_vec(n, i));
    pts.push_back(-t[i] * unit_vec(n, i));
  }
  return VPolytope::from_points(pts);
}

Outcome k1_paths() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto k = reproduce_K1();
  const double secs = seconds_since(t0);
  const bool ok = std::abs(k.v1_sphere - 3.8663) <= 1e-3 && std::abs(k.v1_inner - 3.8663) <= 1e-3 &&
                  std::abs(k.v1_sphere - k.v1_inner) <= 1e-5 && secs < 30.0;
  return {ok, fmt("2D %.9f, inner %.9f, |diff| %.2e", k.v1_sphere, k.v1_inner, std::abs(k.v1_sphere - k.v1_inner))};
}

Outcome cross_and_k2() {
  const double closed = 12.0 * std::numbers::sqrt2 * std::acos(1.0 / 3.0) / (2.0 * std::numbers::pi);
  const double v = v1_polytope_exact(Named(NamedId::Cross, 3).expand());
  const double k2 = v1_polytope_exact(Named(NamedId::K2, 3).expand());
  const bool ok = std::abs(v - closed) <= 1e-12 * closed && std::abs(k2 - 4.1669) <= 1e-4;
  return {ok, fmt("V1(C3) rel err %.1e, V1(K2) %.9f", std::abs(v - closed) / closed, k2)};
}

Outcome eq1_ratio() {
  const auto e = reproduce_eq1_falsification();
  return {std::abs(e.ratio - 0.46058) <= 1e-4 && e.ratio < 0.5, fmt("ratio %.10f < 0.5", e.ratio)};
}

Outcome mth_lower_suite() {
  const double c = mth_lower_constant(3, 1);
  const double target = 4.0 / (std::numbers::pi * std::numbers::pi);
  bool ok = std::abs(c - target) <= 1e-9;
  std::mt19937_64 rng(4);
  int violations = 0, count = 0;
  double worst = 1e300;
  for (int k = 0; k < 500; ++k) {
    const int n = 3 + k % 3;
    const int gens = n + static_cast<int>(rng() % 4);
    const auto z = random_zonotope(n, gens, 1.0, rng);
    const int m = 1 + static_cast<int>(rng() % (n - 2));
    IneqParams p;
    p.m = m;
    const auto r = evaluate("mth_lower", z, p);
    ++count;
    worst = std::min(worst, r.oriented_slack);
    if (!r.satisfied) ++violations;
  }
  ok = ok && violations == 0;
  return {ok, fmt("constant %.12f; %g zonotopes, %g violations", c, count, violations) +
                  fmt(", min slack %.3e", worst)};
}

Outcome pythagorean_flats() {
  std::mt19937_64 rng(5);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const int n = 2 + k % 5;
    const int m = 1 + static_cast<int>(rng() % (n - 1));
    PointList g;
    for (int j = 0; j < m; ++j) g.push_back(random_vec(n, rng));
    const auto f = FlatSet::make(random_vec(n, rng), g);
    const double lhs = std::pow(hausdorff_flat(f), 2);
    double rhs = 0.0;
    for (int i = 1; i <= n; ++i) rhs += std::pow(hausdorff_flat(project_flat(f, {i})), 2);
    rhs /= (n - m);
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(lhs, rhs));
  }
  return {worst <= 1e-9, fmt("1000 flats, n <= 6, worst rel err %.2e", worst)};
}

// Equality tolerances are absolute on bodies rescaled to unit volume.
Body unit_volume(const Body& b) {
  const int n = b.ambient_dim();
  return scale(b, std::pow(intrinsic_volume(b, n).value, -1.0 / n));
}

Outcome equality_battery() {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> side(0.5, 1.5);
  double worst = 0.0;
  int cases = 0;
  bool exact = true;
  const auto take = [&](const IneqReport& r, double slack) {
    worst = std::max(worst, std::abs(slack));
    exact = exact && r.exact;
    ++cases;
  };
  for (int n = 3; n <= 5; ++n) {
    for (int k = 0; k < 10; ++k) {
      PointList gens;
      Vec center = random_vec(n, rng);
      for (int i = 0; i < n; ++i) gens.push_back(side(rng) * unit_vec(n, i));
      const auto lw = evaluate("loomis_whitney", unit_volume(Zonotope(center, gens)));
      take(lw, lw.oriented_slack);

      std::vector<double> t(n);
      for (auto& v : t) v = side(rng);
      const Body cross = unit_volume(cross_with_axes(t));
      const auto my = evaluate("meyer", cross);
      take(my, my.oriented_slack);
      const auto sq = evaluate("square_lower", cross);
      take(sq, sq.links.at(0).oriented_slack);
      take(sq, sq.links.at(1).oriented_slack);

      const Body reg = unit_volume(cross_with_axes(std::vector<double>(n, side(rng))));
      const auto sn = evaluate("sqrt_n_lower", reg);
      take(sn, sn.links.at(0).oriented_slack);
      take(sn, sn.links.at(1).oriented_slack);
    }
  }
  const Body oct = Named(NamedId::Cross, 3);
  const auto my = evaluate("meyer", oct);
  const auto sq = evaluate("square_lower", oct);
  const bool values = std::abs(my.lhs - 16.0 / 9.0) < 1e-12 && std::abs(my.rhs - 16.0 / 9.0) < 1e-12 &&
                      std::abs(sq.lhs - 12.0) < 1e-12 && std::abs(sq.rhs - 12.0) < 1e-12;
  const bool ok = values && exact && worst < 1e-9;
  return {ok, fmt("%g equality cases, max |slack| %.2e; octahedron meyer %.12f", cases, worst, my.lhs) +
                  fmt(", square_lower %.12f", sq.lhs)};
}

Outcome proven_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  EvalOptions opts;
  opts.quadrature.resolution = 32;
  opts.quadrature.max_points = std::size_t{1} << 18;
  DefaultOracle oracle(opts.quadrature);
  std::mt19937_64 rng(7);
  int bodies = 0, evaluations = 0, violations = 0;
  std::string first;
  for (int k = 0; k < 1000; ++k) {
    const int n = 3 + k % 3;
    const bool zono = (k / 3) % 2 == 1;
    Body b = zono ? Body(random_zonotope(n, n + static_cast<int>(rng() % 3), 1.0, rng))
                  : Body(random_polytope(n, n + 3 + static_cast<int>(rng() % 6), 1.0, rng));
    BodyProfile prof(b, oracle);
    ++bodies;
    const auto run = [&](const std::string& id, IneqParams p) {
      const auto r = evaluate(id, prof, p, opts);
      ++evaluations;
      if (!r.satisfied) {
        ++violations;
        if (first.empty()) first = id + " on body " + std::to_string(k) + " slack " + std::to_string(r.oriented_slack);
      }
    };
    IneqParams none;
    run("bm_upper", none);
    run("square_lower", none);
    for (int m : {1, n - 1, n - 2}) {
      IneqParams p;
      p.m = m;
      run("cg_upper", p);
    }
    for (int m : {1, n - 2}) {
      IneqParams p;
      p.m = m;
      run("reverse_cs", p);
    }
    for (int m = 1; m < n; ++m) {
      IneqParams p;
      p.m = m;
      if (zono) run("zonoid_lower", p);
      if (!zono && n >= 4 && m > 1 && m < n - 2) continue;  // no measure path
      run("trivmax", p);
      p.p = 2.0;
      run("easy_bounds", p);
    }
  }
  // pythagorean: 100 random directions on the first bodies of each dimension
  std::mt19937_64 urng(8);
  for (int k = 0; k < 100; ++k) {
    const int n = 3 + k % 3;
    const Body b = random_polytope(n, n + 4, 1.0, urng);
    IneqParams p;
    p.m = n - 1;
    p.u = random_vec(n, urng);
    const auto r = evaluate("pythagorean", b, p, opts);
    ++evaluations;
    if (!r.satisfied) {
      ++violations;
      if (first.empty()) first = "pythagorean slack " + std::to_string(r.oriented_slack);
    }
  }
  const double secs = seconds_since(t0);
  std::string detail = fmt("%g bodies, %g evaluations, %g violations", bodies, evaluations, violations);
  if (!first.empty()) detail += "; first: " + first;
  if (secs >= 300.0) detail += "; over the 5 min budget";
  return {violations == 0 && secs < 300.0, detail};
}

Outcome constructors() {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> uni(0.2, 5.0);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const int n = 3 + k % 4;
    std::vector<double> s(n);
    for (auto& v : s) v = uni(rng);
    const auto c = cross_polytope_from_sections(s);
    for (int i = 1; i <= n; ++i) {
      const double got = intrinsic_volume(section(c, {i}), n - 1).value;
      worst = std::max(worst, std::abs(got - s[i - 1]) / s[i - 1]);
    }
    // projection lengths of a random segment are always feasible
    Vec x(n);
    for (auto& v : x) v = uni(rng);
    std::vector<double> a(n);
    for (int i = 0; i < n; ++i) a[i] = std::sqrt(x.squaredNorm() - x(i) * x(i));
    const auto seg = segment_from_projections(a);
    if (!seg.feasible) return {false, "feasible projection data reported infeasible"};
    for (int i = 1; i <= n; ++i) {
      const double got = intrinsic_volume(project(*seg.segment, {i}), 1).value;
      worst = std::max(worst, std::abs(got - a[i - 1]) / a[i - 1]);
    }
  }
  const auto box = segment_from_projections({1, 1, 2});
  const bool ok = worst <= 1e-9 && !box.feasible && box.violating_index == 3;
  return {ok, fmt("worst round-trip rel err %.2e; (1,1,2) infeasible at index %g", worst, box.violating_index)};
}

Outcome betke_mcmullen() {
  const double c0 = c0_constant(3).value;
  const double literal = 0.391820;
  CorpusSpec spec;
  spec.count = 500;
  spec.seed = 10;
  spec.n = 3;
  spec.size = 8;
  double min_f = 1e300, worst_sym = 0.0;
  int index = 0;
  for (const auto& b : generate_corpus(spec)) {
    const double f = functional_F(b).value;
    min_f = std::min(min_f, f);
    // each symmetral sums 48 images (about a second apiece), so only the first 100
    if (index++ < 100) worst_sym = std::max(worst_sym, std::abs(functional_F(g_symmetral(b)).value - f));
  }
  CorpusSpec g;
  g.family = "g-symmetric";
  g.count = 100;
  g.seed = 11;
  g.size = 2;
  int monotone = 0;
  for (const auto& b : generate_corpus(g)) {
    const Body s = scale(b, 1.0 / support(b, unit_vec(3, 0)));
    const auto curve = j_curve(s, 64);
    bool up = true;
    for (std::size_t k = 1; k < curve.size(); ++k) up = up && curve[k].j >= curve[k - 1].j - 1e-6;
    monotone += up ? 1 : 0;
  }
  const bool ok = std::abs(c0 - std::acos(1.0 / 3.0) / std::numbers::pi) <= 1e-12 && min_f >= c0 - 1e-6 &&
                  worst_sym <= 1e-6 && monotone == 100;
  std::string detail = fmt("c0(3) %.9f (printed 0.391820 differs by %.1e, a truncation); min F %.9f", c0,
                           std::abs(c0 - literal), min_f);
  detail += fmt(", max |F(K^G)-F(K)| %.1e over 100 symmetrals, %g/100 J curves nondecreasing", worst_sym, monotone);
  return {ok, detail};
}

Outcome determinism() {
  const std::string root = std::string(CONVEXIQ_TEST_TMP) + "/acceptance";
  fs::remove_all(root);
  std::ostringstream out, err;
  cli::Context ctx{out, err, nullptr};

  CorpusSpec spec;
  spec.family = "random-zonotope";
  spec.n = 4;
  spec.size = 6;
  spec.seed = 7;
  spec.count = 3;
  SearchConfig cfg;
  cfg.problem = "prob4";
  cfg.family = "random-polytope";
  cfg.c = 0.46058;
  cfg.iterations = 2000;
  cfg.restarts = 4;
  cfg.family_size = 8;
  write_file(root + "/prob4.json", search_config_to_json(cfg));

  for (const char* run : {"a", "b"}) {
    cli::GlobalOptions g;
    g.out = root + "/" + run + "/make";
    if (cli::cmd_make(spec, g, ctx) != 0) return {false, "make failed: " + err.str()};
    g.out = root + "/" + run + "/search";
    if (cli::cmd_search(root + "/prob4.json", g, ctx) != 0) return {false, "search failed: " + err.str()};
  }
  int files = 0;
  for (const auto& e : fs::recursive_directory_iterator(root + "/a")) {
    if (!e.is_regular_file()) continue;
    const auto rel = fs::relative(e.path(), root + "/a");
    const auto other = fs::path(root + "/b") / rel;
    if (!fs::exists(other) || read_file(e.path().string()) != read_file(other.string())) {
      return {false, "differs: " + rel.string()};
    }
    ++files;
  }
  return {files >= 5, fmt("%g artifacts byte-identical across reruns", files)};
}

}  // namespace

int main() {
  criterion(1, "V1(K1) by two quadratures", k1_paths);
  criterion(2, "V1(C3) exact and V1(K2)", cross_and_k2);
  criterion(3, "eq1 falsification ratio", eq1_ratio);
  criterion(4, "mth_lower constant and zonotope suite", mth_lower_suite);
  criterion(5, "Pythagorean identity on flats", pythagorean_flats);
  criterion(6, "equality-case battery", equality_battery);
  criterion(7, "proven-inequality suite", proven_suite);
  criterion(8, "constructor round trips", constructors);
  criterion(9, "Betke-McMullen suite", betke_mcmullen);
  criterion(10, "determinism of make and search", determinism);
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
