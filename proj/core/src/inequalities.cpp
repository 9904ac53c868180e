#include "convexiq/inequalities.hpp"

#include "convexiq/constants.hpp"
#include "convexiq/coord_ops.hpp"
#include "convexiq/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace convexiq {

std::string to_string(IneqStatus s) { return s == IneqStatus::Proven ? "PROVEN" : "CONJECTURE"; }

std::string to_string(EqualityFlag f) {
  switch (f) {
    case EqualityFlag::Strict: return "strict";
    case EqualityFlag::NearEquality: return "near_equality";
    case EqualityFlag::EqualityCaseMatched: return "equality_case_matched";
  }
  return "?";
}

// --- parameters --------------------------------------------------------------

namespace {

double parse_real(const std::string& s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) throw InvalidArgument("bad number '" + s + "'");
  return v;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, '/')) out.push_back(parse_real(item));
  if (out.empty()) throw InvalidArgument("empty vector parameter");
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

IneqParams parse_params(const std::string& text) {
  IneqParams p;
  if (text.empty()) return p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("parameter '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    if (key == "m") {
      const double m = parse_real(val);
      if (m != std::floor(m)) throw InvalidArgument("m must be an integer");
      p.m = static_cast<int>(m);
    } else if (key == "p") {
      p.p = parse_real(val);
    } else if (key == "c") {
      p.c = parse_real(val);
    } else if (key == "a") {
      p.a = parse_list(val);
    } else if (key == "u") {
      const auto u = parse_list(val);
      Vec v(static_cast<Eigen::Index>(u.size()));
      for (std::size_t i = 0; i < u.size(); ++i) v(static_cast<Eigen::Index>(i)) = u[i];
      p.u = v;
    } else {
      throw InvalidArgument("unknown parameter '" + key + "'");
    }
  }
  return p;
}

std::string format_params(const IneqParams& p) {
  std::vector<std::string> parts;
  auto join = [](const auto& xs) {
    std::string s;
    for (std::size_t i = 0; i < static_cast<std::size_t>(xs.size()); ++i) {
      if (i) s += '/';
      s += fmt(xs[static_cast<Eigen::Index>(i)]);
    }
    return s;
  };
  if (p.a.size()) parts.push_back("a=" + join(p.a));
  if (p.c) parts.push_back("c=" + fmt(*p.c));
  if (p.m) parts.push_back("m=" + std::to_string(*p.m));
  if (p.p) parts.push_back("p=" + fmt(*p.p));
  if (p.u) parts.push_back("u=" + join(*p.u));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"loomis_whitney", "V(K)^(n-1) <= prod V_{n-1}(K|e_i)", {}, {}},
      {"meyer", "V(K)^(n-1) >= ((n-1)!/n^(n-1)) prod V_{n-1}(K^e_i)", {}, {}},
      {"bm_upper", "V_{n-1}(K) <= sum V_{n-1}(K|e_i)", {}, {}},
      {"cg_upper", "V_m(K) <= (1/(n-m)) sum V_m(K|e_i)", {"m"}, {}},
      {"sqrt_n_lower", "V_{n-1}(K) >= (1/sqrt n) sum V_{n-1}(K|e_i) >= (1/sqrt n) sum V_{n-1}(K^e_i)", {}, {}},
      {"weighted_bm", "min a_i <= sum a_i V_{n-1}(K|e_i) / V_{n-1}(K) <= |a|", {"a"}, {}},
      {"square_lower", "V_{n-1}(K)^2 >= sum V_{n-1}(K|e_i)^2 >= sum V_{n-1}(K^e_i)^2", {}, {}},
      {"pythagorean", "V_m(K|u)^2 <= sum V_m(K|e_i)^2", {"m", "u"}, {}},
      {"zonoid_lower", "V_m(K)^2 >= (1/(n-m)) sum V_m(K|e_i)^2 (zonoids)", {"m"}, {}},
      {"mth_lower", "V_m(K)^2 >= (1/pi)(G((n-m)/2)/G((n-m+1)/2))^2 sum V_m(K|e_i)^2", {"m"}, {}},
      {"reverse_cs", "sum V_m(K|e_i)^2 <= (1/sqrt(n-m)) (sum V_m(K|e_i))^2", {"m"}, {}},
      {"cond_eq111", "if V_m(K|e_k) <= (1/(n-m)) sum_i V_m(K|e_i) for all k: sum c_i^2 <= (1/(n-m)) (sum c_i)^2",
       {"m"}, {}},
      {"easy_bounds", "V_m(K) >= M_p(V_m(K|e_i)) >= M_p(V_m(K^e_i))", {"m", "p"}, {}},
      {"trivmax", "V_m(K) >= max V_m(K|e_i) >= max V_m(K^e_i)", {"m"}, {}},
      {"bm_v1_lower", "V_1(K) >= c0(n) sum V_1(K|e_i)", {}, {}},
      {"heron_n3", "V_2(K)^2 >= (1/16)(sum s_i^2)^2 - (1/8) sum s_i^4, s_i = V_1(K^e_i), n = 3", {}, {}},
      {"prob4_family", "V_m(K)^2 >= c sum V_m(K|e_i)^2 >= c sum V_m(K^e_i)^2", {"m"}, {"c"}},
      {"prob5_family", "V_{m+1}(K)^(mn) >= c prod V_m(K^e_i)^(m+1)", {"m"}, {"c"}},
  };
  return entries;
}

bool is_known_inequality(const std::string& id) {
  return std::any_of(catalog().begin(), catalog().end(), [&](const auto& e) { return e.id == id; });
}

const CatalogEntry& catalog_entry(const std::string& id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return e;
  }
  throw InvalidArgument("unknown inequality id '" + id + "'");
}

// --- profile -----------------------------------------------------------------

BodyProfile::BodyProfile(Body body, MeasureOracle& oracle)
    : body_(std::move(body)), oracle_(&oracle), dim_(affine_dim(body_)) {}

const Measure& BodyProfile::vm(int m) {
  auto it = vm_.find(m);
  if (it == vm_.end()) it = vm_.emplace(m, oracle_->measure(body_, m)).first;
  return it->second;
}

const Body& BodyProfile::projection(int i) {
  auto it = projections_.find(i);
  if (it == projections_.end()) it = projections_.emplace(i, project(body_, CoordinateIndex{i + 1})).first;
  return it->second;
}

const Body& BodyProfile::section_body(int i) {
  auto it = sections_.find(i);
  if (it == sections_.end()) it = sections_.emplace(i, section(body_, CoordinateIndex{i + 1})).first;
  return it->second;
}

const Measure& BodyProfile::proj(int i, int m) {
  auto key = std::make_pair(i, m);
  auto it = proj_.find(key);
  if (it == proj_.end()) it = proj_.emplace(key, oracle_->measure(projection(i), m)).first;
  return it->second;
}

const Measure& BodyProfile::sec(int i, int m) {
  auto key = std::make_pair(i, m);
  auto it = sec_.find(key);
  if (it == sec_.end()) it = sec_.emplace(key, oracle_->measure(section_body(i), m)).first;
  return it->second;
}

Measure BodyProfile::proj_dir(const Vec& u, int m) { return oracle_->measure(project_onto_hyperplane(body_, u), m); }

// --- equality families -----------------------------------------------------

namespace {

std::optional<VPolytope> polytope_form(const Body& body) {
  if (body.kind() == BodyKind::Ball) {
    const auto& b = *body.get_if<Ball>();
    if (b.radius() == 0.0) return VPolytope::from_points({b.center()});
    return std::nullopt;
  }
  return body.to_polytope();
}

double scale_of(const VPolytope& p) {
  double e = 1.0;
  for (const auto& v : p.vertices()) e = std::max(e, v.cwiseAbs().maxCoeff());
  return e;
}

}  // namespace

bool is_coordinate_box(const Body& body, double tol) {
  if (const auto* z = body.get_if<Zonotope>()) {
    for (const auto& g : z->generators()) {
      int nonzero = 0;
      for (Eigen::Index i = 0; i < g.size(); ++i) nonzero += std::abs(g(i)) > tol * g.norm();
      if (nonzero != 1) return false;
    }
    return true;
  }
  if (const auto* nm = body.get_if<Named>()) return nm->id() == NamedId::Cube;
  const auto p = polytope_form(body);
  if (!p || p->is_empty()) return false;
  const double t = tol * scale_of(*p);
  const int n = p->ambient_dim();
  std::size_t corners = 1;
  for (int i = 0; i < n; ++i) {
    double lo = p->vertices().front()(i), hi = lo;
    for (const auto& v : p->vertices()) {
      lo = std::min(lo, v(i));
      hi = std::max(hi, v(i));
    }
    for (const auto& v : p->vertices()) {
      if (std::abs(v(i) - lo) > t && std::abs(v(i) - hi) > t) return false;
    }
    if (hi - lo > t) corners *= 2;
  }
  return corners == p->vertices().size();
}

std::optional<CrossShape> coordinate_cross_shape(const Body& body, double tol) {
  const auto p = polytope_form(body);
  if (!p || p->is_empty()) return std::nullopt;
  const int n = p->ambient_dim();
  const auto& vs = p->vertices();
  const double t = tol * scale_of(*p);
  // Every coordinate of the common point is shared by all vertices off that axis.
  Vec center(n);
  for (int i = 0; i < n; ++i) {
    std::size_t best = 0;
    for (const auto& v : vs) {
      const auto count = static_cast<std::size_t>(
          std::count_if(vs.begin(), vs.end(), [&](const Vec& w) { return std::abs(w(i) - v(i)) <= t; }));
      if (count > best) {
        best = count;
        center(i) = v(i);
      }
    }
  }
  CrossShape shape{center, Vec::Zero(n), Vec::Zero(n)};
  std::vector<int> neg(n, 0), pos(n, 0);
  for (const auto& v : vs) {
    const Vec d = v - center;
    int axis = -1;
    for (int i = 0; i < n; ++i) {
      if (std::abs(d(i)) > t) {
        if (axis >= 0) return std::nullopt;
        axis = i;
      }
    }
    if (axis < 0) continue;  // the common point is itself a vertex
    if (d(axis) < 0.0) {
      if (neg[axis]++) return std::nullopt;
      shape.a(axis) = d(axis);
    } else {
      if (pos[axis]++) return std::nullopt;
      shape.b(axis) = d(axis);
    }
  }
  return shape;
}

namespace {

enum class Family {
  CoordinateBox,
  CrossFull,                // n-dimensional coordinate cross-polytope, any common point
  CrossAtOriginFull,        // common point at o
  RegularCrossFull,         // equal segment lengths
  CenteredRegularCrossFull, // translate of an o-symmetric regular one
  OSymCrossFull,
  OSymRegularCrossFull,
  Zon1eq,
  DimAtMostM,
  DimBelowNMinus1,
  DimAtMostNMinus1,
  FlatInCoordinateHyperplane,  // dim n-1 inside some e_i^perp
  Singleton,
};

std::string family_name(Family f) {
  switch (f) {
    case Family::CoordinateBox: return "coordinate box";
    case Family::CrossFull: return "coordinate cross-polytope";
    case Family::CrossAtOriginFull: return "coordinate cross-polytope about o";
    case Family::RegularCrossFull: return "regular coordinate cross-polytope";
    case Family::CenteredRegularCrossFull: return "translate of o-symmetric regular coordinate cross-polytope";
    case Family::OSymCrossFull: return "o-symmetric coordinate cross-polytope";
    case Family::OSymRegularCrossFull: return "o-symmetric regular coordinate cross-polytope";
    case Family::Zon1eq: return "sign-pattern zonotope";
    case Family::DimAtMostM: return "dim K <= m";
    case Family::DimBelowNMinus1: return "dim K < n-1";
    case Family::DimAtMostNMinus1: return "dim K <= n-1";
    case Family::FlatInCoordinateHyperplane: return "(n-1)-dimensional in a coordinate hyperplane";
    case Family::Singleton: return "singleton";
  }
  return "?";
}

bool is_zon1eq(const Body& body, double tol) {
  if (affine_dim(body) == 1) return true;
  const auto* z = body.get_if<Zonotope>();
  if (!z || z->generators().empty()) return false;
  const Vec pattern = z->generators().front().normalized().cwiseAbs();
  return std::all_of(z->generators().begin(), z->generators().end(), [&](const Vec& g) {
    return (g.normalized().cwiseAbs() - pattern).cwiseAbs().maxCoeff() <= tol;
  });
}

bool belongs(const Body& body, Family f, int m, double tol) {
  const int n = body.ambient_dim();
  const int dim = affine_dim(body);
  switch (f) {
    case Family::CoordinateBox: return is_coordinate_box(body, tol);
    case Family::Zon1eq: return is_zon1eq(body, tol);
    case Family::DimAtMostM: return dim <= m;
    case Family::DimBelowNMinus1: return dim < n - 1;
    case Family::DimAtMostNMinus1: return dim <= n - 1;
    case Family::Singleton: return dim == 0;
    case Family::FlatInCoordinateHyperplane: {
      if (dim != n - 1) return false;
      const auto p = polytope_form(body);
      if (!p) return false;
      const double t = tol * scale_of(*p);
      for (int i = 0; i < n; ++i) {
        const double x = p->vertices().front()(i);
        if (std::all_of(p->vertices().begin(), p->vertices().end(),
                        [&](const Vec& v) { return std::abs(v(i) - x) <= t; })) {
          return true;
        }
      }
      return false;
    }
    default:
      break;
  }
  if (dim != n) return false;
  const auto shape = coordinate_cross_shape(body, tol);
  if (!shape) return false;
  const double t = tol * std::max({1.0, shape->p.cwiseAbs().maxCoeff(), shape->b.maxCoeff(), -shape->a.minCoeff()});
  const Vec len = shape->b - shape->a;
  const bool regular = (len.array() - len(0)).abs().maxCoeff() <= t;
  const bool centered = (shape->a + shape->b).cwiseAbs().maxCoeff() <= t;
  const bool at_origin = shape->p.cwiseAbs().maxCoeff() <= t;
  switch (f) {
    case Family::CrossFull: return true;
    case Family::CrossAtOriginFull: return at_origin;
    case Family::RegularCrossFull: return regular;
    case Family::CenteredRegularCrossFull: return regular && centered;
    case Family::OSymCrossFull: return centered && at_origin;
    case Family::OSymRegularCrossFull: return regular && centered && at_origin;
    default: return false;
  }
}

std::vector<Family> families_for(const std::string& id, int link, const IneqParams& params) {
  const int m = params.m.value_or(0);
  if (id == "loomis_whitney" || id == "bm_upper" || id == "cg_upper") return {Family::CoordinateBox};
  if (id == "meyer") return {Family::CrossAtOriginFull};
  if (id == "sqrt_n_lower") {
    if (link == 0) return {Family::DimBelowNMinus1, Family::RegularCrossFull};
    return {Family::DimBelowNMinus1, Family::OSymRegularCrossFull};
  }
  if (id == "square_lower") {
    if (link == 0) return {Family::DimAtMostNMinus1, Family::CrossFull};
    return {Family::DimBelowNMinus1, Family::FlatInCoordinateHyperplane, Family::OSymCrossFull};
  }
  if (id == "zonoid_lower") {
    if (m == 1) return {Family::DimAtMostM, Family::Zon1eq};
    return {Family::DimAtMostM};
  }
  if (id == "mth_lower") return {Family::DimAtMostM};
  if (id == "bm_v1_lower") return {Family::Singleton, Family::RegularCrossFull};
  if (id == "heron_n3" || id == "prob5_family") return {Family::OSymCrossFull};
  if (id == "prob4_family") {
    if (link == 0) return {Family::CenteredRegularCrossFull};
    return {Family::OSymRegularCrossFull};
  }
  return {};
}

}  // namespace

Classification equality_case_classifier(const std::string& id, const Body& body, const IneqParams& params, int link,
                                        double tol) {
  catalog_entry(id);
  for (Family f : families_for(id, link, params)) {
    if (belongs(body, f, params.m.value_or(0), tol)) return {true, family_name(f)};
  }
  return {};
}

// --- constants ---------------------------------------------------------------

double mth_lower_constant(int n, int m) {
  if (m < 1 || m > n - 2) throw InvalidArgument("mth_lower: m must lie in 1..n-2");
  const double r = std::tgamma((n - m) / 2.0) / std::tgamma((n - m + 1) / 2.0);
  return r * r / std::numbers::pi;
}

Measure c0_constant(int n, const QuadratureSpec& q) {
  if (n < 3 || n > kMaxDim) throw InvalidArgument("c0 is defined for 3 <= n <= 8");
  const Measure top = vm_polytope(Named(NamedId::Cross, n).expand(), 1, q);
  const Measure face = vm_polytope(Named(NamedId::Cross, n - 1).expand(), 1, q);
  const double value = top.value / (n * face.value);
  const double rel = top.error / top.value + face.error / face.value;
  return {value, value * rel, top.exact && face.exact};
}

// --- evaluation ----------------------------------------------------------------

namespace {

using Values = std::vector<double>;
using SideFn = std::function<std::pair<double, double>(const Values&)>;

struct LinkSpec {
  std::string label;
  Orientation orientation;
  SideFn sides;
};

class Evaluator {
 public:
  Evaluator(BodyProfile& profile, const EvalOptions& opts) : P(profile), opts_(opts) {}

  int add(const Measure& m) {
    inputs_.push_back(m);
    return static_cast<int>(inputs_.size()) - 1;
  }
  // Adds V_m of all n projections (or sections); returns the first index.
  int add_proj(int m) {
    const int first = static_cast<int>(inputs_.size());
    for (int i = 0; i < P.n(); ++i) add(P.proj(i, m));
    return first;
  }
  int add_sec(int m) {
    const int first = static_cast<int>(inputs_.size());
    for (int i = 0; i < P.n(); ++i) add(P.sec(i, m));
    return first;
  }
  void link(std::string label, Orientation o, SideFn f) { links_.push_back({std::move(label), o, std::move(f)}); }

  void finish(IneqReport& r, const std::string& id, const IneqParams& params) {
    Values v(inputs_.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = inputs_[j].value;
    double max_err = 0.0;
    for (const auto& in : inputs_) {
      if (!in.exact) r.exact = false;
      max_err = std::max(max_err, in.error);
    }
    if (!r.exact) r.quadrature_error = max_err;

    for (std::size_t k = 0; k < links_.size(); ++k) {
      const auto& spec = links_[k];
      auto slack_of = [&](const Values& vals) {
        const auto [lhs, rhs] = spec.sides(vals);
        return spec.orientation == Orientation::Geq ? lhs - rhs : rhs - lhs;
      };
      IneqLink L;
      L.label = spec.label;
      L.orientation = spec.orientation;
      std::tie(L.lhs, L.rhs) = spec.sides(v);
      L.oriented_slack = slack_of(v);
      // first-order propagation by perturbing each input by its error
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (inputs_[j].error <= 0.0) continue;
        Values up = v, down = v;
        up[j] += inputs_[j].error;
        down[j] = std::max(0.0, down[j] - inputs_[j].error);
        L.propagated_error +=
            std::max(std::abs(slack_of(up) - L.oriented_slack), std::abs(slack_of(down) - L.oriented_slack));
      }
      const double scale = std::max({1.0, std::abs(L.lhs), std::abs(L.rhs)});
      L.tolerance = std::max(opts_.base_tolerance * scale, 10.0 * L.propagated_error);
      if (!std::isfinite(L.oriented_slack)) throw UndefinedValue(id + ": non-finite slack");
      L.satisfied = L.oriented_slack >= -L.tolerance;
      if (std::abs(L.oriented_slack) <= L.tolerance) {
        const auto c = equality_case_classifier(id, P.body(), params, static_cast<int>(k));
        L.equality_flag = c.matched ? EqualityFlag::EqualityCaseMatched : EqualityFlag::NearEquality;
        L.matched_family = c.family;
      }
      r.links.push_back(L);
    }
    r.lhs = r.links.front().lhs;
    r.rhs = r.links.back().rhs;
    auto worst = std::min_element(r.links.begin(), r.links.end(),
                                  [](const auto& a, const auto& b) { return a.oriented_slack < b.oriented_slack; });
    r.oriented_slack = worst->oriented_slack;
    r.tolerance = worst->tolerance;
    r.equality_flag = worst->equality_flag;
    r.matched_family = worst->matched_family;
    r.satisfied = std::all_of(r.links.begin(), r.links.end(), [](const auto& l) { return l.satisfied; });
  }

  BodyProfile& P;

 private:
  const EvalOptions& opts_;
  std::vector<Measure> inputs_;
  std::vector<LinkSpec> links_;
};

double sum(const Values& v, int first, int count, const std::function<double(double)>& f) {
  double s = 0.0;
  for (int i = 0; i < count; ++i) s += f(v[first + i]);
  return s;
}

double identity(double x) { return x; }
double square(double x) { return x * x; }

void check_params(const std::string& id, const IneqParams& p) {
  const auto& e = catalog_entry(id);
  auto allowed = [&](const std::string& k) {
    return std::find(e.required.begin(), e.required.end(), k) != e.required.end() ||
           std::find(e.optional.begin(), e.optional.end(), k) != e.optional.end();
  };
  const std::pair<const char*, bool> given[] = {
      {"m", p.m.has_value()}, {"p", p.p.has_value()}, {"c", p.c.has_value()}, {"a", !p.a.empty()}, {"u", p.u.has_value()}};
  for (const auto& [k, present] : given) {
    if (present && !allowed(k)) throw InvalidArgument(id + ": unexpected parameter '" + k + "'");
  }
  for (const auto& k : e.required) {
    const bool present = std::any_of(std::begin(given), std::end(given),
                                     [&](const auto& g) { return g.second && k == g.first; });
    if (!present) throw InvalidArgument(id + ": missing parameter '" + k + "'");
  }
}

void require_m(const std::string& id, int m, int lo, int hi) {
  if (m < lo || m > hi) {
    throw InvalidArgument(id + ": m = " + std::to_string(m) + " outside " + std::to_string(lo) + ".." +
                          std::to_string(hi));
  }
}

bool origin_in_interior(const Body& body) {
  const int n = body.ambient_dim();
  if (const auto* b = body.get_if<Ball>()) return b->full_dimensional() && b->center().norm() < b->radius();
  if (const auto* nm = body.get_if<Named>()) {
    (void)nm;
    return true;
  }
  const VPolytope p = body.to_polytope();
  if (p.affine_dim() != n) return false;
  const Hull& h = p.hull();
  const Vec o = h.to_local(zero_vec(n));
  const double tol = kHullTolerance * std::max(1.0, scale_of(p));
  return std::all_of(h.facets.begin(), h.facets.end(),
                     [&](const HullFacet& f) { return f.normal.dot(o) < f.offset - tol; });
}

void warn(IneqReport& r, std::string msg) {
  r.precondition_met = false;
  r.warnings.push_back(std::move(msg));
}

}  // namespace

IneqReport evaluate(const std::string& id, BodyProfile& P, const IneqParams& params, const EvalOptions& opts) {
  check_params(id, params);
  const int n = P.n();
  IneqReport r;
  r.id = id;
  r.params = format_params(params);
  r.n = n;
  r.fingerprint = body_fingerprint(P.body());
  Evaluator E(P, opts);
  const int m = params.m.value_or(0);
  const auto ge = Orientation::Geq, le = Orientation::Leq;

  if (id == "loomis_whitney") {
    const int v = E.add(P.vm(n)), pr = E.add_proj(n - 1);
    E.link("V^(n-1) <= prod proj", le, [=](const Values& x) {
      double prod = 1.0;
      for (int i = 0; i < n; ++i) prod *= x[pr + i];
      return std::make_pair(std::pow(x[v], n - 1), prod);
    });
  } else if (id == "meyer") {
    if (!origin_in_interior(P.body())) warn(r, "origin is not an interior point");
    const int v = E.add(P.vm(n)), se = E.add_sec(n - 1);
    double c = 1.0;
    for (int k = 2; k < n; ++k) c *= k;
    c /= std::pow(n, n - 1);
    E.link("V^(n-1) >= c prod sec", ge, [=](const Values& x) {
      double prod = 1.0;
      for (int i = 0; i < n; ++i) prod *= x[se + i];
      return std::make_pair(std::pow(x[v], n - 1), c * prod);
    });
  } else if (id == "bm_upper") {
    const int v = E.add(P.vm(n - 1)), pr = E.add_proj(n - 1);
    E.link("V_{n-1} <= sum proj", le, [=](const Values& x) { return std::make_pair(x[v], sum(x, pr, n, identity)); });
  } else if (id == "cg_upper") {
    require_m(id, m, 1, n - 1);
    if (!(m == 1 || m == n - 1 || P.body().is_zonoid())) r.status = IneqStatus::Conjecture;
    const int v = E.add(P.vm(m)), pr = E.add_proj(m);
    E.link("V_m <= sum proj/(n-m)", le,
           [=](const Values& x) { return std::make_pair(x[v], sum(x, pr, n, identity) / (n - m)); });
  } else if (id == "sqrt_n_lower") {
    const int v = E.add(P.vm(n - 1)), pr = E.add_proj(n - 1), se = E.add_sec(n - 1);
    const double s = 1.0 / std::sqrt(n);
    E.link("V_{n-1} >= sum proj/sqrt(n)", ge,
           [=](const Values& x) { return std::make_pair(x[v], s * sum(x, pr, n, identity)); });
    E.link("sum proj/sqrt(n) >= sum sec/sqrt(n)", ge, [=](const Values& x) {
      return std::make_pair(s * sum(x, pr, n, identity), s * sum(x, se, n, identity));
    });
  } else if (id == "weighted_bm") {
    if (static_cast<int>(params.a.size()) != n) throw InvalidArgument("weighted_bm: need n weights");
    if (std::any_of(params.a.begin(), params.a.end(), [](double w) { return !(w > 0.0); })) {
      throw InvalidArgument("weighted_bm: weights must be positive");
    }
    const auto a = params.a;
    const double amin = *std::min_element(a.begin(), a.end());
    const double anorm = std::sqrt(std::inner_product(a.begin(), a.end(), a.begin(), 0.0));
    const int v = E.add(P.vm(n - 1)), pr = E.add_proj(n - 1);
    auto ratio = [=](const Values& x) {
      if (x[v] == 0.0) throw UndefinedValue("weighted_bm: V_{n-1}(K) = 0");
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += a[i] * x[pr + i];
      return s / x[v];
    };
    E.link("min a <= weighted ratio", le, [=](const Values& x) { return std::make_pair(amin, ratio(x)); });
    E.link("weighted ratio <= |a|", le, [=](const Values& x) { return std::make_pair(ratio(x), anorm); });
  } else if (id == "square_lower") {
    const int v = E.add(P.vm(n - 1)), pr = E.add_proj(n - 1), se = E.add_sec(n - 1);
    E.link("V_{n-1}^2 >= sum proj^2", ge,
           [=](const Values& x) { return std::make_pair(x[v] * x[v], sum(x, pr, n, square)); });
    E.link("sum proj^2 >= sum sec^2", ge,
           [=](const Values& x) { return std::make_pair(sum(x, pr, n, square), sum(x, se, n, square)); });
  } else if (id == "pythagorean") {
    require_m(id, m, 1, n - 1);
    if (params.u->size() != n || params.u->norm() == 0.0) throw InvalidArgument("pythagorean: u must be nonzero in R^n");
    const int w = E.add(P.proj_dir(*params.u, m)), pr = E.add_proj(m);
    E.link("V_m(K|u)^2 <= sum proj^2", le,
           [=](const Values& x) { return std::make_pair(x[w] * x[w], sum(x, pr, n, square)); });
  } else if (id == "zonoid_lower") {
    require_m(id, m, 1, n - 1);
    if (!P.body().is_zonoid()) warn(r, "body is not a zonoid");
    const int v = E.add(P.vm(m)), pr = E.add_proj(m);
    E.link("V_m^2 >= sum proj^2/(n-m)", ge,
           [=](const Values& x) { return std::make_pair(x[v] * x[v], sum(x, pr, n, square) / (n - m)); });
  } else if (id == "mth_lower") {
    require_m(id, m, 1, n - 2);
    if (P.dim() <= m) warn(r, "dim K <= m");
    const double c = mth_lower_constant(n, m);
    const int v = E.add(P.vm(m)), pr = E.add_proj(m);
    E.link("V_m^2 >= C sum proj^2", ge,
           [=](const Values& x) { return std::make_pair(x[v] * x[v], c * sum(x, pr, n, square)); });
  } else if (id == "reverse_cs") {
    require_m(id, m, 1, n - 2);
    if (m != 1 && m != n - 2) r.status = IneqStatus::Conjecture;
    const int pr = E.add_proj(m);
    const double s = 1.0 / std::sqrt(n - m);
    E.link("sum proj^2 <= (sum proj)^2/sqrt(n-m)", le, [=](const Values& x) {
      const double t = sum(x, pr, n, identity);
      return std::make_pair(sum(x, pr, n, square), s * t * t);
    });
  } else if (id == "cond_eq111") {
    require_m(id, m, 1, n - 2);
    const int pr = E.add_proj(m);
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += P.proj(i, m).value;
    for (int k = 0; k < n; ++k) {
      const double ck = P.proj(k, m).value, bound = total / (n - m);
      if (ck > bound + opts.base_tolerance * std::max(1.0, bound)) {
        warn(r, "hypothesis fails at k = " + std::to_string(k + 1));
      }
    }
    E.link("sum c^2 <= (sum c)^2/(n-m)", le, [=](const Values& x) {
      const double t = sum(x, pr, n, identity);
      return std::make_pair(sum(x, pr, n, square), t * t / (n - m));
    });
  } else if (id == "easy_bounds") {
    require_m(id, m, 1, n - 1);
    const double p = *params.p;
    if (!(p > 0.0)) throw InvalidArgument("easy_bounds: p must be positive");
    const int v = E.add(P.vm(m)), pr = E.add_proj(m), se = E.add_sec(m);
    auto mean = [=](const Values& x, int first) {
      return std::pow(sum(x, first, n, [p](double t) { return std::pow(t, p); }) / n, 1.0 / p);
    };
    E.link("V_m >= M_p(proj)", ge, [=](const Values& x) { return std::make_pair(x[v], mean(x, pr)); });
    E.link("M_p(proj) >= M_p(sec)", ge, [=](const Values& x) { return std::make_pair(mean(x, pr), mean(x, se)); });
  } else if (id == "trivmax") {
    require_m(id, m, 1, n - 1);
    const int v = E.add(P.vm(m)), pr = E.add_proj(m), se = E.add_sec(m);
    auto mx = [=](const Values& x, int first) { return *std::max_element(x.begin() + first, x.begin() + first + n); };
    E.link("V_m >= max proj", ge, [=](const Values& x) { return std::make_pair(x[v], mx(x, pr)); });
    E.link("max proj >= max sec", ge, [=](const Values& x) { return std::make_pair(mx(x, pr), mx(x, se)); });
  } else if (id == "bm_v1_lower") {
    if (n < 3) throw InvalidArgument("bm_v1_lower: needs n >= 3");
    const int c = E.add(c0_constant(n, opts.quadrature)), v = E.add(P.vm(1)), pr = E.add_proj(1);
    E.link("V_1 >= c0 sum proj", ge,
           [=](const Values& x) { return std::make_pair(x[v], x[c] * sum(x, pr, n, identity)); });
  } else if (id == "heron_n3") {
    if (n != 3) throw InvalidArgument("heron_n3: needs n = 3");
    r.status = IneqStatus::Conjecture;
    const int v = E.add(P.vm(2)), se = E.add_sec(1);
    E.link("V_2^2 >= heron(sec)", ge, [=](const Values& x) {
      const double s2 = sum(x, se, 3, square);
      const double s4 = sum(x, se, 3, [](double t) { return t * t * t * t; });
      return std::make_pair(x[v] * x[v], s2 * s2 / 16.0 - s4 / 8.0);
    });
  } else if (id == "prob4_family" || id == "prob5_family") {
    require_m(id, m, 1, n - 2);
    r.status = IneqStatus::Conjecture;
    DefaultOracle cross_oracle(opts.quadrature);
    BodyProfile cross(Named(NamedId::Cross, n), cross_oracle);
    if (id == "prob4_family") {
      int c;
      if (params.c) {
        c = E.add({*params.c, 0.0, true});
      } else {
        // value attained by the regular cross-polytope
        double s = 0.0, err = 0.0;
        for (int i = 0; i < n; ++i) {
          s += square(cross.proj(i, m).value);
          err += 2.0 * cross.proj(i, m).value * cross.proj(i, m).error;
        }
        const Measure& top = cross.vm(m);
        const double val = square(top.value) / s;
        c = E.add({val, val * (2.0 * top.error / top.value + err / s), top.exact});
      }
      const int v = E.add(P.vm(m)), pr = E.add_proj(m), se = E.add_sec(m);
      E.link("V_m^2 >= c sum proj^2", ge,
             [=](const Values& x) { return std::make_pair(x[v] * x[v], x[c] * sum(x, pr, n, square)); });
      E.link("c sum proj^2 >= c sum sec^2", ge, [=](const Values& x) {
        return std::make_pair(x[c] * sum(x, pr, n, square), x[c] * sum(x, se, n, square));
      });
    } else {
      int c;
      if (params.c) {
        c = E.add({*params.c, 0.0, true});
      } else {
        double log_prod = 0.0, rel = 0.0;
        for (int i = 0; i < n; ++i) {
          log_prod += (m + 1) * std::log(cross.sec(i, m).value);
          rel += (m + 1) * cross.sec(i, m).error / cross.sec(i, m).value;
        }
        const Measure& top = cross.vm(m + 1);
        const double val = std::exp(m * n * std::log(top.value) - log_prod);
        c = E.add({val, val * (m * n * top.error / top.value + rel), top.exact});
      }
      const int v = E.add(P.vm(m + 1)), se = E.add_sec(m);
      E.link("V_{m+1}^(mn) >= c prod sec^(m+1)", ge, [=](const Values& x) {
        double prod = 1.0;
        for (int i = 0; i < n; ++i) prod *= std::pow(x[se + i], m + 1);
        return std::make_pair(std::pow(x[v], m * n), x[c] * prod);
      });
    }
  } else {
    throw InvalidArgument("unknown inequality id '" + id + "'");
  }
  E.finish(r, id, params);
  return r;
}

IneqReport evaluate(const std::string& id, const Body& body, const IneqParams& params, const EvalOptions& opts) {
  DefaultOracle oracle(opts.quadrature);
  BodyProfile profile(body, oracle);
  return evaluate(id, profile, params, opts);
}

}  // namespace convexiq
