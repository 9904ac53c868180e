#pragma once

#include "convexiq/body.hpp"
#include "convexiq/measures.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace convexiq {

enum class IneqStatus { Proven, Conjecture };
enum class EqualityFlag { Strict, NearEquality, EqualityCaseMatched };
enum class Orientation { Geq, Leq };  // lhs >= rhs, lhs <= rhs

std::string to_string(IneqStatus s);
std::string to_string(EqualityFlag f);

struct IneqParams {
  std::optional<int> m;
  std::optional<double> p;
  std::optional<double> c;  // constant of the problem families
  std::vector<double> a;    // weights (weighted_bm)
  std::optional<Vec> u;     // direction (pythagorean)
};

/// Parses "m=2,u=0.6/0.8/0" style parameter lists ('/' separates vector entries).
IneqParams parse_params(const std::string& text);
std::string format_params(const IneqParams& p);

struct CatalogEntry {
  std::string id;
  std::string statement;
  std::vector<std::string> required;  // parameter names
  std::vector<std::string> optional;
};

/// All inequality ids, in catalog order.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& id);  // throws InvalidArgument
bool is_known_inequality(const std::string& id);

/// Source of intrinsic volumes. The default forwards to intrinsic_volume();
/// tests substitute deliberately broken oracles to exercise failure paths.
class MeasureOracle {
 public:
  virtual ~MeasureOracle() = default;
  virtual Measure measure(const Body& body, int m) = 0;
};

class DefaultOracle : public MeasureOracle {
 public:
  explicit DefaultOracle(QuadratureSpec q = {}) : q_(q) {}
  Measure measure(const Body& body, int m) override { return intrinsic_volume(body, m, q_); }

 private:
  QuadratureSpec q_;
};

/// Lazily computed V_m of a body, its coordinate projections and its
/// coordinate sections, shared across all inequalities evaluated on it.
class BodyProfile {
 public:
  BodyProfile(Body body, MeasureOracle& oracle);

  [[nodiscard]] const Body& body() const { return body_; }
  [[nodiscard]] int n() const { return body_.ambient_dim(); }
  [[nodiscard]] int dim() const { return dim_; }

  const Measure& vm(int m);
  const Measure& proj(int i, int m);  // V_m(K|e_i^perp), 0-based i
  const Measure& sec(int i, int m);   // V_m(K cap e_i^perp)
  Measure proj_dir(const Vec& u, int m);
  const Body& projection(int i);
  const Body& section_body(int i);

 private:
  Body body_;
  MeasureOracle* oracle_;
  int dim_;
  std::map<int, Measure> vm_;
  std::map<std::pair<int, int>, Measure> proj_, sec_;
  std::map<int, Body> projections_, sections_;
};

/// One inequality of a chain a >= b >= c is stored as two links.
struct IneqLink {
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0;
  Orientation orientation = Orientation::Geq;
  double oriented_slack = 0.0;  // >= 0 means satisfied
  double tolerance = 0.0;
  double propagated_error = 0.0;
  bool satisfied = true;
  EqualityFlag equality_flag = EqualityFlag::Strict;
  std::string matched_family;
};

struct IneqReport {
  std::string id;
  std::string params;
  int n = 0;
  IneqStatus status = IneqStatus::Proven;
  bool precondition_met = true;
  std::vector<std::string> warnings;
  // Outermost sides of the chain (first link lhs, last link rhs).
  double lhs = 0.0;
  double rhs = 0.0;
  double oriented_slack = 0.0;  // minimum over links
  bool satisfied = true;
  // tolerance, flag and family are those of the link attaining the minimum slack
  double tolerance = 0.0;
  EqualityFlag equality_flag = EqualityFlag::Strict;
  std::string matched_family;
  std::optional<double> quadrature_error;  // largest input error, when any input was inexact
  bool exact = true;
  std::string fingerprint;
  std::vector<IneqLink> links;

  /// A proven inequality, with its preconditions met, failing beyond tolerance.
  [[nodiscard]] bool proven_violation() const {
    return status == IneqStatus::Proven && precondition_met && !satisfied;
  }
};

struct EvalOptions {
  double base_tolerance = 1e-9;  // relative to max(1, |lhs|, |rhs|)
  QuadratureSpec quadrature;
};

IneqReport evaluate(const std::string& id, BodyProfile& profile, const IneqParams& params = {},
                    const EvalOptions& opts = {});

/// Convenience overload using the default oracle.
IneqReport evaluate(const std::string& id, const Body& body, const IneqParams& params = {},
                    const EvalOptions& opts = {});

struct Classification {
  bool matched = false;
  std::string family;  // empty when unmatched
};

/// Tests the body against the equality family stated for link `link` of the
/// inequality (0 = leftmost).
Classification equality_case_classifier(const std::string& id, const Body& body, const IneqParams& params = {},
                                        int link = 0, double tol = 1e-9);

/// Shape of a coordinate cross-polytope conv{[p + a_i e_i, p + b_i e_i]}, a_i <= 0 <= b_i.
struct CrossShape {
  Vec p, a, b;
};
std::optional<CrossShape> coordinate_cross_shape(const Body& body, double tol = 1e-9);
bool is_coordinate_box(const Body& body, double tol = 1e-9);

/// c_0(n) = V_1(C^n) / (n V_1(C^{n-1})); exact for n = 3, quadrature for n >= 4.
Measure c0_constant(int n, const QuadratureSpec& q = {});

/// (1/pi) (Gamma((n-m)/2) / Gamma((n-m+1)/2))^2.
double mth_lower_constant(int n, int m);

}  // namespace convexiq
