#include "convexiq/constructors.hpp"

#include <cmath>
#include <numeric>

namespace convexiq {

std::vector<double> cross_polytope_half_axes(const std::vector<double>& s) {
  const int n = static_cast<int>(s.size());
  check_dimension(n);
  double log_prod = std::lgamma(static_cast<double>(n));  // log (n-1)!
  for (double v : s) {
    if (!(v > 0.0) || !std::isfinite(v)) throw InvalidArgument("section volumes must be positive and finite");
    log_prod += std::log(v);
  }
  const double root = std::exp(log_prod / (n - 1));
  std::vector<double> t(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) t[i] = root / (2.0 * s[i]);
  return t;
}

VPolytope cross_polytope_from_sections(const std::vector<double>& s) {
  const auto t = cross_polytope_half_axes(s);
  const int n = static_cast<int>(t.size());
  PointList pts;
  for (int i = 0; i < n; ++i) {
    pts.push_back(t[i] * unit_vec(n, i));
    pts.push_back(-t[i] * unit_vec(n, i));
  }
  return VPolytope::from_points(pts);
}

SegmentResult segment_from_projections(const std::vector<double>& a) {
  const int n = static_cast<int>(a.size());
  check_dimension(n);
  for (double v : a) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw InvalidArgument("projection lengths must be nonnegative and finite");
  }
  const double total = std::inner_product(a.begin(), a.end(), a.begin(), 0.0);
  SegmentResult out;
  Vec x(n);
  for (int i = 0; i < n; ++i) {
    const double d = total - (n - 1) * a[i] * a[i];
    if (d < 0.0) {
      out.violating_index = i + 1;
      return out;
    }
    x(i) = std::sqrt(d / (n - 1));
  }
  out.feasible = true;
  out.x = x;
  out.segment = VPolytope::from_points({-0.5 * x, 0.5 * x});
  return out;
}

}  // namespace convexiq
