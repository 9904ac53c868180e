#include "convexiq/constants.hpp"

#include "convexiq/types.hpp"

#include <cmath>
#include <numbers>

namespace convexiq {

double kappa(double j) {
  if (j < 0.0) throw InvalidArgument("kappa: negative dimension");
  return std::pow(std::numbers::pi, 0.5 * j) / std::tgamma(0.5 * j + 1.0);
}

double sphere_area(int n) { return n * kappa(n); }

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double c_ni(int n, int i) { return kappa(n - i) / binomial(n, i); }

double ball_intrinsic_volume(int k, int m, double r) {
  if (m < 0 || m > k) return 0.0;
  return binomial(k, m) * kappa(k) / kappa(k - m) * std::pow(r, m);
}

}  // namespace convexiq
