#pragma once

namespace convexiq {

/// Volume of the unit ball in R^j: pi^(j/2) / Gamma(j/2 + 1). Defined for real j >= 0.
double kappa(double j);

/// Surface measure of the unit sphere S^(n-1): n * kappa(n).
double sphere_area(int n);

double binomial(int n, int k);

/// c_{n,i} = kappa_{n-i} / binom(n, i).
double c_ni(int n, int i);

/// V_m of a k-dimensional ball of radius r (m <= k).
double ball_intrinsic_volume(int k, int m, double r);

}  // namespace convexiq
