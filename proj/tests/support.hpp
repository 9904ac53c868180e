#pragma once

#include <convexiq/body.hpp>

#include <cmath>
#include <random>

namespace convexiq::test {

inline bool rel_close(double a, double b, double rel, double abs_floor = 0.0) {
  return std::abs(a - b) <= std::max(abs_floor, rel * std::max(std::abs(a), std::abs(b)));
}

inline Vec random_vec(int n, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g;
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = scale * g(rng);
  return v;
}

inline PointList random_points(int n, int count, std::mt19937_64& rng, double scale = 1.0) {
  PointList pts;
  for (int k = 0; k < count; ++k) pts.push_back(random_vec(n, rng, scale));
  return pts;
}

// Frozen bodies shared with tests/oracles/make_oracles.py.
inline VPolytope poly3() {
  return VPolytope::from_points({make_vec({0.9, 0.1, -0.3}), make_vec({-0.7, 0.8, 0.2}), make_vec({0.2, -0.9, 0.5}),
                                 make_vec({-0.4, -0.3, -0.8}), make_vec({0.5, 0.6, 0.7}), make_vec({-0.8, -0.5, 0.4}),
                                 make_vec({0.3, 0.2, -0.9}), make_vec({0.1, 0.95, -0.2})});
}

inline VPolytope poly4() {
  return VPolytope::from_points({make_vec({1.0, 0.2, -0.1, 0.3}), make_vec({-0.6, 0.9, 0.1, -0.2}),
                                 make_vec({0.1, -0.8, 0.7, 0.2}), make_vec({-0.3, -0.2, -0.9, 0.4}),
                                 make_vec({0.4, 0.5, 0.3, -0.9}), make_vec({-0.2, 0.1, 0.2, 1.1}),
                                 make_vec({0.7, -0.4, -0.6, -0.5})});
}

inline Zonotope zono4() {
  return Zonotope(zero_vec(4), {make_vec({1.0, 0.3, -0.2, 0.5}), make_vec({-0.4, 0.8, 0.6, 0.1}),
                                make_vec({0.2, -0.5, 0.9, 0.3}), make_vec({0.6, 0.1, 0.4, -0.7}),
                                make_vec({-0.3, 0.7, -0.2, 0.4})});
}

namespace oracle {
inline constexpr double kPoly3Volume = 1.5853333333333333;
inline constexpr double kPoly3Surface = 7.8211707509931205;
inline constexpr double kPoly3V1 = 3.4556440667468524;
inline constexpr double kPoly4Volume = 0.40952500000000003;
inline constexpr double kPoly4V3 = 2.326591804748792;
inline constexpr double kPoly4V2 = 4.685165377627706;
inline constexpr double kPoly4ProjV2 = 3.289636863696625;
inline constexpr double kPoly4ProjV1 = 3.3068113195683835;
inline constexpr double kZonoV[5] = {1.0, 10.480794374037668, 41.6718387033598, 75.93445802808702,
                                     56.873600000000025};
inline constexpr double kV1Cross4 = 3.6715285729674129;
inline constexpr double kV1Cross3 = 3.324758543877433;
inline constexpr double kC0n3 = 0.39182655203060734;
inline constexpr double kC0n4 = 0.27607482802988502;
inline constexpr double kP25 = 0.58518076917278394;
inline constexpr double kV1K1 = 3.8663397462206386;
}  // namespace oracle

}  // namespace convexiq::test
