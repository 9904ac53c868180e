#include "convexiq/types.hpp"

#include <string>

namespace convexiq {

Vec make_vec(std::initializer_list<double> coords) {
  const int n = static_cast<int>(coords.size());
  check_dimension(n);
  Vec v(n);
  int i = 0;
  for (double c : coords) v(i++) = c;
  check_finite(v);
  return v;
}

Vec zero_vec(int n) {
  check_dimension(n);
  return Vec::Zero(n);
}

Vec unit_vec(int n, int i) {
  check_dimension(n);
  if (i < 0 || i >= n) throw InvalidArgument("unit vector index out of range");
  Vec v = Vec::Zero(n);
  v(i) = 1.0;
  return v;
}

void check_dimension(int n) {
  if (n < kMinDim || n > kMaxDim) {
    throw InvalidArgument("ambient dimension " + std::to_string(n) + " outside the supported range 2..8");
  }
}

void check_finite(const Vec& v) {
  if (!v.allFinite()) throw InvalidArgument("vector has NaN or infinite entries");
}

bool lex_less(const Vec& a, const Vec& b) {
  const auto n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return a.size() < b.size();
}

int CoordinateIndex::zero_based(int n) const {
  if (value < 1 || value > n) {
    throw InvalidArgument("coordinate index " + std::to_string(value) + " outside 1.." + std::to_string(n));
  }
  return value - 1;
}

}  // namespace convexiq
