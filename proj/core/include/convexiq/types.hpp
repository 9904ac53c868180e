#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace convexiq {

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 8;

// Small fixed-capacity vectors and matrices; no heap traffic for n <= 8.
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxDim, kMaxDim>;

using PointList = std::vector<Vec>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated by the caller (bad dimension, zero direction, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The requested (dimension, order) combination has no implemented measure path.
class Unsupported : public Error {
 public:
  using Error::Error;
};

// A quantity is mathematically undefined for the given input (e.g. 0/0).
class UndefinedValue : public Error {
 public:
  using Error::Error;
};

// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Filesystem failure; the message carries the path.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Builds a vector from an initializer list; checks the 2..8 dimension cap.
Vec make_vec(std::initializer_list<double> coords);

/// Zero vector of dimension n.
Vec zero_vec(int n);

/// Unit basis vector e_i (0-based index) in dimension n.
Vec unit_vec(int n, int i);

void check_dimension(int n);
void check_finite(const Vec& v);

/// 1-based coordinate index i in {1..n}, as in e_i.
struct CoordinateIndex {
  int value = 1;

  /// 0-based position after checking 1 <= value <= n.
  [[nodiscard]] int zero_based(int n) const;
};

/// Lexicographic ordering of coordinates; used for canonical vertex order.
bool lex_less(const Vec& a, const Vec& b);

}  // namespace convexiq
