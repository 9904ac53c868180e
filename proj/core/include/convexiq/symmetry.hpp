#pragma once

#include "convexiq/types.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace convexiq {

/// Element of the hyperoctahedral group (symmetries of the cube [-1,1]^n).
///
/// Acts by (g x)[perm[i]] = signs[i] * x[i]: coordinate i is sign-adjusted and
/// moved to slot perm[i]. Indices are 0-based.
class SignedPermutation {
 public:
  SignedPermutation(std::vector<int> perm, std::vector<int> signs);

  static SignedPermutation identity(int n);
  static SignedPermutation random(int n, std::mt19937_64& rng);

  [[nodiscard]] int dim() const { return static_cast<int>(perm_.size()); }
  [[nodiscard]] const std::vector<int>& perm() const { return perm_; }
  [[nodiscard]] const std::vector<int>& signs() const { return signs_; }

  [[nodiscard]] Vec apply(const Vec& x) const;
  /// (this * other)(x) == this->apply(other.apply(x))
  [[nodiscard]] SignedPermutation compose(const SignedPermutation& other) const;
  [[nodiscard]] SignedPermutation inverse() const;
  [[nodiscard]] bool is_identity() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> perm_;
  std::vector<int> signs_;
};

/// 2^n * n!
std::uint64_t hyperoctahedral_order(int n);

/// Visits every group element in a fixed order (permutations in lexicographic
/// order, sign patterns in binary counting order within each permutation).
void for_each_signed_permutation(int n, const std::function<void(const SignedPermutation&)>& visit);

}  // namespace convexiq
