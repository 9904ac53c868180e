#include "convexiq/symmetry.hpp"

#include <algorithm>
#include <numeric>

namespace convexiq {

SignedPermutation::SignedPermutation(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  const int n = static_cast<int>(perm_.size());
  check_dimension(n);
  if (static_cast<int>(signs_.size()) != n) throw InvalidArgument("SignedPermutation: sign vector has wrong length");
  std::vector<char> seen(n, 0);
  for (int p : perm_) {
    if (p < 0 || p >= n || seen[p]) throw InvalidArgument("SignedPermutation: not a permutation");
    seen[p] = 1;
  }
  for (int s : signs_) {
    if (s != 1 && s != -1) throw InvalidArgument("SignedPermutation: signs must be +1 or -1");
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  return {perm, std::vector<int>(n, 1)};
}

SignedPermutation SignedPermutation::random(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // Fisher-Yates with explicit draws keeps the sequence stable across std libs.
  for (int i = n - 1; i > 0; --i) {
    auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(perm[i], perm[j]);
  }
  std::vector<int> signs(n);
  for (int i = 0; i < n; ++i) signs[i] = (rng() & 1u) ? 1 : -1;
  return {perm, signs};
}

Vec SignedPermutation::apply(const Vec& x) const {
  if (x.size() != dim()) throw InvalidArgument("SignedPermutation: dimension mismatch");
  Vec y(dim());
  for (int i = 0; i < dim(); ++i) y(perm_[i]) = signs_[i] * x(i);
  return y;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
  if (other.dim() != dim()) throw InvalidArgument("SignedPermutation: dimension mismatch");
  std::vector<int> perm(dim()), signs(dim());
  for (int i = 0; i < dim(); ++i) {
    perm[i] = perm_[other.perm_[i]];
    signs[i] = signs_[other.perm_[i]] * other.signs_[i];
  }
  return {perm, signs};
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> perm(dim()), signs(dim());
  for (int i = 0; i < dim(); ++i) {
    perm[perm_[i]] = i;
    signs[perm_[i]] = signs_[i];
  }
  return {perm, signs};
}

bool SignedPermutation::is_identity() const {
  for (int i = 0; i < dim(); ++i) {
    if (perm_[i] != i || signs_[i] != 1) return false;
  }
  return true;
}

std::uint64_t hyperoctahedral_order(int n) {
  std::uint64_t order = 1;
  for (int k = 1; k <= n; ++k) order *= 2ull * static_cast<std::uint64_t>(k);
  return order;
}

void for_each_signed_permutation(int n, const std::function<void(const SignedPermutation&)>& visit) {
  check_dimension(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> signs(n);
      for (int i = 0; i < n; ++i) signs[i] = (mask >> i) & 1u ? -1 : 1;
      visit(SignedPermutation(perm, signs));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace convexiq
