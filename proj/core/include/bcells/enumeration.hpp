#pragma once

// Canonical enumeration of W_n through the tower W_n = X_K · W_{n-1}:
//
//   index(w) = rep_index(w(n)) · |W_{n-1}| + index(pr_K(w))
//
// where rep_index(k) is the length of the unique suffix of t_n sending n to k
// (k = n ↦ 0, …, k = 1 ↦ n-1, k = -1 ↦ n, …, k = -n ↦ 2n-1). Index 0 is the
// identity, and coset decomposition for K is index arithmetic.

#include <cstdint>
#include <span>
#include <vector>

#include "bcells/signed_perm.hpp"

namespace bcells {

using ElementIndex = std::uint32_t;

inline constexpr int kMaxEnumerationRank = 7;

/// 2^n · n!
std::uint64_t group_order(int n);

/// Length of the distinguished X_K representative with rep(n) = k.
int coset_rep_index(int n, int k);

std::uint64_t tower_index(const SignedPerm& w);
SignedPerm tower_element(int n, std::uint64_t index);

/// Lexicographic rank of an (unsigned) permutation window; used to index W_J.
std::uint32_t permutation_rank(std::span<const std::int8_t> perm);
std::vector<int> permutation_unrank(int n, std::uint32_t rank);
std::uint64_t factorial(int n);

class GroupEnumeration {
 public:
  /// Throws InvalidRank unless 1 ≤ n ≤ 7 (|W_7| = 645120).
  explicit GroupEnumeration(int n);

  int rank() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const SignedPerm& at(ElementIndex i) const { return elements_[i]; }
  std::span<const SignedPerm> elements() const { return elements_; }
  ElementIndex index_of(const SignedPerm& w) const;

  /// |W_{n-1}|, the block size of the tower.
  std::size_t block_size() const { return block_; }

 private:
  int n_;
  std::size_t block_;
  std::vector<SignedPerm> elements_;
};

std::vector<SignedPerm> enumerate(int n);

}  // namespace bcells
