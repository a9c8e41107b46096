#pragma once

// Right descent sets and the weight-sensitive invariant
//
//   R^Ξ(w) = R(w) ∪ { t_k : 2 ≤ k ≤ n, b > (k-1)a, w(k) < 0 },
//
// with the enhanced descent set (adding t·s1·t) used instead when b < a.

#include <cstdint>
#include <string>
#include <vector>

#include "bcells/enumeration.hpp"
#include "bcells/partition.hpp"
#include "bcells/signed_perm.hpp"

namespace bcells {

struct XiDescentSet {
  /// Bit g.index for each generator g with ℓ(wg) < ℓ(w).
  GenSet classical = 0;
  /// Bit k for each t_k (2 ≤ k ≤ n) in the set.
  std::uint32_t extended = 0;
  /// t·s1·t is a descent (only possible when b < a).
  bool ts1t = false;

  /// Sorted member names, e.g. "t,s2,t3"; the empty set is "{}".
  std::string label() const;
  std::uint64_t key() const {
    return std::uint64_t{classical} | (std::uint64_t{extended} << 20) | (std::uint64_t{ts1t} << 40);
  }

  auto operator<=>(const XiDescentSet&) const = default;
};

GenSet rdes(const SignedPerm& w);

/// Descents among S^L = S ∪ {sts : L(t) > L(s)}. For W_n this adds t_2 = s1·t·s1
/// when b > a and t·s1·t when b < a.
XiDescentSet rdes_enhanced(const SignedPerm& w, const WeightFunction& weight);

XiDescentSet rxi(const SignedPerm& w, const WeightFunction& weight);

GroupPartition rxi_partition(const GroupEnumeration& group, const WeightFunction& weight);
GroupPartition rxi_partition(int n, const WeightFunction& weight);
GroupPartition rdes_partition(const GroupEnumeration& group);

struct FiberCount {
  std::string label;
  std::size_t size;
};

/// Non-empty fibers of R^Ξ in order of their first element.
std::vector<FiberCount> rxi_fibers(const GroupEnumeration& group, const WeightFunction& weight);
/// "label<TAB>size" lines.
std::string fibers_tsv(const std::vector<FiberCount>& fibers);

}  // namespace bcells
