#pragma once

// Generalized Knuth relations on signed permutations. At level k:
//   I_k,   1 ≤ i ≤ k-2: w(i+1) < w(i) < w(i+2) or w(i+2) < w(i) < w(i+1)  ⇒  w·s_{i+1}
//   II_k,  1 ≤ i ≤ k-2: w(i+1) < w(i+2) < w(i) or w(i) < w(i+2) < w(i+1)  ⇒  w·s_i
//   III_k, 1 ≤ i ≤ k-1: w(i), w(i+1) of opposite sign                       ⇒  w·s_i

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bcells/enumeration.hpp"
#include "bcells/partition.hpp"
#include "bcells/signed_perm.hpp"

namespace bcells {

enum class KnuthKind { I, II, III };

std::string_view to_string(KnuthKind kind);

/// A relation type together with its level, e.g. III_{n-1}.
struct KnuthRelation {
  KnuthKind kind;
  int level;
};

struct KnuthMove {
  KnuthKind kind;
  int level;
  int position;

  /// The generator by which the move multiplies on the right.
  Generator generator() const { return Generator::s(kind == KnuthKind::I ? position + 1 : position); }
  bool operator==(const KnuthMove&) const = default;
};

/// {I_k, II_k, III_k} restricted to `kinds`.
std::vector<KnuthRelation> relations_at_level(int k, std::initializer_list<KnuthKind> kinds);

bool move_applies(const SignedPerm& w, const KnuthMove& move);
std::vector<std::pair<KnuthMove, SignedPerm>> applicable_moves(const SignedPerm& w,
                                                               std::span<const KnuthRelation> relations);
std::vector<std::pair<KnuthMove, SignedPerm>> applicable_moves(const SignedPerm& w, int k,
                                                               std::initializer_list<KnuthKind> kinds);

/// Connected components of the move graph over all of W_n.
GroupPartition knuth_classes(const GroupEnumeration& group, std::span<const KnuthRelation> relations);
GroupPartition knuth_classes(int n, int k, std::initializer_list<KnuthKind> kinds);

/// Shortest move sequence (kinds I_n, II_n, III_{n-1}) from w to w·s_{n-1},
/// for w ∉ Area_n with w(n-1), w(n) of opposite sign.
std::vector<KnuthMove> welsh_bridge(const SignedPerm& w);
/// Applies the moves in order, checking each one's defining inequality.
SignedPerm apply_moves(const SignedPerm& w, std::span<const KnuthMove> moves);

/// "III@4, I@2"; the empty sequence is "".
std::string format_moves(std::span<const KnuthMove> moves);
/// Parses format_moves output; levels are set to `level`.
std::vector<KnuthMove> parse_moves(std::string_view text, int level);

}  // namespace bcells
