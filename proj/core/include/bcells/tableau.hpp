#pragma once

// Robinson–Schensted for S_n and the generalized correspondence for W_n:
// w ↦ (A_n(w), B_n(w)), where the positive entries of the window are
// row-inserted into A.plus and the absolute values of the negative entries
// into A.minus, B recording the positions at which they occurred.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bcells/signed_perm.hpp"

namespace bcells {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

Partition conjugate(const Partition& p);
std::vector<Partition> partitions(int n);
std::string to_string(const Partition& p);

struct Bipartition {
  Partition plus;
  Partition minus;

  int size() const;
  /// λ' = ((λ⁻)' | (λ⁺)').
  Bipartition conjugate() const;
  /// "(2,1 | 1)"; empty parts print as "-".
  std::string to_string() const;

  auto operator<=>(const Bipartition&) const = default;
};

/// ζ_q = (1^{n-q} | 1^q).
Bipartition zeta(int n, int q);
/// All bipartitions of n, ordered by |plus| descending then lexicographically.
std::vector<Bipartition> bipartitions(int n);

struct StandardTableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  int size() const;
  bool empty() const { return rows.empty(); }
  /// Rows increase, columns increase, no repeated entries.
  bool is_standard() const;
  std::vector<int> entries() const;
  /// Rows top to bottom, concatenated.
  std::vector<int> row_reading_word() const;
  /// Rows separated by ";" with entries separated by spaces; "-" when empty.
  std::string to_string() const;
  static StandardTableau parse(std::string_view text);

  auto operator<=>(const StandardTableau&) const = default;
};

struct Bitableau {
  StandardTableau plus;
  StandardTableau minus;

  Bipartition shape() const { return {plus.shape(), minus.shape()}; }
  int size() const { return plus.size() + minus.size(); }
  /// "plus | minus".
  std::string to_string() const;
  static Bitableau parse(std::string_view text);

  auto operator<=>(const Bitableau&) const = default;
};

/// Row-insert x, returning the row index where the new box appeared.
int row_insert(StandardTableau& t, int x);

/// Classic RS for a permutation of {1,…,n}: (P, Q).
std::pair<StandardTableau, StandardTableau> rs_classic(std::span<const int> perm);
std::pair<StandardTableau, StandardTableau> rs_classic(const SignedPerm& u);
std::vector<int> rs_classic_inverse(const StandardTableau& p, const StandardTableau& q);

/// (A_n(w), B_n(w)).
std::pair<Bitableau, Bitableau> rs_generalized(const SignedPerm& w);
SignedPerm rs_generalized_inverse(const Bitableau& a, const Bitableau& b);

/// sh(w): the shape of A_n(w).
Bipartition shape(const SignedPerm& w);

/// Hook-length count of standard tableaux of a shape.
std::uint64_t count_standard_tableaux(const Partition& shape);
/// Standard bitableaux of shape λ on {1,…,|λ|}: C(n, |λ⁺|)·f^{λ⁺}·f^{λ⁻}.
std::uint64_t count_standard_bitableaux(const Bipartition& shape);
/// YBT(n): standard bitableaux of size n over all shapes.
std::uint64_t count_standard_bitableaux(int n);
std::uint64_t binomial(int n, int k);

/// All standard tableaux of a shape with entries {1,…,|shape|}.
std::vector<StandardTableau> standard_tableaux(const Partition& shape);
/// All standard bitableaux of a shape with entries {1,…,|λ|}.
std::vector<Bitableau> standard_bitableaux(const Bipartition& shape);

/// w_λ = w_{I(λ)}·w_q with q = |λ⁺|; satisfies sh(w_λ) = λ'.
SignedPerm canonical_element(const Bipartition& lambda, int n);

}  // namespace bcells
