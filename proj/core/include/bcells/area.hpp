#pragma once

// Area_n = ⊔_q Ω_{ζ_q}, the union of the shape fibers for ζ_q = (1^{n-q} | 1^q),
// with its explicit cell decompositions in terms of the words
//
//   a_q = (t)(s1 t)⋯(s_{q-1}⋯s1 t)
//   b_q = (s_{q+1})(s_{q+2} s_{q+1})⋯(s_{n-1}⋯s_{q+1})
//   σ_{n,q} = a_q b_q
//   p_{n,q} = (s_{n-q}⋯s1)(s_{n-q+1}⋯s2)⋯(s_{n-1}⋯s_q)
//           = (s_{n-q}⋯s_{n-1})(s_{n-q-1}⋯s_{n-2})⋯(s1⋯s_q)
//   Π_{n,q} = s_{n-q-1}⋯s1 · t · p_{n,q} = p_{n,q+1} · t · s1⋯s_q
//   χ_q = s_{n-1}⋯s_q
//
// Every identity between these is checked when the words are built.

#include <cstdint>
#include <utility>
#include <vector>

#include "bcells/enumeration.hpp"
#include "bcells/partition.hpp"
#include "bcells/signed_perm.hpp"

namespace bcells {

/// Window test: negative entries strictly decreasing in absolute value and
/// positive entries strictly decreasing. Asserted equal to the shape test.
bool in_area(const SignedPerm& w);
bool in_area_by_window(const SignedPerm& w);
bool in_area_by_shape(const SignedPerm& w);
/// Area_n without w_J and w_J·w_0.
bool in_area_reduced(const SignedPerm& w);

struct AreaWords {
  int n = 0;
  /// Indexed by q = 0..n.
  std::vector<GenWord> a, b, p, p_alt;
  std::vector<SignedPerm> sigma, p_elem;
  /// Indexed by q = 0..n-1.
  std::vector<GenWord> pi_left, pi_right;
  std::vector<SignedPerm> pi_elem;
  /// Indexed by q = 0..n; chi[0] is unused (empty).
  std::vector<GenWord> chi;
  /// Suffixes of p_{n,q}, sorted by (length, window).
  std::vector<std::vector<SignedPerm>> p_suffixes;
  /// Suffixes of p_{n-1,q} embedded in W_n, q = 0..n-1.
  std::vector<std::vector<SignedPerm>> p_lower_suffixes;
};

/// Builds the words and checks: σ = a·b with lengths adding and a, b commuting;
/// both expressions of p_{n,q} agree; both expressions of Π_{n,q} agree and are
/// reduced; p_{n,q} has C(n,q) suffixes; p_{n-1,q} ≤_e p_{n,q};
/// p_{n,q} = p_{n-1,q-1}·χ_q with lengths adding.
AreaWords build_words(int n);

/// p_{m,q} as a word in W_m (first expression), e for q ∈ {0, m}.
GenWord p_word(int m, int q);
GenWord p_word_alt(int m, int q);
GenWord chi_word(int n, int q);

struct AreaCell {
  int q = 0;
  SignedPerm tau;
  /// Position of τ in the sorted suffix list of p_{n,q}.
  int tau_code = 0;
  /// Sorted by window.
  std::vector<SignedPerm> members;
};

/// Γ_q·τ⁻¹ = {π σ_{n,q} τ⁻¹ : π ≤_e p_{n,q}}; checks that every product is reduced.
AreaCell asymptotic_cell(const AreaWords& words, int q, const SignedPerm& tau);

struct AreaDecomposition {
  /// Area_n as element indices, ascending.
  std::vector<ElementIndex> elements;
  std::vector<AreaCell> cells;
  /// Partition of `elements` (by position) into the cells.
  GroupPartition partition;
};

/// All cells Γ_q·τ⁻¹; checks that they tile Area_n, that |Ω_{ζ_q}| = C(n,q)^2,
/// that each cell is a B_n fiber, and that Area_n has 2^n cells.
AreaDecomposition area_decomposition(const GroupEnumeration& group, const AreaWords& words);

struct UpsilonClass {
  int q = 0;
  SignedPerm tau;
  int tau_code = 0;
  std::vector<SignedPerm> members;
};

/// Υ(w) = {z ∈ Area_n : rdes(z) = rdes(w)}.
std::vector<SignedPerm> upsilon(const SignedPerm& w);

/// Υ(σ_{n,q}τ⁻¹) = {π σ_{n,q} τ⁻¹ : π ≤_e Π_{n,q}} for τ ≤_e p_{n-1,q}; checks
/// agreement with the rdes fiber, |Υ| = C(n,q) + C(n,q+1), the splitting
/// Υ = Γ(σ_{n,q}τ⁻¹) ⊔ Γ(σ_{n,q+1}χ_{q+1}⁻¹τ⁻¹), and 2^{n-1} classes in total. Requires n ≥ 2.
struct UpsilonDecomposition {
  std::vector<ElementIndex> elements;
  std::vector<UpsilonClass> classes;
  GroupPartition partition;
};

UpsilonDecomposition upsilon_decomposition(const GroupEnumeration& group, const AreaWords& words);

struct SubcellSplit {
  std::vector<SignedPerm> gamma1;
  std::vector<SignedPerm> gamma2;
};

/// Γ = γ1 ⊔ γ2 with γ1 = {πσ : π ≤_e p_{n-1,q}} and γ2 = {π χ_q σ : π ≤_e p_{n-1,q-1}};
/// both descriptions of each part are computed and compared. For q ∈ {0, n}
/// the cell is a singleton and γ2 = ∅.
SubcellSplit subcell_split(const AreaWords& words, const AreaCell& cell);

}  // namespace bcells
