#pragma once

// Iwahori–Hecke algebra of W_n over Z[v, v^-1] with parameters v^{L(s)}:
//
//   T_s T_w = T_{sw}                              if sw > w
//   T_s T_w = T_{sw} + (v^{L(s)} - v^{-L(s)}) T_w  if sw < w

#include <map>
#include <mutex>
#include <vector>

#include "bcells/enumeration.hpp"
#include "bcells/laurent_poly.hpp"
#include "bcells/signed_perm.hpp"

namespace bcells {

enum class Basis { T, C };

struct HeckeElt {
  Basis basis = Basis::T;
  std::map<ElementIndex, LaurentPoly> terms;

  /// Adds c·B_w, dropping the term if it cancels.
  void add(ElementIndex w, const LaurentPoly& c);
  LaurentPoly coefficient(ElementIndex w) const;
  bool is_zero() const { return terms.empty(); }

  friend bool operator==(const HeckeElt& x, const HeckeElt& y) {
    return x.basis == y.basis && x.terms == y.terms;
  }
};

HeckeElt operator+(const HeckeElt& x, const HeckeElt& y);
HeckeElt operator-(const HeckeElt& x, const HeckeElt& y);
HeckeElt operator*(const LaurentPoly& c, const HeckeElt& h);

class HeckeAlgebra {
 public:
  HeckeAlgebra(int n, WeightFunction weight);

  int rank() const { return n_; }
  const WeightFunction& weight() const { return weight_; }
  const GroupEnumeration& group() const { return group_; }
  std::size_t size() const { return group_.size(); }

  ElementIndex left_mul(Generator s, ElementIndex w) const { return left_[s.index][w]; }
  ElementIndex right_mul(Generator s, ElementIndex w) const { return right_[s.index][w]; }
  ElementIndex inverse(ElementIndex w) const { return inverse_[w]; }
  int length(ElementIndex w) const { return length_[w]; }
  bool has_left_descent(Generator s, ElementIndex w) const { return length_[left_[s.index][w]] < length_[w]; }

  /// Element indices sorted by (length, index).
  const std::vector<ElementIndex>& length_order() const { return by_length_; }

  HeckeElt t_basis(ElementIndex w) const;
  HeckeElt t_basis(const SignedPerm& w) const { return t_basis(group_.index_of(w)); }

  /// T_s · h for h in the T-basis.
  HeckeElt t_mul_gen(Generator s, const HeckeElt& h) const;
  /// h · T_s for h in the T-basis.
  HeckeElt t_mul_gen_right(const HeckeElt& h, Generator s) const;
  /// General product of two T-basis elements.
  HeckeElt t_mul(const HeckeElt& x, const HeckeElt& y) const;

  /// Bar involution on a T-basis element: v ↦ v^-1, T_w ↦ T_{w^-1}^-1.
  HeckeElt bar(const HeckeElt& h) const;
  /// bar(T_w) expanded in the T-basis; the table is built on first use.
  const HeckeElt& bar_t(ElementIndex w) const;

 private:
  int n_;
  WeightFunction weight_;
  GroupEnumeration group_;
  std::vector<std::vector<ElementIndex>> left_;
  std::vector<std::vector<ElementIndex>> right_;
  std::vector<ElementIndex> inverse_;
  std::vector<int> length_;
  std::vector<ElementIndex> by_length_;

  mutable std::once_flag bar_once_;
  mutable std::vector<HeckeElt> bar_table_;
};

}  // namespace bcells
