#include "bcells/hecke.hpp"

#include <algorithm>

#include "bcells/error.hpp"

namespace bcells {

void HeckeElt::add(ElementIndex w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

LaurentPoly HeckeElt::coefficient(ElementIndex w) const {
  auto it = terms.find(w);
  return it == terms.end() ? LaurentPoly{} : it->second;
}

HeckeElt operator+(const HeckeElt& x, const HeckeElt& y) {
  if (x.basis != y.basis) fail(Error::Kind::InvalidInput, "adding elements in different bases");
  HeckeElt out = x;
  for (const auto& [w, c] : y.terms) out.add(w, c);
  return out;
}

HeckeElt operator-(const HeckeElt& x, const HeckeElt& y) {
  if (x.basis != y.basis) fail(Error::Kind::InvalidInput, "subtracting elements in different bases");
  HeckeElt out = x;
  for (const auto& [w, c] : y.terms) out.add(w, -c);
  return out;
}

HeckeElt operator*(const LaurentPoly& c, const HeckeElt& h) {
  HeckeElt out;
  out.basis = h.basis;
  if (c.is_zero()) return out;
  for (const auto& [w, p] : h.terms) out.add(w, c * p);
  return out;
}

HeckeAlgebra::HeckeAlgebra(int n, WeightFunction weight) : n_(n), weight_(weight), group_(n) {
  const auto size = group_.size();
  left_.assign(static_cast<std::size_t>(n), std::vector<ElementIndex>(size));
  right_.assign(static_cast<std::size_t>(n), std::vector<ElementIndex>(size));
  inverse_.resize(size);
  length_.resize(size);
  for (ElementIndex i = 0; i < size; ++i) {
    const auto& w = group_.at(i);
    for (int g = 0; g < n; ++g) {
      left_[g][i] = group_.index_of(w.left_mul(Generator{g}));
      right_[g][i] = group_.index_of(w.right_mul(Generator{g}));
    }
    inverse_[i] = group_.index_of(w.inverse());
    length_[i] = w.length();
  }
  by_length_.resize(size);
  for (ElementIndex i = 0; i < size; ++i) by_length_[i] = i;
  std::stable_sort(by_length_.begin(), by_length_.end(),
                   [&](ElementIndex x, ElementIndex y) { return length_[x] < length_[y]; });
}

HeckeElt HeckeAlgebra::t_basis(ElementIndex w) const {
  HeckeElt h;
  h.terms.emplace(w, LaurentPoly(1));
  return h;
}

HeckeElt HeckeAlgebra::t_mul_gen(Generator s, const HeckeElt& h) const {
  if (h.basis != Basis::T) fail(Error::Kind::InvalidInput, "t_mul_gen expects a T-basis element");
  const auto q = LaurentPoly::v_minus_inverse(weight_.of(s));
  HeckeElt out;
  for (const auto& [w, c] : h.terms) {
    const auto sw = left_mul(s, w);
    out.add(sw, c);
    if (length_[sw] < length_[w]) out.add(w, q * c);
  }
  return out;
}

HeckeElt HeckeAlgebra::t_mul_gen_right(const HeckeElt& h, Generator s) const {
  if (h.basis != Basis::T) fail(Error::Kind::InvalidInput, "t_mul_gen_right expects a T-basis element");
  const auto q = LaurentPoly::v_minus_inverse(weight_.of(s));
  HeckeElt out;
  for (const auto& [w, c] : h.terms) {
    const auto ws = right_mul(s, w);
    out.add(ws, c);
    if (length_[ws] < length_[w]) out.add(w, q * c);
  }
  return out;
}

HeckeElt HeckeAlgebra::t_mul(const HeckeElt& x, const HeckeElt& y) const {
  if (x.basis != Basis::T || y.basis != Basis::T) fail(Error::Kind::InvalidInput, "t_mul expects T-basis elements");
  HeckeElt out;
  for (const auto& [w, c] : x.terms) {
    HeckeElt acc = y;
    const auto word = reduced_word(group_.at(w));
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = t_mul_gen(*it, acc);
    for (const auto& [z, p] : acc.terms) out.add(z, c * p);
  }
  return out;
}

const HeckeElt& HeckeAlgebra::bar_t(ElementIndex w) const {
  std::call_once(bar_once_, [this] {
    bar_table_.resize(size());
    for (auto x : by_length_) {
      if (length_[x] == 0) {
        bar_table_[x] = t_basis(x);
        continue;
      }
      int g = 0;
      while (!has_left_descent(Generator{g}, x)) ++g;
      const Generator s{g};
      // bar(T_x) = T_s^-1 bar(T_{sx}) and T_s^-1 = T_s - (v^L - v^-L).
      const auto& rest = bar_table_[left_mul(s, x)];
      bar_table_[x] = t_mul_gen(s, rest) - LaurentPoly::v_minus_inverse(weight_.of(s)) * rest;
    }
  });
  return bar_table_[w];
}

HeckeElt HeckeAlgebra::bar(const HeckeElt& h) const {
  if (h.basis != Basis::T) fail(Error::Kind::InvalidInput, "bar expects a T-basis element");
  HeckeElt out;
  for (const auto& [w, c] : h.terms) {
    const auto cb = c.bar();
    for (const auto& [y, p] : bar_t(w).terms) out.add(y, cb * p);
  }
  return out;
}

}  // namespace bcells
