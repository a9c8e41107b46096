#pragma once

// Kazhdan–Lusztig basis C_w = T_w + Σ_{y<w} p_{y,w} T_y (p_{y,w} ∈ v^-1 Z[v^-1],
// bar(C_w) = C_w) and the M-polynomials of C_s C_w = C_{sw} + Σ_z M^s_{z,w} C_z.

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bcells/hecke.hpp"

namespace bcells {

enum class DescentChoice { Smallest, Largest };

struct KLOptions {
  DescentChoice descent = DescentChoice::Smallest;
  /// Check bar(C_w) = C_w through the bar(T_w) table.
  bool verify_bar = false;
  /// Check C_s C_w = (v^L + v^-L) C_w whenever sw < w.
  bool verify_degenerate = false;
  /// Default budget is n ≤ 4.
  bool allow_rank5 = false;
};

class KLTable {
 public:
  using Expansion = std::vector<std::pair<ElementIndex, LaurentPoly>>;

  const HeckeAlgebra& algebra() const { return *algebra_; }
  std::shared_ptr<const HeckeAlgebra> algebra_ptr() const { return algebra_; }
  int rank() const { return algebra_->rank(); }
  const WeightFunction& weight() const { return algebra_->weight(); }
  std::size_t size() const { return c_.size(); }

  /// T-expansion of C_w sorted by element index, including T_w itself.
  const Expansion& c_expansion(ElementIndex w) const { return c_[w]; }
  HeckeElt c_element(ElementIndex w) const;
  LaurentPoly p(ElementIndex y, ElementIndex w) const;

  /// Non-zero M^s_{z,w} for sw > w, sorted by z. Empty when sw < w.
  const Expansion& mu(Generator s, ElementIndex w) const { return mu_[s.index][w]; }

  /// Lines "y w : p_{y,w}" for every non-zero p_{y,w}.
  std::string export_text() const;

 private:
  friend KLTable kl_basis(std::shared_ptr<const HeckeAlgebra>, const KLOptions&);

  std::shared_ptr<const HeckeAlgebra> algebra_;
  std::vector<Expansion> c_;
  std::vector<std::vector<Expansion>> mu_;
};

KLTable kl_basis(std::shared_ptr<const HeckeAlgebra> algebra, const KLOptions& options = {});
KLTable kl_basis(int n, WeightFunction weight, const KLOptions& options = {});

struct KLEntry {
  SignedPerm y;
  SignedPerm w;
  LaurentPoly p;
};

std::vector<KLEntry> parse_kl_export(std::string_view text);

}  // namespace bcells
