#pragma once

// Cellular self-maps of the parabolics W_J = S_n and W_K = W_{n-1}, their left
// extensions δ^L(xu) = x·δ(u) to W_n, the orbits of V_Ξ = ⟨ε^L, ψ^L⟩, and the
// Vogan classes: the coarsest refinement of the R^Ξ fibers that is stable under
// both extended maps.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bcells/enumeration.hpp"
#include "bcells/partition.hpp"
#include "bcells/signed_perm.hpp"

namespace bcells {

/// Order in which the left cells of a two-sided cell of W_I are cycled.
/// Default: recording (bi)tableaux sorted by row-reading word; Reversed: the
/// opposite order.
enum class OrderPolicy { Default, Reversed };

std::string_view to_string(OrderPolicy policy);

struct CellularMap {
  Parabolic subset = Parabolic::J;
  /// Rank n of the ambient W_n.
  int rank = 0;
  /// Over the index space of W_I: Lehmer rank for S_n, tower index for W_{n-1}.
  std::vector<std::uint32_t> mapping;
  /// Recording (bi)tableaux of each two-sided cell, in cycling order.
  std::vector<std::vector<std::string>> cell_order;

  std::size_t size() const { return mapping.size(); }
};

/// Index of u ∈ W_I in the map's index space. For K, u may be given in W_n
/// (fixing n) or already in W_{n-1}.
std::uint32_t parabolic_index(const CellularMap& map, const SignedPerm& u);
SignedPerm parabolic_element(const CellularMap& map, std::uint32_t index);
SignedPerm apply(const CellularMap& map, const SignedPerm& u);

/// ε(u) = RS⁻¹(P, next(Q)) on S_n.
CellularMap build_epsilon(int n, OrderPolicy policy = OrderPolicy::Default);
/// ψ(u) = RS⁻¹(A, next(B)) on W_{n-1}; requires b > (n-2)a.
CellularMap build_psi(int n, const WeightFunction& weight, OrderPolicy policy = OrderPolicy::Default);

/// δ^L(w) = rep_I(w)·δ(pr_I(w)). The representative is preserved (asserted).
SignedPerm left_extend(const CellularMap& map, const SignedPerm& w);

/// Right/left cells of W_I from RS: Q/P fibers on S_n, B/A fibers on W_{n-1}.
struct ParabolicCells {
  GroupPartition left;
  GroupPartition right;
};
ParabolicCells rs_parabolic_cells(Parabolic subset, int n);

struct AdmissibilityReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks bijectivity and A1 (left cells map to left cells), A3 (u ∼_R δ(u)),
/// A4 (each δ-cycle meets every left cell of its right cell).
AdmissibilityReport verify_admissible(const CellularMap& map, const ParabolicCells& cells);

enum class OrbitGenerators { Both, EpsilonOnly, PsiOnly };
enum class RefinementMode { Simultaneous, Alternating };

struct VoganRun {
  int n = 0;
  WeightFunction weight{1, 1};
  /// ≈_0 (R^Ξ fibers), ≈_1, …; the last entry equals `final`.
  std::vector<GroupPartition> rounds;
  GroupPartition final;

  std::size_t round_count() const { return rounds.size(); }
};

/// ε^L and ψ^L tabulated over the tower enumeration of W_n.
class VoganContext {
 public:
  explicit VoganContext(int n, OrderPolicy policy = OrderPolicy::Default);

  int rank() const { return n_; }
  const GroupEnumeration& group() const { return *group_; }
  const CellularMap& epsilon() const { return epsilon_; }
  const CellularMap& psi() const { return psi_map_; }
  std::uint32_t epsilon_image(ElementIndex w) const { return eps_[w]; }
  std::uint32_t psi_image(ElementIndex w) const { return psi_[w]; }
  ElementIndex inverse_index(ElementIndex w) const { return inv_[w]; }

  /// orb^R: orbits of the selected generators acting on W_n.
  GroupPartition orbits(OrbitGenerators gens = OrbitGenerators::Both) const;
  /// orb^L(w) = {y : y⁻¹ ∈ orb^R(w⁻¹)}.
  GroupPartition left_orbits(OrbitGenerators gens = OrbitGenerators::Both) const;

  /// Requires b > (n-2)a.
  VoganRun vogan_classes(const WeightFunction& weight, RefinementMode mode = RefinementMode::Simultaneous) const;

 private:
  int n_;
  std::shared_ptr<const GroupEnumeration> group_;
  CellularMap epsilon_;
  CellularMap psi_map_;
  std::vector<std::uint32_t> eps_;
  std::vector<std::uint32_t> psi_;
  std::vector<std::uint32_t> inv_;
};

GroupPartition xi_orbits(int n, const WeightFunction& weight);
VoganRun vogan_classes(int n, const WeightFunction& weight);

/// Property (★), closed form: w ∉ rArea_n, or w(n) > 0 and w⁻¹(n) > 0.
bool star_closed_form(const SignedPerm& w);
/// Property (★) from the definition: orb^R(w) meets orb^L(w_{sh(w)'}).
bool star_existential(const VoganContext& ctx, const GroupPartition& right_orbits,
                      const GroupPartition& left_orbits, ElementIndex w);

/// Worker threads for the parallel passes: BCELLS_THREADS, else the hardware count.
unsigned worker_threads();

}  // namespace bcells
