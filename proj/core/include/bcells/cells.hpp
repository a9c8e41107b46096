#pragma once

#include <cstdint>
#include <vector>

#include "bcells/kl_basis.hpp"
#include "bcells/partition.hpp"

namespace bcells {

using Digraph = std::vector<std::vector<std::uint32_t>>;

/// Component label per vertex (iterative Tarjan, labels in discovery order of
/// completed components). Works for arbitrarily deep graphs.
std::vector<std::uint32_t> strongly_connected_components(const Digraph& graph);

/// Edge w → y whenever C_y has a non-zero coefficient in C_s C_w for some s.
Digraph left_preorder_graph(const KLTable& table);

GroupPartition left_cells(const KLTable& table);
/// y ∼_R w ⟺ y⁻¹ ∼_L w⁻¹.
GroupPartition right_cells(const KLTable& table);
/// Components of the union of the left and right preorder graphs.
GroupPartition two_sided_cells(const KLTable& table);

struct CellPartitions {
  GroupPartition left;
  GroupPartition right;
  GroupPartition two_sided;
};

CellPartitions compute_cells(int n, WeightFunction weight, const KLOptions& options = {});

}  // namespace bcells
