#include "bcells/cells.hpp"

#include <algorithm>
#include <limits>

namespace bcells {

std::vector<std::uint32_t> strongly_connected_components(const Digraph& graph) {
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  const auto n = static_cast<std::uint32_t>(graph.size());
  std::vector<std::uint32_t> index(n, kNone), low(n, 0), comp(n, kNone);
  std::vector<std::uint8_t> on_stack(n, 0);
  std::vector<std::uint32_t> stack;
  std::vector<std::pair<std::uint32_t, std::size_t>> call;  // (vertex, next edge)
  std::uint32_t counter = 0, components = 0;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kNone) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, edge] = call.back();
      if (edge < graph[v].size()) {
        const auto u = graph[v][edge++];
        if (index[u] == kNone) {
          index[u] = low[u] = counter++;
          stack.push_back(u);
          on_stack[u] = 1;
          call.emplace_back(u, 0);
        } else if (on_stack[u]) {
          low[v] = std::min(low[v], index[u]);
        }
        continue;
      }
      const auto done = v;
      if (low[done] == index[done]) {
        std::uint32_t x;
        do {
          x = stack.back();
          stack.pop_back();
          on_stack[x] = 0;
          comp[x] = components;
        } while (x != done);
        ++components;
      }
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  return comp;
}

Digraph left_preorder_graph(const KLTable& table) {
  const auto& h = table.algebra();
  Digraph graph(h.size());
  for (ElementIndex w = 0; w < h.size(); ++w) {
    auto& out = graph[w];
    for (int g = 0; g < h.rank(); ++g) {
      const Generator s{g};
      const auto sw = h.left_mul(s, w);
      if (h.length(sw) < h.length(w)) continue;
      out.push_back(sw);
      for (const auto& [z, m] : table.mu(s, w)) out.push_back(z);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return graph;
}

namespace {

Digraph inverted(const Digraph& graph, const HeckeAlgebra& h) {
  Digraph out(graph.size());
  for (ElementIndex w = 0; w < graph.size(); ++w) {
    for (auto y : graph[w]) out[h.inverse(w)].push_back(h.inverse(y));
  }
  return out;
}

}  // namespace

GroupPartition left_cells(const KLTable& table) {
  return GroupPartition(table.rank(), strongly_connected_components(left_preorder_graph(table)));
}

GroupPartition right_cells(const KLTable& table) {
  const auto& h = table.algebra();
  return GroupPartition(table.rank(), strongly_connected_components(inverted(left_preorder_graph(table), h)));
}

GroupPartition two_sided_cells(const KLTable& table) {
  const auto& h = table.algebra();
  auto graph = left_preorder_graph(table);
  const auto right = inverted(graph, h);
  for (std::size_t w = 0; w < graph.size(); ++w) graph[w].insert(graph[w].end(), right[w].begin(), right[w].end());
  return GroupPartition(table.rank(), strongly_connected_components(graph));
}

CellPartitions compute_cells(int n, WeightFunction weight, const KLOptions& options) {
  const auto table = kl_basis(n, weight, options);
  return {left_cells(table), right_cells(table), two_sided_cells(table)};
}

}  // namespace bcells
