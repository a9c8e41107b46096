#include <set>

#include "bcells/cells.hpp"
#include "helpers.hpp"

using namespace bcells;

namespace {

std::uint64_t involutions(int k) {
  std::uint64_t a = 1, b = 1;
  for (int i = 2; i <= k; ++i) {
    const auto c = b + static_cast<std::uint64_t>(i - 1) * a;
    a = b;
    b = c;
  }
  return k == 0 ? 1 : b;
}

// Number of standard bitableaux of size n.
std::uint64_t ybt(int n) {
  std::uint64_t total = 0;
  for (int k = 0; k <= n; ++k) total += oracle::choose(n, k) * involutions(k) * involutions(n - k);
  return total;
}

}  // namespace

TEST_CASE("strongly connected components") {
  const Digraph g{{1}, {2}, {0, 3}, {4}, {3}, {}};
  const auto c = strongly_connected_components(g);
  CHECK(c[0] == c[1]);
  CHECK(c[1] == c[2]);
  CHECK(c[3] == c[4]);
  CHECK(c[0] != c[3]);
  CHECK(c[5] != c[0]);
  CHECK(c[5] != c[3]);
  Digraph chain(20000);
  for (std::uint32_t i = 0; i + 1 < chain.size(); ++i) chain[i].push_back(i + 1);
  chain.back().push_back(0);
  const auto cc = strongly_connected_components(chain);
  CHECK(std::set<std::uint32_t>(cc.begin(), cc.end()).size() == 1);
}

TEST_CASE("generic left cells are counted by standard bitableaux") {
  for (int n = 1; n <= 3; ++n) {
    const auto cells = compute_cells(n, WeightFunction(1, n + 1));
    CHECK(cells.left.num_classes() == ybt(n));
    CHECK(cells.right.num_classes() == ybt(n));
  }
}

TEST_CASE("identity and longest element are singleton cells") {
  for (const WeightFunction w : {WeightFunction(1, 1), WeightFunction(1, 2), WeightFunction(2, 3)}) {
    const auto cells = compute_cells(3, w);
    const GroupEnumeration g(3);
    const auto w0 = g.index_of(longest_element(3));
    for (const auto& part : {cells.left, cells.right, cells.two_sided}) {
      const auto sizes = part.class_sizes();
      CHECK(sizes[part.class_of(0)] == 1);
      CHECK(sizes[part.class_of(w0)] == 1);
    }
  }
}

TEST_CASE("cells are compatible with descents and inversion") {
  for (const WeightFunction w : {WeightFunction(1, 1), WeightFunction(1, 2), WeightFunction(1, 3), WeightFunction(2, 3)}) {
    const auto cells = compute_cells(3, w);
    const GroupEnumeration g(3);
    for (ElementIndex x = 0; x < g.size(); ++x) {
      for (ElementIndex y = 0; y < g.size(); ++y) {
        if (cells.left.class_of(x) == cells.left.class_of(y))
          CHECK(right_descents(g.at(x)) == right_descents(g.at(y)));
        const auto xi = g.index_of(g.at(x).inverse());
        const auto yi = g.index_of(g.at(y).inverse());
        CHECK((cells.right.class_of(x) == cells.right.class_of(y)) ==
              (cells.left.class_of(xi) == cells.left.class_of(yi)));
      }
    }
    CHECK(cells.left.refines(cells.two_sided));
    CHECK(cells.right.refines(cells.two_sided));
  }
}
