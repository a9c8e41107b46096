#include <map>
#include <set>

#include "bcells/area.hpp"
#include "bcells/cells.hpp"
#include "bcells/descents.hpp"
#include "bcells/tableau.hpp"
#include "helpers.hpp"

using namespace bcells;

namespace {

std::string rxi_label(int n, const char* word, const WeightFunction& w) {
  return rxi(from_word(n, parse_word(word)), w).label();
}

}  // namespace

TEST_CASE("R^Xi on W_2 with b > a") {
  const WeightFunction w(1, 2);
  CHECK(rxi_label(2, "", w) == "{}");
  CHECK(rxi_label(2, "s1", w) == "s1");
  CHECK(rxi_label(2, "t", w) == "t");
  CHECK(rxi_label(2, "s1 t", w) == "t");
  CHECK(rxi_label(2, "t s1", w) == "s1,t2");
  CHECK(rxi_label(2, "s1 t s1", w) == "s1,t2");
  CHECK(rxi_label(2, "t s1 t", w) == "t,t2");
  CHECK(rxi_label(2, "t s1 t s1", w) == "t,s1,t2");
  std::set<std::string> labels;
  for (const auto& x : enumerate(2)) {
    labels.insert(rxi(x, w).label());
    CHECK(rxi(x, w) == rdes_enhanced(x, w));
  }
  CHECK(labels.size() == 6);
  CHECK_FALSE(labels.count("t,s1"));
  CHECK_FALSE(labels.count("t2"));
}

TEST_CASE("R^Xi separates the asymptotic left cells of W_2") {
  const WeightFunction w(1, 2);
  const auto cells = compute_cells(2, w);
  CHECK(cells.left == rxi_partition(2, w));
  CHECK(cells.left.num_classes() == 6);
}

TEST_CASE("extended part matches the reflection length test") {
  for (int n = 2; n <= 4; ++n) {
    const oracle::Cayley cayley(n);
    for (const WeightFunction wt : {WeightFunction(1, 1), WeightFunction(2, 3), WeightFunction(1, 2), WeightFunction(1, 5)}) {
      for (const auto& [win, len] : cayley.elements()) {
        const auto x = test::perm(win);
        const auto r = rxi(x, wt);
        CHECK(r.classical == rdes(x));
        CHECK_FALSE(r.ts1t);
        for (int k = 2; k <= n; ++k) {
          const bool descent = cayley.length(test::win(x * reflection_t(n, k))) < len;
          CHECK(((r.extended >> k) & 1u) == (wt.slope_greater(k - 1) && descent ? 1u : 0u));
        }
      }
    }
  }
}

TEST_CASE("below b = a the enhanced set is used") {
  const WeightFunction w(2, 1);
  for (const auto& x : enumerate(3)) {
    const auto r = rxi(x, w);
    CHECK(r == rdes_enhanced(x, w));
    CHECK(r.extended == 0);
    CHECK(r.ts1t == (x.length() > (x * from_word(3, parse_word("t s1 t"))).length()));
  }
}

TEST_CASE("descents of sigma_{n,q}") {
  for (int n = 2; n <= 6; ++n) {
    const auto words = build_words(n);
    for (int q = 0; q <= n; ++q) {
      GenSet expected = q >= 1 ? gen_bit(Generator::t()) : 0;
      for (int i = q + 1; i <= n - 1; ++i) expected |= gen_bit(Generator::s(i));
      CHECK(rdes(words.sigma[q]) == expected);
      if (q == 0) continue;
      const WeightFunction wt(1, q);
      const auto r = rxi(words.sigma[q], wt);
      for (int k = 2; k <= n; ++k) CHECK((((r.extended >> k) & 1u) != 0) == (k <= q));
    }
  }
}

TEST_CASE("fiber counts") {
  for (int n = 2; n <= 5; ++n) {
    const GroupEnumeration g(n);
    CHECK(rxi_partition(g, WeightFunction(1, n)).num_classes() == 2 * oracle::ipow(3, n - 1));
    for (int k = 1; k <= n - 1; ++k) {
      const auto expected = oracle::ipow(2, n - k) * oracle::ipow(3, k);
      CHECK(rxi_partition(g, WeightFunction(1, k + 1)).num_classes() == expected);
      CHECK(rxi_partition(g, WeightFunction(2, 2 * k + 1)).num_classes() == expected);
    }
    CHECK(rdes_partition(g).num_classes() == oracle::ipow(2, n));
    const auto fibers = rxi_fibers(g, WeightFunction(1, n));
    std::size_t total = 0;
    for (const auto& f : fibers) total += f.size;
    CHECK(total == g.size());
    CHECK(fibers.size() == 2 * oracle::ipow(3, n - 1));
  }
  CHECK(fibers_tsv({{"t", 3}, {"{}", 1}}) == "t\t3\n{}\t1\n");
}

TEST_CASE("R^Xi is constant on left cells") {
  for (int n = 1; n <= 3; ++n) {
    for (const WeightFunction wt : {WeightFunction(1, 1), WeightFunction(2, 1), WeightFunction(3, 2), WeightFunction(1, 2),
                                    WeightFunction(2, 3), WeightFunction(1, 3), WeightFunction(2, 5)}) {
      const auto cells = compute_cells(n, wt);
      CHECK(cells.left.refines(rxi_partition(n, wt)));
    }
  }
  for (const WeightFunction wt : {WeightFunction(1, 3), WeightFunction(1, 4)}) {
    const auto cells = compute_cells(4, wt);
    CHECK(cells.left.refines(rxi_partition(4, wt)));
  }
}

TEST_CASE("on Area, R^Xi fibers agree with rdes fibers") {
  for (int n = 2; n <= 5; ++n) {
    const GroupEnumeration g(n);
    std::vector<std::uint32_t> area;
    for (ElementIndex i = 0; i < g.size(); ++i)
      if (in_area(g.at(i))) area.push_back(i);
    const auto by_rdes = rdes_partition(g).restricted(area);
    for (int b = 1; b <= n - 1; ++b) CHECK(rxi_partition(g, WeightFunction(1, b)).restricted(area) == by_rdes);
    const auto asym = rxi_partition(g, WeightFunction(1, n)).restricted(area);
    CHECK(asym.num_classes() == oracle::ipow(2, n));
    const auto by_b = GroupPartition::from_keys<Bitableau>(n, area.size(), [&](std::size_t i) {
      return rs_generalized(g.at(area[i])).second;
    });
    CHECK(asym == by_b);
  }
}
