#include <map>
#include <set>

#include "bcells/area.hpp"
#include "bcells/cells.hpp"
#include "bcells/descents.hpp"
#include "bcells/error.hpp"
#include "bcells/knuth.hpp"
#include "bcells/tableau.hpp"
#include "bcells/vogan.hpp"
#include "helpers.hpp"

using namespace bcells;

namespace {

GroupPartition a_fibers(const GroupEnumeration& g) {
  return GroupPartition::from_keys<Bitableau>(g.rank(), g.size(), [&](std::size_t i) {
    return rs_generalized(g.at(static_cast<ElementIndex>(i))).first;
  });
}

std::vector<std::uint32_t> area_indices(const GroupEnumeration& g) {
  std::vector<std::uint32_t> out;
  for (ElementIndex i = 0; i < g.size(); ++i)
    if (in_area(g.at(i))) out.push_back(i);
  return out;
}

}  // namespace

TEST_CASE("epsilon on S_3") {
  const auto eps = build_epsilon(3);
  CHECK(eps.size() == 6);
  int moved = 0;
  for (std::uint32_t i = 0; i < eps.size(); ++i) {
    const auto u = parabolic_element(eps, i);
    const auto [p, q] = rs_classic(u);
    const auto image = apply(eps, u);
    CHECK(apply(eps, image) == u);
    if (p.shape() == Partition{2, 1}) {
      CHECK(image != u);
      CHECK(rs_classic(image).first == p);
      ++moved;
    } else {
      CHECK(image == u);
    }
  }
  CHECK(moved == 4);
}

TEST_CASE("psi on small ranks") {
  const auto psi2 = build_psi(2, WeightFunction(1, 2));
  for (std::uint32_t i = 0; i < psi2.size(); ++i) CHECK(psi2.mapping[i] == i);
  const auto psi3 = build_psi(3, WeightFunction(1, 2));
  CHECK(psi3.size() == 8);
  for (std::uint32_t i = 0; i < psi3.size(); ++i) {
    const auto u = parabolic_element(psi3, i);
    const auto image = apply(psi3, u);
    CHECK(rs_generalized(image).first == rs_generalized(u).first);
    CHECK((image == u) == (count_standard_bitableaux(shape(u)) == 1));
  }
  CHECK_THROWS_KIND(build_psi(3, WeightFunction(1, 1), OrderPolicy::Default), Regime);
  CHECK_THROWS_KIND(build_psi(4, WeightFunction(2, 4), OrderPolicy::Default), Regime);
  CHECK_NOTHROW(build_psi(4, WeightFunction(2, 5), OrderPolicy::Default));
}

TEST_CASE("admissibility from RS fibers") {
  for (int n = 1; n <= 5; ++n) {
    for (auto policy : {OrderPolicy::Default, OrderPolicy::Reversed}) {
      const auto eps = build_epsilon(n, policy);
      const auto rep = verify_admissible(eps, rs_parabolic_cells(Parabolic::J, n));
      CHECK(rep.ok());
      if (n >= 2) {
        const auto psi = build_psi(n, WeightFunction(1, n - 1), policy);
        CHECK(verify_admissible(psi, rs_parabolic_cells(Parabolic::K, n)).ok());
      }
    }
  }
}

TEST_CASE("psi is admissible for the Hecke-algebra cells of W_{n-1}") {
  for (int n = 2; n <= 5; ++n) {
    const WeightFunction wt(1, n - 1);
    const auto cells = compute_cells(n - 1, wt);
    CHECK(verify_admissible(build_psi(n, wt), ParabolicCells{cells.left, cells.right}).ok());
  }
}

TEST_CASE("admissibility detects broken maps") {
  auto eps = build_epsilon(3);
  const auto cells = rs_parabolic_cells(Parabolic::J, 3);
  eps.mapping[0] = eps.mapping[1];
  CHECK_FALSE(verify_admissible(eps, cells).ok());
  auto eps2 = build_epsilon(3);
  std::vector<std::uint32_t> id(eps2.size());
  for (std::uint32_t i = 0; i < id.size(); ++i) id[i] = i;
  eps2.mapping = id;
  CHECK_FALSE(verify_admissible(eps2, cells).ok());
}

TEST_CASE("left extensions match the context tables") {
  for (int n = 2; n <= 4; ++n) {
    const VoganContext ctx(n);
    const auto& g = ctx.group();
    for (ElementIndex i = 0; i < g.size(); ++i) {
      const auto w = g.at(i);
      const auto e = left_extend(ctx.epsilon(), w);
      const auto p = left_extend(ctx.psi(), w);
      CHECK(g.at(ctx.epsilon_image(i)) == e);
      CHECK(g.at(ctx.psi_image(i)) == p);
      CHECK(coset_decompose(e, Parabolic::J).rep == coset_decompose(w, Parabolic::J).rep);
      CHECK(coset_decompose(p, Parabolic::K).rep == coset_decompose(w, Parabolic::K).rep);
      CHECK(g.at(ctx.inverse_index(i)) == w.inverse());
      if (in_parabolic(w, Parabolic::J)) CHECK(e == apply(ctx.epsilon(), w));
      if (in_parabolic(w, Parabolic::K)) CHECK(p == apply(ctx.psi(), w));
    }
  }
}

TEST_CASE("orbit count and orbit structure") {
  for (int n = 2; n <= 5; ++n) {
    const VoganContext ctx(n);
    const auto& g = ctx.group();
    const auto orb = ctx.orbits();
    CHECK(orb.num_classes() == count_standard_bitableaux(n) + oracle::ipow(2, n) - 2);
    const auto fibers = a_fibers(g);
    CHECK(orb.refines(fibers));
    std::map<ClassId, std::set<ClassId>> split;
    for (ElementIndex i = 0; i < g.size(); ++i) {
      const auto w = g.at(i);
      if (!in_area_reduced(w)) {
        CHECK(split[fibers.class_of(i)].size() <= 1);
      }
      split[fibers.class_of(i)].insert(orb.class_of(i));
    }
    for (ElementIndex i = 0; i < g.size(); ++i) {
      const auto w = g.at(i);
      const auto& parts = split[fibers.class_of(i)];
      CHECK(parts.size() == (in_area_reduced(w) ? 2u : 1u));
      for (ElementIndex j = 0; j < g.size(); ++j) {
        if (fibers.class_of(j) != fibers.class_of(i) || !in_area_reduced(w)) continue;
        CHECK((orb.class_of(i) == orb.class_of(j)) == ((w(n) > 0) == (g.at(j)(n) > 0)));
      }
    }
    CHECK(xi_orbits(n, WeightFunction(1, n)) == orb);
    CHECK_THROWS_KIND(xi_orbits(n + 1, WeightFunction(1, n - 1)), Regime);
  }
}

TEST_CASE("on Area each generator alone gives the same orbits") {
  for (int n = 2; n <= 5; ++n) {
    const VoganContext ctx(n);
    const auto area = area_indices(ctx.group());
    const auto both = ctx.orbits().restricted(area);
    CHECK(ctx.orbits(OrbitGenerators::EpsilonOnly).restricted(area) == both);
    CHECK(ctx.orbits(OrbitGenerators::PsiOnly).restricted(area) == both);
  }
}

TEST_CASE("left orbits are inverse right orbits") {
  const VoganContext ctx(3);
  const auto r = ctx.orbits();
  const auto l = ctx.left_orbits();
  for (ElementIndex i = 0; i < ctx.group().size(); ++i)
    for (ElementIndex j = 0; j < ctx.group().size(); ++j)
      CHECK((l.class_of(i) == l.class_of(j)) == (r.class_of(ctx.inverse_index(i)) == r.class_of(ctx.inverse_index(j))));
}

TEST_CASE("refinement runs are monotone fixpoints") {
  for (int n = 2; n <= 5; ++n) {
    const VoganContext ctx(n);
    for (const WeightFunction wt : {WeightFunction(1, n), WeightFunction(1, n - 1)}) {
      const auto run = ctx.vogan_classes(wt);
      CHECK(run.rounds.front() == rxi_partition(ctx.group(), wt));
      CHECK(run.rounds.back() == run.final);
      for (std::size_t k = 1; k < run.rounds.size(); ++k) CHECK(run.rounds[k].refines(run.rounds[k - 1]));
      for (ElementIndex i = 0; i < ctx.group().size(); ++i) {
        for (ElementIndex j = i + 1; j < ctx.group().size() && j < i + 50; ++j) {
          if (run.final.class_of(i) != run.final.class_of(j)) continue;
          CHECK(run.final.class_of(ctx.epsilon_image(i)) == run.final.class_of(ctx.epsilon_image(j)));
          CHECK(run.final.class_of(ctx.psi_image(i)) == run.final.class_of(ctx.psi_image(j)));
        }
      }
      const auto area = area_indices(ctx.group());
      std::set<ClassId> inside;
      for (auto i : area) inside.insert(run.final.class_of(i));
      std::size_t members = 0;
      for (ElementIndex i = 0; i < ctx.group().size(); ++i) members += inside.count(run.final.class_of(i));
      CHECK(members == area.size());
    }
    if (n >= 3) CHECK_THROWS_KIND(ctx.vogan_classes(WeightFunction(1, n - 2)), Regime);
  }
}

TEST_CASE("simultaneous and alternating refinement agree") {
  for (int n = 2; n <= 4; ++n) {
    const VoganContext ctx(n);
    for (const WeightFunction wt : {WeightFunction(1, n), WeightFunction(1, n - 1)})
      CHECK(ctx.vogan_classes(wt, RefinementMode::Simultaneous).final ==
            ctx.vogan_classes(wt, RefinementMode::Alternating).final);
  }
}

TEST_CASE("orbits and classes do not depend on the order policy") {
  for (int n = 2; n <= 4; ++n) {
    const VoganContext a(n, OrderPolicy::Default);
    const VoganContext b(n, OrderPolicy::Reversed);
    CHECK(a.orbits() == b.orbits());
    for (const WeightFunction wt : {WeightFunction(1, n), WeightFunction(1, n - 1)})
      CHECK(a.vogan_classes(wt).final == b.vogan_classes(wt).final);
  }
}

TEST_CASE("left cells refine Vogan classes and contain inverse orbits") {
  for (int n = 2; n <= 4; ++n) {
    const VoganContext ctx(n);
    const auto inverse_orbits = ctx.left_orbits();
    std::vector<WeightFunction> weights{WeightFunction(1, n), WeightFunction(1, n - 1), WeightFunction(2, 2 * n - 3)};
    if (n == 2) weights.pop_back();
    for (const auto& wt : weights) {
      const auto cells = compute_cells(n, wt);
      const auto classes = ctx.vogan_classes(wt).final;
      CHECK(cells.left.refines(classes));
      CHECK(inverse_orbits.refines(cells.left));
    }
  }
}

TEST_CASE("sub-asymptotic classes coincide with the intermediate ones") {
  for (int n = 3; n <= 6; ++n) {
    const VoganContext ctx(n);
    const auto inter = ctx.vogan_classes(WeightFunction(1, n - 1)).final;
    CHECK(ctx.vogan_classes(WeightFunction(2, 2 * n - 3)).final == inter);
    CHECK(ctx.vogan_classes(WeightFunction(3, 3 * n - 4)).final == inter);
  }
}

TEST_CASE("Vogan classes on W_2 are the left cells") {
  const auto run = vogan_classes(2, WeightFunction(1, 2));
  CHECK(run.final.num_classes() == 6);
  CHECK(run.final == compute_cells(2, WeightFunction(1, 2)).left);
}

TEST_CASE("property star: closed form against the definition") {
  for (int n = 2; n <= 3; ++n) {
    const VoganContext ctx(n);
    const auto r = ctx.orbits();
    const auto l = ctx.left_orbits();
    for (ElementIndex i = 0; i < ctx.group().size(); ++i)
      CHECK(star_closed_form(ctx.group().at(i)) == star_existential(ctx, r, l, i));
  }
}

TEST_CASE("Welsh bridges stay inside an orbit") {
  for (int n = 2; n <= 4; ++n) {
    const VoganContext ctx(n);
    const auto orb = ctx.orbits();
    const auto& g = ctx.group();
    for (ElementIndex i = 0; i < g.size(); ++i) {
      const auto w = g.at(i);
      if (in_area(w) || (w(n - 1) < 0) == (w(n) < 0)) continue;
      const auto end = apply_moves(w, welsh_bridge(w));
      CHECK(orb.class_of(g.index_of(end)) == orb.class_of(i));
    }
  }
}

TEST_CASE("worker thread count is positive") { CHECK(worker_threads() >= 1); }
