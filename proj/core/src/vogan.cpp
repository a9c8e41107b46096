#include "bcells/vogan.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>
#include <unordered_map>

#include "bcells/area.hpp"
#include "bcells/descents.hpp"
#include "bcells/error.hpp"
#include "bcells/tableau.hpp"

namespace bcells {

namespace {

template <class Fn>
void parallel_for(std::size_t size, Fn&& fn) {
  const std::size_t threads = std::min<std::size_t>(worker_threads(), std::max<std::size_t>(1, size / 4096));
  if (threads <= 1) {
    for (std::size_t i = 0; i < size; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (size + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(size, lo + chunk);
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

void require_psi_regime(int n, const WeightFunction& weight) {
  if (!weight.slope_greater(n - 2))
    fail(Error::Kind::Regime, "psi requires b > (n-2)a; got " + weight.to_string() + " at n = " + std::to_string(n));
}

std::vector<int> to_ints(std::span<const std::int8_t> w) { return {w.begin(), w.end()}; }

std::uint32_t lehmer(std::span<const int> perm) {
  std::vector<std::int8_t> w(perm.begin(), perm.end());
  return permutation_rank(w);
}

/// Cyclic successor of each recording tableau within its shape.
template <class Tab, class Shape, class ReadKey>
std::map<Tab, Tab> successors(const std::vector<Tab>& recordings, OrderPolicy policy,
                              std::vector<std::vector<std::string>>& order, ReadKey&& read_key) {
  std::map<Shape, std::vector<Tab>> by_shape;
  for (const auto& t : recordings) by_shape[t.shape()].push_back(t);
  std::map<Tab, Tab> next;
  for (auto& [shape, tabs] : by_shape) {
    std::sort(tabs.begin(), tabs.end(), [&](const Tab& x, const Tab& y) { return read_key(x) < read_key(y); });
    tabs.erase(std::unique(tabs.begin(), tabs.end()), tabs.end());
    if (policy == OrderPolicy::Reversed) std::reverse(tabs.begin(), tabs.end());
    std::vector<std::string> names;
    for (std::size_t i = 0; i < tabs.size(); ++i) {
      next.emplace(tabs[i], tabs[(i + 1) % tabs.size()]);
      names.push_back(tabs[i].to_string());
    }
    order.push_back(std::move(names));
  }
  return next;
}

CellularMap build_psi_table(int n, OrderPolicy policy) {
  if (n < 2 || n > kMaxEnumerationRank) fail(Error::Kind::InvalidRank, "psi: rank must be in 2..7");
  const GroupEnumeration sub(n - 1);
  CellularMap map;
  map.subset = Parabolic::K;
  map.rank = n;
  std::vector<std::pair<Bitableau, Bitableau>> rs(sub.size());
  std::vector<Bitableau> recordings;
  for (ElementIndex i = 0; i < sub.size(); ++i) {
    rs[i] = rs_generalized(sub.at(i));
    recordings.push_back(rs[i].second);
  }
  const auto next = successors<Bitableau, Bipartition>(recordings, policy, map.cell_order, [](const Bitableau& b) {
    return std::make_pair(b.plus.row_reading_word(), b.minus.row_reading_word());
  });
  map.mapping.resize(sub.size());
  for (ElementIndex i = 0; i < sub.size(); ++i)
    map.mapping[i] = sub.index_of(rs_generalized_inverse(rs[i].first, next.at(rs[i].second)));
  return map;
}

}  // namespace

unsigned worker_threads() {
  if (const char* env = std::getenv("BCELLS_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string_view to_string(OrderPolicy policy) { return policy == OrderPolicy::Default ? "default" : "reversed"; }

std::uint32_t parabolic_index(const CellularMap& map, const SignedPerm& u) {
  if (map.subset == Parabolic::J) {
    if (u.rank() != map.rank || u.length_t() != 0) fail(Error::Kind::Domain, u.to_string() + " is not in W_J");
    return permutation_rank(u.window());
  }
  const auto v = u.rank() == map.rank ? drop_last(u) : u;
  if (v.rank() != map.rank - 1) fail(Error::Kind::Domain, u.to_string() + " is not in W_K");
  return static_cast<std::uint32_t>(tower_index(v));
}

SignedPerm parabolic_element(const CellularMap& map, std::uint32_t index) {
  if (index >= map.size()) fail(Error::Kind::Domain, "parabolic index out of range");
  if (map.subset == Parabolic::J) return SignedPerm::from_window(permutation_unrank(map.rank, index));
  return tower_element(map.rank - 1, index);
}

SignedPerm apply(const CellularMap& map, const SignedPerm& u) {
  const auto image = parabolic_element(map, map.mapping[parabolic_index(map, u)]);
  return image.rank() == u.rank() ? image : embed(image, u.rank());
}

CellularMap build_epsilon(int n, OrderPolicy policy) {
  if (n < 1 || n > kMaxEnumerationRank) fail(Error::Kind::InvalidRank, "epsilon: rank must be in 1..7");
  const auto size = static_cast<std::uint32_t>(factorial(n));
  CellularMap map;
  map.subset = Parabolic::J;
  map.rank = n;
  std::vector<std::pair<StandardTableau, StandardTableau>> rs(size);
  std::vector<StandardTableau> recordings;
  for (std::uint32_t r = 0; r < size; ++r) {
    rs[r] = rs_classic(permutation_unrank(n, r));
    recordings.push_back(rs[r].second);
  }
  const auto next = successors<StandardTableau, Partition>(recordings, policy, map.cell_order,
                                                           [](const StandardTableau& t) { return t.row_reading_word(); });
  map.mapping.resize(size);
  for (std::uint32_t r = 0; r < size; ++r) map.mapping[r] = lehmer(rs_classic_inverse(rs[r].first, next.at(rs[r].second)));
  return map;
}

CellularMap build_psi(int n, const WeightFunction& weight, OrderPolicy policy) {
  require_psi_regime(n, weight);
  return build_psi_table(n, policy);
}

SignedPerm left_extend(const CellularMap& map, const SignedPerm& w) {
  if (w.rank() != map.rank) fail(Error::Kind::Domain, "left_extend: rank mismatch");
  const auto d = coset_decompose(w, map.subset);
  const auto out = d.rep * apply(map, d.part);
  require_invariant(coset_decompose(out, map.subset).rep == d.rep, "left extension changed the coset representative");
  return out;
}

ParabolicCells rs_parabolic_cells(Parabolic subset, int n) {
  if (subset == Parabolic::J) {
    const auto size = static_cast<std::size_t>(factorial(n));
    std::vector<std::pair<StandardTableau, StandardTableau>> rs(size);
    for (std::size_t r = 0; r < size; ++r) rs[r] = rs_classic(permutation_unrank(n, static_cast<std::uint32_t>(r)));
    return {GroupPartition::from_keys<StandardTableau>(n, size, [&](std::size_t i) { return rs[i].second; }),
            GroupPartition::from_keys<StandardTableau>(n, size, [&](std::size_t i) { return rs[i].first; })};
  }
  const GroupEnumeration sub(n - 1);
  std::vector<std::pair<Bitableau, Bitableau>> rs(sub.size());
  for (ElementIndex i = 0; i < sub.size(); ++i) rs[i] = rs_generalized(sub.at(i));
  return {GroupPartition::from_keys<Bitableau>(n - 1, sub.size(), [&](std::size_t i) { return rs[i].second; }),
          GroupPartition::from_keys<Bitableau>(n - 1, sub.size(), [&](std::size_t i) { return rs[i].first; })};
}

AdmissibilityReport verify_admissible(const CellularMap& map, const ParabolicCells& cells) {
  AdmissibilityReport report;
  const std::size_t size = map.size();
  constexpr std::size_t kMaxReported = 20;
  auto violate = [&](const std::string& msg) {
    if (report.violations.size() < kMaxReported) report.violations.push_back(msg);
  };
  if (cells.left.size() != size || cells.right.size() != size) {
    violate("cell partitions do not match the parabolic size");
    return report;
  }
  auto name = [&](std::size_t i) { return parabolic_element(map, static_cast<std::uint32_t>(i)).to_string(); };

  std::vector<bool> hit(size, false);
  for (std::size_t u = 0; u < size; ++u) {
    if (map.mapping[u] >= size || hit[map.mapping[u]]) violate("not a bijection at " + name(u));
    else hit[map.mapping[u]] = true;
  }
  if (!report.ok()) return report;

  const auto left_sizes = cells.left.class_sizes();
  std::vector<std::int64_t> image_cell(cells.left.num_classes(), -1);
  for (std::size_t u = 0; u < size; ++u) {
    const auto c = cells.left.class_of(u);
    const auto d = cells.left.class_of(map.mapping[u]);
    if (image_cell[c] < 0) image_cell[c] = d;
    else if (image_cell[c] != d) violate("A1: the left cell of " + name(u) + " is split by the map");
  }
  for (std::size_t c = 0; c < image_cell.size(); ++c)
    if (image_cell[c] >= 0 && left_sizes[c] != left_sizes[static_cast<std::size_t>(image_cell[c])])
      violate("A1: left cell " + std::to_string(c) + " is not mapped onto a left cell");

  for (std::size_t u = 0; u < size; ++u)
    if (cells.right.class_of(u) != cells.right.class_of(map.mapping[u]))
      violate("A3: " + name(u) + " and its image lie in different right cells");

  std::vector<std::set<ClassId>> lefts_in_right(cells.right.num_classes());
  for (std::size_t u = 0; u < size; ++u) lefts_in_right[cells.right.class_of(u)].insert(cells.left.class_of(u));
  std::vector<bool> seen(size, false);
  for (std::size_t u = 0; u < size; ++u) {
    if (seen[u]) continue;
    std::set<ClassId> visited;
    for (std::size_t x = u; !seen[x]; x = map.mapping[x]) {
      seen[x] = true;
      visited.insert(cells.left.class_of(x));
    }
    if (visited != lefts_in_right[cells.right.class_of(u)])
      violate("A4: the cycle through " + name(u) + " misses a left cell of its right cell");
  }
  return report;
}

VoganContext::VoganContext(int n, OrderPolicy policy)
    : n_(n),
      group_(std::make_shared<const GroupEnumeration>(n)),
      epsilon_(build_epsilon(n, policy)),
      psi_map_(build_psi_table(n, policy)) {
  const auto size = group_->size();
  const auto block = group_->block_size();
  std::vector<std::vector<int>> eps_window(epsilon_.size());
  for (std::uint32_t r = 0; r < epsilon_.size(); ++r) eps_window[r] = permutation_unrank(n, epsilon_.mapping[r]);
  eps_.resize(size);
  psi_.resize(size);
  inv_.resize(size);
  parallel_for(size, [&](std::size_t i) {
    const auto& w = group_->at(static_cast<ElementIndex>(i));
    std::vector<int> sorted = to_ints(w.window());
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::int8_t> part(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      part[j] = static_cast<std::int8_t>(std::lower_bound(sorted.begin(), sorted.end(), w(j + 1)) - sorted.begin() + 1);
    const auto& image = eps_window[permutation_rank(part)];
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) out[j] = sorted[static_cast<std::size_t>(image[j] - 1)];
    eps_[i] = static_cast<std::uint32_t>(tower_index(SignedPerm::from_window(out)));
    psi_[i] = static_cast<std::uint32_t>((i / block) * block + psi_map_.mapping[i % block]);
    inv_[i] = static_cast<std::uint32_t>(tower_index(w.inverse()));
  });
}

GroupPartition VoganContext::orbits(OrbitGenerators gens) const {
  DisjointSets sets(group_->size());
  for (std::uint32_t w = 0; w < group_->size(); ++w) {
    if (gens != OrbitGenerators::PsiOnly) sets.unite(w, eps_[w]);
    if (gens != OrbitGenerators::EpsilonOnly) sets.unite(w, psi_[w]);
  }
  return sets.partition(n_);
}

GroupPartition VoganContext::left_orbits(OrbitGenerators gens) const {
  const auto right = orbits(gens);
  std::vector<ClassId> labels(group_->size());
  for (std::size_t w = 0; w < labels.size(); ++w) labels[w] = right.class_of(inv_[w]);
  return GroupPartition(n_, std::move(labels));
}

namespace {

/// Splits `cls` by the classes of the images under the given maps.
GroupPartition refine(const GroupPartition& cls, const std::uint32_t* first, const std::uint32_t* second) {
  const std::size_t size = cls.size();
  std::vector<std::uint64_t> keys(size);
  parallel_for(size, [&](std::size_t w) {
    std::uint64_t key = cls.class_of(w);
    key = (key << 21) | (first ? cls.class_of(first[w]) : 0);
    key = (key << 21) | (second ? cls.class_of(second[w]) : 0);
    keys[w] = key;
  });
  std::unordered_map<std::uint64_t, ClassId> ids;
  ids.reserve(cls.num_classes() * 2);
  std::vector<ClassId> labels(size);
  for (std::size_t w = 0; w < size; ++w)
    labels[w] = ids.try_emplace(keys[w], static_cast<ClassId>(ids.size())).first->second;
  return GroupPartition(cls.rank(), std::move(labels));
}

}  // namespace

VoganRun VoganContext::vogan_classes(const WeightFunction& weight, RefinementMode mode) const {
  require_psi_regime(n_, weight);
  VoganRun run;
  run.n = n_;
  run.weight = weight;
  run.rounds.push_back(rxi_partition(*group_, weight));
  for (;;) {
    const auto& cur = run.rounds.back();
    GroupPartition next;
    if (mode == RefinementMode::Simultaneous) {
      next = refine(cur, eps_.data(), psi_.data());
    } else {
      next = refine(refine(cur, eps_.data(), nullptr), psi_.data(), nullptr);
    }
    require_invariant(next.refines(cur), "refinement round does not refine the previous round");
    if (next.num_classes() == cur.num_classes()) break;
    run.rounds.push_back(std::move(next));
  }
  run.final = run.rounds.back();
  return run;
}

GroupPartition xi_orbits(int n, const WeightFunction& weight) {
  require_psi_regime(n, weight);
  return VoganContext(n).orbits();
}

VoganRun vogan_classes(int n, const WeightFunction& weight) {
  require_psi_regime(n, weight);
  return VoganContext(n).vogan_classes(weight);
}

bool star_closed_form(const SignedPerm& w) {
  const int n = w.rank();
  if (!in_area_reduced(w)) return true;
  return w(n) > 0 && w.inverse()(n) > 0;
}

bool star_existential(const VoganContext& ctx, const GroupPartition& right_orbits, const GroupPartition& left_orbits,
                      ElementIndex w) {
  const auto& group = ctx.group();
  const auto z = group.at(w);
  const auto target = left_orbits.class_of(group.index_of(canonical_element(shape(z).conjugate(), z.rank())));
  const auto orbit = right_orbits.class_of(w);
  for (std::size_t y = 0; y < group.size(); ++y)
    if (right_orbits.class_of(y) == orbit && left_orbits.class_of(y) == target) return true;
  return false;
}

}  // namespace bcells
