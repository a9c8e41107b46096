#include "bcells/descents.hpp"

#include <map>

namespace bcells {

std::string XiDescentSet::label() const {
  std::string out;
  auto add = [&out](const std::string& s) { out += (out.empty() ? "" : ",") + s; };
  for (int g = 0; g < 32; ++g)
    if (classical & (GenSet{1} << g)) add(Generator{g}.name());
  for (int k = 2; k < 32; ++k)
    if (extended & (std::uint32_t{1} << k)) add("t" + std::to_string(k));
  if (ts1t) add("ts1t");
  return out.empty() ? "{}" : out;
}

GenSet rdes(const SignedPerm& w) { return w.right_descents(); }

XiDescentSet rdes_enhanced(const SignedPerm& w, const WeightFunction& weight) {
  XiDescentSet d;
  d.classical = w.right_descents();
  if (w.rank() < 2) return d;
  if (weight.b() > weight.a()) {
    if (is_descent_tj(w, 2)) d.extended |= std::uint32_t{1} << 2;
  } else if (weight.b() < weight.a()) {
    const auto x = SignedPerm::identity(w.rank()).right_mul(Generator::t()).right_mul(Generator::s(1)).right_mul(
        Generator::t());
    d.ts1t = (w * x).length() < w.length();
  }
  return d;
}

XiDescentSet rxi(const SignedPerm& w, const WeightFunction& weight) {
  if (weight.b() < weight.a()) return rdes_enhanced(w, weight);
  XiDescentSet d;
  d.classical = w.right_descents();
  for (int k = 2; k <= w.rank(); ++k)
    if (weight.slope_greater(k - 1) && w(k) < 0) d.extended |= std::uint32_t{1} << k;
  return d;
}

GroupPartition rxi_partition(const GroupEnumeration& group, const WeightFunction& weight) {
  return GroupPartition::from_keys<std::uint64_t>(group.rank(), group.size(), [&](std::size_t i) {
    return rxi(group.at(static_cast<ElementIndex>(i)), weight).key();
  });
}

GroupPartition rxi_partition(int n, const WeightFunction& weight) { return rxi_partition(GroupEnumeration(n), weight); }

GroupPartition rdes_partition(const GroupEnumeration& group) {
  return GroupPartition::from_keys<GenSet>(group.rank(), group.size(), [&](std::size_t i) {
    return group.at(static_cast<ElementIndex>(i)).right_descents();
  });
}

std::vector<FiberCount> rxi_fibers(const GroupEnumeration& group, const WeightFunction& weight) {
  std::map<std::uint64_t, std::size_t> slot;
  std::vector<FiberCount> out;
  for (ElementIndex i = 0; i < group.size(); ++i) {
    const auto d = rxi(group.at(i), weight);
    auto [it, inserted] = slot.try_emplace(d.key(), out.size());
    if (inserted) out.push_back({d.label(), 0});
    ++out[it->second].size;
  }
  return out;
}

std::string fibers_tsv(const std::vector<FiberCount>& fibers) {
  std::string out;
  for (const auto& f : fibers) out += f.label + "\t" + std::to_string(f.size) + "\n";
  return out;
}

}  // namespace bcells
