#include "bcells/partition.hpp"

#include <limits>
#include <numeric>

#include "bcells/error.hpp"

namespace bcells {

namespace {
constexpr ClassId kUnset = std::numeric_limits<ClassId>::max();
}

GroupPartition::GroupPartition(int rank, std::vector<ClassId> labels) : rank_(rank), class_of_(std::move(labels)) {
  std::vector<ClassId> remap;
  ClassId next = 0;
  for (auto& c : class_of_) {
    if (c >= remap.size()) remap.resize(static_cast<std::size_t>(c) + 1, kUnset);
    if (remap[c] == kUnset) remap[c] = next++;
    c = remap[c];
  }
  num_classes_ = next;
}

GroupPartition GroupPartition::singletons(int rank, std::size_t size) {
  std::vector<ClassId> labels(size);
  std::iota(labels.begin(), labels.end(), ClassId{0});
  return GroupPartition(rank, std::move(labels));
}

GroupPartition GroupPartition::trivial(int rank, std::size_t size) {
  return GroupPartition(rank, std::vector<ClassId>(size, 0));
}

std::vector<std::vector<std::uint32_t>> GroupPartition::classes() const {
  std::vector<std::vector<std::uint32_t>> out(num_classes_);
  for (std::size_t i = 0; i < class_of_.size(); ++i) out[class_of_[i]].push_back(static_cast<std::uint32_t>(i));
  return out;
}

std::vector<std::size_t> GroupPartition::class_sizes() const {
  std::vector<std::size_t> out(num_classes_, 0);
  for (auto c : class_of_) ++out[c];
  return out;
}

bool GroupPartition::refines(const GroupPartition& coarser) const {
  if (coarser.size() != size()) fail(Error::Kind::InvalidInput, "partition sizes differ");
  std::vector<ClassId> image(num_classes_, kUnset);
  for (std::size_t i = 0; i < class_of_.size(); ++i) {
    auto& slot = image[class_of_[i]];
    if (slot == kUnset) slot = coarser.class_of_[i];
    else if (slot != coarser.class_of_[i]) return false;
  }
  return true;
}

GroupPartition GroupPartition::restricted(std::span<const std::uint32_t> subset) const {
  std::vector<ClassId> labels;
  labels.reserve(subset.size());
  for (auto e : subset) labels.push_back(class_of_.at(e));
  return GroupPartition(rank_, std::move(labels));
}

GroupPartition GroupPartition::meet(const GroupPartition& other) const {
  if (other.size() != size()) fail(Error::Kind::InvalidInput, "partition sizes differ");
  return from_keys<std::pair<ClassId, ClassId>>(rank_, size(), [&](std::size_t i) {
    return std::pair{class_of_[i], other.class_of_[i]};
  });
}

DisjointSets::DisjointSets(std::size_t size) : parent_(size), rank_(size, 0) {
  std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
}

std::uint32_t DisjointSets::find(std::uint32_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::uint32_t x, std::uint32_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (rank_[x] < rank_[y]) std::swap(x, y);
  parent_[y] = x;
  if (rank_[x] == rank_[y]) ++rank_[x];
  return true;
}

GroupPartition DisjointSets::partition(int rank) {
  std::vector<ClassId> labels(parent_.size());
  for (std::uint32_t i = 0; i < parent_.size(); ++i) labels[i] = find(i);
  return GroupPartition(rank, std::move(labels));
}

}  // namespace bcells
