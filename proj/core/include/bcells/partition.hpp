#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace bcells {

using ClassId = std::uint32_t;

/// Labeled partition of {0,…,size-1} (element indices of an enumeration).
/// Class ids are canonical: classes are numbered in order of their smallest
/// member, so two equal partitions always have identical id arrays.
class GroupPartition {
 public:
  GroupPartition() = default;
  /// Takes arbitrary labels and renumbers them canonically.
  GroupPartition(int rank, std::vector<ClassId> labels);

  static GroupPartition singletons(int rank, std::size_t size);
  static GroupPartition trivial(int rank, std::size_t size);

  /// Group elements by an arbitrary ordered key.
  template <class Key, class KeyFn>
  static GroupPartition from_keys(int rank, std::size_t size, KeyFn&& key) {
    std::map<Key, ClassId> ids;
    std::vector<ClassId> labels(size);
    for (std::size_t i = 0; i < size; ++i) {
      auto [it, _] = ids.try_emplace(key(i), static_cast<ClassId>(ids.size()));
      labels[i] = it->second;
    }
    return GroupPartition(rank, std::move(labels));
  }

  int rank() const { return rank_; }
  std::size_t size() const { return class_of_.size(); }
  std::size_t num_classes() const { return num_classes_; }
  ClassId class_of(std::size_t element) const { return class_of_[element]; }
  std::span<const ClassId> labels() const { return class_of_; }

  /// Members of every class, each sorted ascending.
  std::vector<std::vector<std::uint32_t>> classes() const;
  std::vector<std::size_t> class_sizes() const;

  /// Every class of *this lies inside a class of `coarser`.
  bool refines(const GroupPartition& coarser) const;

  /// Partition of the listed elements induced by *this (positions renumbered
  /// 0..subset.size()-1 in the given order).
  GroupPartition restricted(std::span<const std::uint32_t> subset) const;

  /// Common refinement.
  GroupPartition meet(const GroupPartition& other) const;

  friend bool operator==(const GroupPartition& x, const GroupPartition& y) {
    return x.class_of_ == y.class_of_;
  }

 private:
  int rank_ = 0;
  std::size_t num_classes_ = 0;
  std::vector<ClassId> class_of_;
};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size);
  std::uint32_t find(std::uint32_t x);
  bool unite(std::uint32_t x, std::uint32_t y);
  GroupPartition partition(int rank);

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> rank_;
};

}  // namespace bcells
