#include "bcells/enumeration.hpp"

#include <cstdlib>

#include "bcells/error.hpp"

namespace bcells {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t group_order(int n) { return (std::uint64_t{1} << n) * factorial(n); }

int coset_rep_index(int n, int k) {
  if (k == 0 || std::abs(k) > n) fail(Error::Kind::Domain, "coset value out of range");
  return k > 0 ? n - k : n - 1 - k;
}

std::uint64_t tower_index(const SignedPerm& w) {
  // Peel off the last position repeatedly; the window is renumbered in place.
  std::array<int, kMaxRank> win{};
  const int n = w.rank();
  for (int i = 0; i < n; ++i) win[i] = w(i + 1);
  std::uint64_t index = 0;
  for (int m = n; m >= 1; --m) {
    const int k = win[m - 1];
    const int mk = std::abs(k);
    index += static_cast<std::uint64_t>(coset_rep_index(m, k)) * group_order(m - 1);
    for (int i = 0; i < m - 1; ++i) {
      if (std::abs(win[i]) > mk) win[i] += win[i] > 0 ? -1 : 1;
    }
  }
  return index;
}

SignedPerm tower_element(int n, std::uint64_t index) {
  if (n < 0 || n > kMaxRank) fail(Error::Kind::InvalidRank, "rank out of range");
  if (index >= group_order(n)) fail(Error::Kind::Domain, "index out of range");
  // Build from W_0 upwards: at level m choose k from the rep index and
  // re-insert it as the new last entry.
  std::array<int, kMaxRank> digits{};
  for (int m = n; m >= 1; --m) {
    const std::uint64_t block = group_order(m - 1);
    digits[m - 1] = static_cast<int>(index / block);
    index %= block;
  }
  std::array<int, kMaxRank> win{};
  for (int m = 1; m <= n; ++m) {
    const int r = digits[m - 1];
    const int k = r < m ? m - r : -(r - m + 1);
    const int mk = std::abs(k);
    for (int i = 0; i < m - 1; ++i) {
      if (std::abs(win[i]) >= mk) win[i] += win[i] > 0 ? 1 : -1;
    }
    win[m - 1] = k;
  }
  return SignedPerm::from_window(std::span<const int>(win.data(), static_cast<std::size_t>(n)));
}

std::uint32_t permutation_rank(std::span<const std::int8_t> perm) {
  const int n = static_cast<int>(perm.size());
  std::uint32_t rank = 0;
  std::uint32_t used = 0;
  for (int i = 0; i < n; ++i) {
    const int v = perm[i];
    int smaller = 0;
    for (int u = 1; u < v; ++u)
      if (!(used & (1u << u))) ++smaller;
    used |= 1u << v;
    rank += static_cast<std::uint32_t>(smaller * factorial(n - 1 - i));
  }
  return rank;
}

std::vector<int> permutation_unrank(int n, std::uint32_t rank) {
  std::vector<int> avail(n);
  for (int i = 0; i < n; ++i) avail[i] = i + 1;
  std::vector<int> perm;
  perm.reserve(n);
  for (int i = 0; i < n; ++i) {
    const auto f = factorial(n - 1 - i);
    const auto d = static_cast<std::size_t>(rank / f);
    rank = static_cast<std::uint32_t>(rank % f);
    perm.push_back(avail[d]);
    avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return perm;
}

GroupEnumeration::GroupEnumeration(int n) : n_(n) {
  if (n < 1 || n > kMaxEnumerationRank)
    fail(Error::Kind::InvalidRank,
         "enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationRank) + ", got " + std::to_string(n));
  block_ = group_order(n - 1);
  const auto total = group_order(n);
  elements_.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) elements_.push_back(tower_element(n, i));
}

ElementIndex GroupEnumeration::index_of(const SignedPerm& w) const {
  if (w.rank() != n_) fail(Error::Kind::Domain, "rank mismatch in index_of");
  return static_cast<ElementIndex>(tower_index(w));
}

std::vector<SignedPerm> enumerate(int n) {
  GroupEnumeration e(n);
  return {e.elements().begin(), e.elements().end()};
}

}  // namespace bcells
