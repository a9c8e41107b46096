#pragma once

// Brute-force reference implementations used only by the tests. They work on
// plain window vectors and never call the library's length, descent, suffix or
// Bruhat code.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Window = std::vector<int>;
using Word = std::vector<int>;  // generator indices, 0 = t, i = s_i

inline Window identity(int n) {
  Window w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return w;
}

/// Right multiplication by a generator: t negates position 1, s_i swaps i, i+1.
inline Window act(Window w, int g) {
  if (g == 0) w[0] = -w[0];
  else std::swap(w[g - 1], w[g]);
  return w;
}

inline Window evaluate(int n, const Word& word) {
  Window w = identity(n);
  for (int g : word) w = act(w, g);
  return w;
}

/// Distances from the identity in the Cayley graph of W_n.
class Cayley {
 public:
  explicit Cayley(int n) : n_(n) {
    std::deque<Window> queue{identity(n)};
    dist_[identity(n)] = 0;
    while (!queue.empty()) {
      const Window w = queue.front();
      queue.pop_front();
      for (int g = 0; g < n; ++g) {
        const Window x = act(w, g);
        if (dist_.emplace(x, dist_.at(w) + 1).second) queue.push_back(x);
      }
    }
  }

  int rank() const { return n_; }
  int length(const Window& w) const { return dist_.at(w); }
  const std::map<Window, int>& elements() const { return dist_; }

  /// Every reduced word of w, as right-multiplication sequences from e.
  const std::vector<Word>& reduced_words(const Window& w) const {
    auto it = words_.find(w);
    if (it != words_.end()) return it->second;
    std::vector<Word> out;
    if (dist_.at(w) == 0) {
      out.push_back({});
    } else {
      for (int g = 0; g < n_; ++g) {
        const Window x = act(w, g);
        if (dist_.at(x) != dist_.at(w) - 1) continue;
        for (Word word : reduced_words(x)) {
          word.push_back(g);
          out.push_back(std::move(word));
        }
      }
    }
    return words_.emplace(w, std::move(out)).first->second;
  }

  /// Some reduced word of w has a reduced word of y as a trailing segment.
  bool is_suffix(const Window& y, const Window& w) const {
    const int ly = length(y);
    const int lw = length(w);
    if (ly > lw) return false;
    for (const auto& word : reduced_words(w)) {
      Word tail(word.end() - ly, word.end());
      if (evaluate(n_, tail) == y) return true;
    }
    return false;
  }

  /// Subword property over one reduced word of w.
  bool bruhat_leq(const Window& y, const Window& w) const {
    const Word& word = reduced_words(w).front();
    const std::size_t k = word.size();
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      Word sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) sub.push_back(word[i]);
      if (evaluate(n_, sub) == y) return true;
    }
    return false;
  }

 private:
  int n_;
  std::map<Window, int> dist_;
  mutable std::map<Window, std::vector<Word>> words_;
};

/// Classic Knuth classes of S_n from the elementary relations
/// ...yxz... ~ ...yzx... (x < y < z) and ...xzy... ~ ...zxy... (x < y < z).
inline std::map<Window, int> knuth_classes_sn(int n) {
  std::vector<Window> perms;
  Window p = identity(n);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<Window, int> cls;
  int next = 0;
  for (const auto& start : perms) {
    if (cls.count(start)) continue;
    std::deque<Window> queue{start};
    cls[start] = next;
    while (!queue.empty()) {
      const Window w = queue.front();
      queue.pop_front();
      for (int i = 0; i + 2 < n; ++i) {
        const int a = w[i], b = w[i + 1], c = w[i + 2];
        std::vector<Window> nbrs;
        if ((b < a && a < c) || (c < a && a < b)) nbrs.push_back(act(w, i + 2));
        if ((a < c && c < b) || (b < c && c < a)) nbrs.push_back(act(w, i + 1));
        for (const auto& x : nbrs)
          if (cls.emplace(x, next).second) queue.push_back(x);
      }
    }
    ++next;
  }
  return cls;
}

/// Longest increasing subsequence length.
inline int lis(const Window& w) {
  std::vector<int> tails;
  for (int x : w) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end()) tails.push_back(x);
    else *it = x;
  }
  return static_cast<int>(tails.size());
}

/// n choose k.
inline std::uint64_t choose(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

inline std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace oracle
