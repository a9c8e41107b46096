#pragma once

// Type-B Coxeter group W_n realised as signed permutations of {±1,…,±n}.
//
// Generators: t negates the first entry, s_i swaps entries i and i+1.
// Right multiplication acts on positions, left multiplication on values.
// The window (w(1),…,w(n)) is the single source of truth; words are derived.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bcells {

inline constexpr int kMaxRank = 12;

/// A simple reflection: index 0 is t, index i ≥ 1 is s_i.
struct Generator {
  int index = 0;

  static constexpr Generator t() { return {0}; }
  static constexpr Generator s(int i) { return {i}; }

  constexpr bool is_t() const { return index == 0; }
  std::string name() const;
  static Generator parse(std::string_view text);

  auto operator<=>(const Generator&) const = default;
};

using GenWord = std::vector<Generator>;

GenWord parse_word(std::string_view text);
std::string to_string(const GenWord& word);

/// Subset of S as a bitmask; bit g.index is set when g belongs to the set.
using GenSet = std::uint32_t;

constexpr GenSet gen_bit(Generator g) { return GenSet{1} << g.index; }
std::string gen_set_to_string(GenSet set);

/// L(s_i) = a and L(t) = b. Slopes are compared exactly as integer products.
class WeightFunction {
 public:
  WeightFunction(int a, int b);

  int a() const { return a_; }
  int b() const { return b_; }
  int of(Generator g) const { return g.is_t() ? b_ : a_; }

  /// b/a > k
  bool slope_greater(int k) const { return b_ > k * a_; }
  /// b/a >= k
  bool slope_at_least(int k) const { return b_ >= k * a_; }
  /// b/a == k
  bool slope_equals(int k) const { return b_ == k * a_; }

  std::string to_string() const;

  auto operator<=>(const WeightFunction&) const = default;

 private:
  int a_;
  int b_;
};

/// Cell-equivalence regime of a weight relative to rank n.
enum class Regime {
  Asymptotic,     // b/a > n-1
  Intermediate,   // b/a = n-1
  SubAsymptotic,  // n-2 < b/a < n-1
  Low,            // b/a <= n-2
};

Regime classify(const WeightFunction& weight, int n);
std::string_view to_string(Regime regime);

class SignedPerm {
 public:
  SignedPerm() = default;

  static SignedPerm identity(int n);
  /// Validates that |w(1)|,…,|w(n)| is a permutation of {1,…,n}.
  static SignedPerm from_window(std::span<const int> window);
  /// Comma-separated signed integers, e.g. "-7,-5,6,4,3,-2,1".
  static SignedPerm parse(std::string_view text);

  int rank() const { return n_; }

  /// w(i) for 1 ≤ |i| ≤ n, with w(-i) = -w(i).
  int operator()(int i) const { return i > 0 ? w_[i - 1] : -w_[-i - 1]; }

  std::span<const std::int8_t> window() const { return {w_.data(), static_cast<std::size_t>(n_)}; }
  std::vector<int> window_vector() const;

  /// Composition as functions: (x * y)(i) = x(y(i)).
  SignedPerm operator*(const SignedPerm& other) const;
  SignedPerm inverse() const;

  SignedPerm right_mul(Generator g) const;
  SignedPerm left_mul(Generator g) const;

  int length() const;
  /// Number of t's in a reduced word, equal to the number of negative entries.
  int length_t() const;

  bool has_right_descent(Generator g) const;
  bool has_left_descent(Generator g) const;
  GenSet right_descents() const;
  GenSet left_descents() const;

  std::string to_string() const;

  friend bool operator==(const SignedPerm& x, const SignedPerm& y) {
    return x.n_ == y.n_ && x.w_ == y.w_;
  }
  friend std::strong_ordering operator<=>(const SignedPerm& x, const SignedPerm& y) {
    if (auto c = x.n_ <=> y.n_; c != 0) return c;
    return x.w_ <=> y.w_;
  }

 private:
  std::array<std::int8_t, kMaxRank> w_{};
  std::int8_t n_ = 0;
};

SignedPerm from_word(int n, const GenWord& word);
/// Reduced word obtained by repeatedly stripping the smallest right descent.
GenWord reduced_word(const SignedPerm& w);
int length(const SignedPerm& w);
int length_t(const SignedPerm& w);
GenSet right_descents(const SignedPerm& w);
/// ℓ(w t_j) < ℓ(w) for the reflection t_j = (j,-j); true iff w(j) < 0.
bool is_descent_tj(const SignedPerm& w, int j);
/// t_j = s_{j-1}⋯s_1 t s_1⋯s_{j-1}.
SignedPerm reflection_t(int n, int j);
SignedPerm longest_element(int n);
/// Longest element of the symmetric group W_J, i.e. (n, n-1, …, 1).
SignedPerm longest_element_J(int n);
/// Generators occurring in some (equivalently every) reduced word.
GenSet support(const SignedPerm& w);

/// y ≤_e w: ℓ(w) = ℓ(w y⁻¹) + ℓ(y).
bool is_suffix(const SignedPerm& y, const SignedPerm& w);
/// All suffixes of w, sorted by (length, window).
std::vector<SignedPerm> suffixes(const SignedPerm& w);

bool bruhat_leq(const SignedPerm& y, const SignedPerm& w);

/// The two maximal parabolics used throughout: J = {s_1,…,s_{n-1}} and
/// K = {t, s_1,…,s_{n-2}}.
enum class Parabolic { J, K };

std::string_view to_string(Parabolic subset);
bool in_parabolic(const SignedPerm& w, Parabolic subset);

/// w = rep · part with rep ∈ X_I distinguished and part ∈ W_I.
struct CosetDecomposition {
  SignedPerm rep;
  SignedPerm part;
  Parabolic subset;
};

CosetDecomposition coset_decompose(const SignedPerm& w, Parabolic subset);

/// Restricts an element of W_n fixing n to W_{n-1}.
SignedPerm drop_last(const SignedPerm& w);
/// Embeds u ∈ W_m into W_n (m ≤ n) fixing m+1,…,n.
SignedPerm embed(const SignedPerm& u, int n);

}  // namespace bcells

template <>
struct std::hash<bcells::SignedPerm> {
  std::size_t operator()(const bcells::SignedPerm& w) const noexcept {
    std::size_t h = static_cast<std::size_t>(w.rank());
    for (auto v : w.window()) h = h * 31 + static_cast<std::size_t>(v + 64);
    return h;
  }
};
