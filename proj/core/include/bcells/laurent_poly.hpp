#pragma once

// Exact Laurent polynomials in Z[v, v^-1] with arbitrary-precision
// coefficients. Terms are kept sorted by exponent with no zero coefficients.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bcells {

using BigInt = boost::multiprecision::cpp_int;

class LaurentPoly {
 public:
  using Term = std::pair<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(BigInt constant);

  static LaurentPoly monomial(BigInt coeff, int exponent);
  /// v^k
  static LaurentPoly v(int exponent) { return monomial(1, exponent); }
  /// v^k - v^-k
  static LaurentPoly v_minus_inverse(int k);
  /// v^k + v^-k
  static LaurentPoly v_plus_inverse(int k);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  BigInt coeff(int exponent) const;
  /// Only meaningful when non-zero.
  int min_degree() const { return terms_.front().first; }
  int max_degree() const { return terms_.back().first; }

  /// v^k ↦ v^-k.
  LaurentPoly bar() const;
  bool is_bar_invariant() const;
  /// All exponents < 0 (the zero polynomial qualifies).
  bool has_only_negative_degrees() const;
  /// The unique bar-invariant m with (this - m) ∈ v^-1 Z[v^-1]:
  /// m = c_0 + Σ_{k>0} c_k (v^k + v^-k) from the non-negative part.
  LaurentPoly symmetric_completion() const;

  /// Multiply by v^k.
  LaurentPoly shifted(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  /// this += a * b without a temporary.
  LaurentPoly& add_product(const LaurentPoly& a, const LaurentPoly& b);
  /// this -= a * b without a temporary.
  LaurentPoly& sub_product(const LaurentPoly& a, const LaurentPoly& b);

  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) { return x.terms_ == y.terms_; }

  /// Decreasing exponent, e.g. "v^2 - 3 + 2*v^-1"; zero is "0".
  std::string to_string() const;
  /// Inverse of to_string; also accepts "c*v^k" for |c| = 1 and spacing variants.
  static LaurentPoly parse(std::string_view text);

 private:
  void merge(const std::vector<Term>& other, int sign, int shift = 0);
  void accumulate_product(const LaurentPoly& a, const LaurentPoly& b, int sign);

  std::vector<Term> terms_;
};

}  // namespace bcells
