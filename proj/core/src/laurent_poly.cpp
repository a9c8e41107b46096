#include "bcells/laurent_poly.hpp"

#include <algorithm>
#include <cctype>

#include "bcells/error.hpp"

namespace bcells {

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.emplace_back(0, BigInt(constant));
}

LaurentPoly::LaurentPoly(BigInt constant) {
  if (constant != 0) terms_.emplace_back(0, std::move(constant));
}

LaurentPoly LaurentPoly::monomial(BigInt coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace_back(exponent, std::move(coeff));
  return p;
}

LaurentPoly LaurentPoly::v_minus_inverse(int k) { return v(k) - v(-k); }
LaurentPoly LaurentPoly::v_plus_inverse(int k) { return v(k) + v(-k); }

BigInt LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  return it != terms_.end() && it->first == exponent ? it->second : BigInt(0);
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  out.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) out.terms_.emplace_back(-it->first, it->second);
  return out;
}

bool LaurentPoly::is_bar_invariant() const {
  const auto n = terms_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = terms_[i];
    const auto& b = terms_[n - 1 - i];
    if (a.first != -b.first || a.second != b.second) return false;
  }
  return true;
}

bool LaurentPoly::has_only_negative_degrees() const { return terms_.empty() || terms_.back().first < 0; }

LaurentPoly LaurentPoly::symmetric_completion() const {
  LaurentPoly out;
  std::vector<Term> pos;
  for (const auto& [e, c] : terms_) {
    if (e >= 0) pos.emplace_back(e, c);
  }
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
    if (it->first > 0) out.terms_.emplace_back(-it->first, it->second);
  }
  out.terms_.insert(out.terms_.end(), pos.begin(), pos.end());
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.first += k;
  return out;
}

void LaurentPoly::merge(const std::vector<Term>& other, int sign, int shift) {
  if (other.empty()) return;
  if (&other == &terms_) {
    const auto copy = other;
    return merge(copy, sign, shift);
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + other.size());
  auto a = terms_.begin();
  auto b = other.begin();
  while (a != terms_.end() || b != other.end()) {
    if (b == other.end() || (a != terms_.end() && a->first < b->first + shift)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first + shift < a->first) {
      out.emplace_back(b->first + shift, sign > 0 ? b->second : BigInt(-b->second));
      ++b;
    } else {
      BigInt c = std::move(a->second);
      if (sign > 0) c += b->second;
      else c -= b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  merge(other.terms_, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  merge(other.terms_, -1);
  return *this;
}

void LaurentPoly::accumulate_product(const LaurentPoly& a, const LaurentPoly& b, int sign) {
  if (a.is_zero() || b.is_zero()) return;
  if (b.terms_.size() == 1) {
    const auto& [e, c] = b.terms_.front();
    if (c == 1) return merge(a.terms_, sign, e);
    if (c == -1) return merge(a.terms_, -sign, e);
  }
  if (a.terms_.size() == 1) {
    const auto& [e, c] = a.terms_.front();
    if (c == 1) return merge(b.terms_, sign, e);
    if (c == -1) return merge(b.terms_, -sign, e);
  }
  const int lo = a.min_degree() + b.min_degree();
  const int hi = a.max_degree() + b.max_degree();
  std::vector<BigInt> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
  std::vector<Term> prod;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) prod.emplace_back(static_cast<int>(i) + lo, std::move(dense[i]));
  merge(prod, sign);
}

LaurentPoly& LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b) {
  accumulate_product(a, b, +1);
  return *this;
}

LaurentPoly& LaurentPoly::sub_product(const LaurentPoly& a, const LaurentPoly& b) {
  accumulate_product(a, b, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly out;
  out.add_product(x, y);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    if (it == terms_.rbegin()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += "v";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  bool gap = false;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      gap = !s.empty();
      continue;
    }
    const bool joins = std::isalnum(static_cast<unsigned char>(ch)) || ch == '^';
    if (gap && joins && (std::isalnum(static_cast<unsigned char>(s.back())) || s.back() == '^'))
      fail(Error::Kind::Parse, "whitespace inside a term in polynomial '" + std::string(text) + "'");
    gap = false;
    s += ch;
  }
  if (s.empty()) fail(Error::Kind::Parse, "empty polynomial");
  if (s == "0") return {};
  LaurentPoly out;
  std::size_t i = 0;
  auto read_int = [&](std::size_t& pos) {
    const std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      fail(Error::Kind::Parse, "expected integer in polynomial '" + std::string(text) + "'");
    return s.substr(start, pos - start);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail(Error::Kind::Parse, "expected sign between terms in '" + std::string(text) + "'");
    }
    BigInt coeff = 1;
    bool have_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coeff = BigInt(read_int(i));
      have_coeff = true;
    }
    int exponent = 0;
    if (i < s.size() && (s[i] == '*' || s[i] == 'v')) {
      if (s[i] == '*') {
        if (!have_coeff) fail(Error::Kind::Parse, "dangling '*' in polynomial");
        ++i;
      }
      if (i >= s.size() || s[i] != 'v') fail(Error::Kind::Parse, "expected 'v' in polynomial");
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        exponent = std::stoi(read_int(i));
      }
    } else if (!have_coeff) {
      fail(Error::Kind::Parse, "malformed term in polynomial '" + std::string(text) + "'");
    }
    out += monomial(sign * coeff, exponent);
  }
  return out;
}

}  // namespace bcells
