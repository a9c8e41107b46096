#include "bcells/signed_perm.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

#include "bcells/error.hpp"

namespace bcells {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

void check_rank(int n) {
  if (n < 0 || n > kMaxRank)
    fail(Error::Kind::InvalidRank, "rank " + std::to_string(n) + " outside [0, " +
                                       std::to_string(kMaxRank) + "]");
}

void check_generator(int n, Generator g) {
  if (g.index < 0 || g.index >= n || (g.is_t() && n < 1))
    fail(Error::Kind::InvalidRank, "generator " + g.name() + " invalid for rank " + std::to_string(n));
}

}  // namespace

// ---------------------------------------------------------------------------
// Generator / GenWord

std::string Generator::name() const { return is_t() ? std::string("t") : "s" + std::to_string(index); }

Generator Generator::parse(std::string_view text) {
  text = trim(text);
  if (text == "t") return t();
  if (text.size() >= 2 && text.front() == 's') {
    int i = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), i);
    if (ec == std::errc() && ptr == text.data() + text.size() && i >= 1) return s(i);
  }
  fail(Error::Kind::Parse, "bad generator '" + std::string(text) + "'");
}

GenWord parse_word(std::string_view text) {
  GenWord word;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) word.push_back(Generator::parse(token));
  return word;
}

std::string to_string(const GenWord& word) {
  std::string out;
  for (const auto& g : word) {
    if (!out.empty()) out += ' ';
    out += g.name();
  }
  return out;
}

std::string gen_set_to_string(GenSet set) {
  std::string out;
  for (int i = 0; i < 32; ++i) {
    if (set & (GenSet{1} << i)) {
      if (!out.empty()) out += ',';
      out += Generator{i}.name();
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// WeightFunction

WeightFunction::WeightFunction(int a, int b) : a_(a), b_(b) {
  if (a <= 0 || b <= 0)
    fail(Error::Kind::Domain, "weights must be positive, got a=" + std::to_string(a) +
                                  " b=" + std::to_string(b));
}

std::string WeightFunction::to_string() const {
  return "(a=" + std::to_string(a_) + ", b=" + std::to_string(b_) + ")";
}

Regime classify(const WeightFunction& weight, int n) {
  if (weight.slope_greater(n - 1)) return Regime::Asymptotic;
  if (weight.slope_equals(n - 1)) return Regime::Intermediate;
  if (weight.slope_greater(n - 2)) return Regime::SubAsymptotic;
  return Regime::Low;
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::Asymptotic: return "asymptotic";
    case Regime::Intermediate: return "intermediate";
    case Regime::SubAsymptotic: return "sub-asymptotic";
    case Regime::Low: return "low";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// SignedPerm

SignedPerm SignedPerm::identity(int n) {
  check_rank(n);
  SignedPerm w;
  w.n_ = static_cast<std::int8_t>(n);
  for (int i = 0; i < n; ++i) w.w_[i] = static_cast<std::int8_t>(i + 1);
  return w;
}

SignedPerm SignedPerm::from_window(std::span<const int> window) {
  const int n = static_cast<int>(window.size());
  if (n > kMaxRank) fail(Error::Kind::InvalidRank, "window longer than " + std::to_string(kMaxRank));
  std::array<bool, kMaxRank + 1> seen{};
  SignedPerm w;
  w.n_ = static_cast<std::int8_t>(n);
  for (int i = 0; i < n; ++i) {
    const int v = window[i];
    const int m = std::abs(v);
    if (m < 1 || m > n || seen[m])
      fail(Error::Kind::InvalidElement, "not a signed permutation: entry " + std::to_string(v) +
                                            " at position " + std::to_string(i + 1));
    seen[m] = true;
    w.w_[i] = static_cast<std::int8_t>(v);
  }
  return w;
}

SignedPerm SignedPerm::parse(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')') text = trim(text.substr(1, text.size() - 2));
  std::vector<int> values;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      fail(Error::Kind::Parse, "bad window entry '" + std::string(token) + "'");
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (trim(text).empty()) fail(Error::Kind::Parse, "trailing comma in window");
  }
  return from_window(values);
}

std::vector<int> SignedPerm::window_vector() const { return {w_.begin(), w_.begin() + n_}; }

SignedPerm SignedPerm::operator*(const SignedPerm& other) const {
  if (n_ != other.n_) fail(Error::Kind::Domain, "rank mismatch in product");
  SignedPerm r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) r.w_[i] = static_cast<std::int8_t>((*this)(other.w_[i]));
  return r;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) {
    const int v = w_[i];
    if (v > 0)
      r.w_[v - 1] = static_cast<std::int8_t>(i + 1);
    else
      r.w_[-v - 1] = static_cast<std::int8_t>(-(i + 1));
  }
  return r;
}

SignedPerm SignedPerm::right_mul(Generator g) const {
  check_generator(n_, g);
  SignedPerm r = *this;
  if (g.is_t())
    r.w_[0] = static_cast<std::int8_t>(-r.w_[0]);
  else
    std::swap(r.w_[g.index - 1], r.w_[g.index]);
  return r;
}

SignedPerm SignedPerm::left_mul(Generator g) const {
  check_generator(n_, g);
  SignedPerm r = *this;
  for (int i = 0; i < n_; ++i) {
    const int v = r.w_[i];
    const int m = std::abs(v);
    const int sign = v > 0 ? 1 : -1;
    if (g.is_t()) {
      if (m == 1) r.w_[i] = static_cast<std::int8_t>(-v);
    } else if (m == g.index) {
      r.w_[i] = static_cast<std::int8_t>(sign * (m + 1));
    } else if (m == g.index + 1) {
      r.w_[i] = static_cast<std::int8_t>(sign * (m - 1));
    }
  }
  return r;
}

int SignedPerm::length() const {
  // inv(w) minus the sum of the negative entries
  int len = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j)
      if (w_[i] > w_[j]) ++len;
    if (w_[i] < 0) len -= w_[i];
  }
  return len;
}

int SignedPerm::length_t() const {
  return static_cast<int>(std::count_if(w_.begin(), w_.begin() + n_, [](std::int8_t v) { return v < 0; }));
}

bool SignedPerm::has_right_descent(Generator g) const {
  check_generator(n_, g);
  if (g.is_t()) return w_[0] < 0;
  return w_[g.index] < w_[g.index - 1];
}

bool SignedPerm::has_left_descent(Generator g) const { return inverse().has_right_descent(g); }

GenSet SignedPerm::right_descents() const {
  GenSet set = 0;
  if (n_ == 0) return set;
  if (w_[0] < 0) set |= gen_bit(Generator::t());
  for (int i = 1; i < n_; ++i)
    if (w_[i] < w_[i - 1]) set |= gen_bit(Generator::s(i));
  return set;
}

GenSet SignedPerm::left_descents() const { return inverse().right_descents(); }

std::string SignedPerm::to_string() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (i) out += ',';
    out += std::to_string(static_cast<int>(w_[i]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Free functions

SignedPerm from_word(int n, const GenWord& word) {
  SignedPerm w = SignedPerm::identity(n);
  for (const auto& g : word) w = w.right_mul(g);
  return w;
}

GenWord reduced_word(const SignedPerm& w) {
  GenWord reversed;
  SignedPerm cur = w;
  while (true) {
    const GenSet des = cur.right_descents();
    if (des == 0) break;
    const Generator g{std::countr_zero(des)};
    reversed.push_back(g);
    cur = cur.right_mul(g);
  }
  return {reversed.rbegin(), reversed.rend()};
}

int length(const SignedPerm& w) { return w.length(); }
int length_t(const SignedPerm& w) { return w.length_t(); }
GenSet right_descents(const SignedPerm& w) { return w.right_descents(); }

bool is_descent_tj(const SignedPerm& w, int j) {
  if (j < 1 || j > w.rank()) fail(Error::Kind::Domain, "t_j index out of range");
  return w(j) < 0;
}

SignedPerm reflection_t(int n, int j) {
  if (j < 1 || j > n) fail(Error::Kind::Domain, "t_j index out of range");
  GenWord word;
  for (int i = j - 1; i >= 1; --i) word.push_back(Generator::s(i));
  word.push_back(Generator::t());
  for (int i = 1; i <= j - 1; ++i) word.push_back(Generator::s(i));
  return from_word(n, word);
}

SignedPerm longest_element(int n) {
  std::vector<int> win(n);
  for (int i = 0; i < n; ++i) win[i] = -(i + 1);
  return SignedPerm::from_window(win);
}

SignedPerm longest_element_J(int n) {
  std::vector<int> win(n);
  for (int i = 0; i < n; ++i) win[i] = n - i;
  return SignedPerm::from_window(win);
}

GenSet support(const SignedPerm& w) {
  GenSet set = 0;
  for (const auto& g : reduced_word(w)) set |= gen_bit(g);
  return set;
}

bool is_suffix(const SignedPerm& y, const SignedPerm& w) {
  if (y.rank() != w.rank()) fail(Error::Kind::Domain, "rank mismatch in is_suffix");
  return w.length() == (w * y.inverse()).length() + y.length();
}

std::vector<SignedPerm> suffixes(const SignedPerm& w) {
  // Stripping left descents one at a time reaches exactly the suffixes.
  std::unordered_set<SignedPerm> seen{w};
  std::deque<SignedPerm> queue{w};
  while (!queue.empty()) {
    const SignedPerm cur = queue.front();
    queue.pop_front();
    const GenSet des = cur.left_descents();
    for (int i = 0; i < cur.rank(); ++i) {
      if (!(des & (GenSet{1} << i))) continue;
      SignedPerm next = cur.left_mul(Generator{i});
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<SignedPerm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const SignedPerm& x, const SignedPerm& y) {
    const int lx = x.length(), ly = y.length();
    return lx != ly ? lx < ly : x < y;
  });
  return out;
}

bool bruhat_leq(const SignedPerm& y, const SignedPerm& w) {
  if (y.rank() != w.rank()) fail(Error::Kind::Domain, "rank mismatch in bruhat_leq");
  SignedPerm cy = y, cw = w;
  while (true) {
    if (cy == cw) return true;
    const int ly = cy.length(), lw = cw.length();
    if (ly >= lw) return false;
    const GenSet des = cw.left_descents();
    const Generator s{std::countr_zero(des)};
    cw = cw.left_mul(s);
    if (cy.has_left_descent(s)) cy = cy.left_mul(s);
  }
}

std::string_view to_string(Parabolic subset) { return subset == Parabolic::J ? "J" : "K"; }

bool in_parabolic(const SignedPerm& w, Parabolic subset) {
  switch (subset) {
    case Parabolic::J:
      return std::all_of(w.window().begin(), w.window().end(), [](std::int8_t v) { return v > 0; });
    case Parabolic::K:
      return w.rank() == 0 || w(w.rank()) == w.rank();
  }
  fail(Error::Kind::Domain, "unsupported parabolic subset");
}

CosetDecomposition coset_decompose(const SignedPerm& w, Parabolic subset) {
  const int n = w.rank();
  switch (subset) {
    case Parabolic::J: {
      // rep: the window sorted increasingly; part: the standardisation.
      std::vector<int> sorted = w.window_vector();
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> part(n);
      for (int i = 0; i < n; ++i)
        part[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), w(i + 1)) - sorted.begin()) + 1;
      return {SignedPerm::from_window(sorted), SignedPerm::from_window(part), subset};
    }
    case Parabolic::K: {
      if (n == 0) return {w, w, subset};
      // rep: the unique suffix of t_n sending n to k = w(n).
      const int k = w(n);
      const int mk = std::abs(k);
      std::vector<int> rep(n), part(n);
      for (int j = 1; j <= n - 1; ++j) rep[j - 1] = j < mk ? j : j + 1;
      rep[n - 1] = k;
      for (int i = 1; i <= n - 1; ++i) {
        const int v = w(i);
        const int m = std::abs(v);
        const int r = m < mk ? m : m - 1;
        part[i - 1] = v > 0 ? r : -r;
      }
      part[n - 1] = n;
      return {SignedPerm::from_window(rep), SignedPerm::from_window(part), subset};
    }
  }
  fail(Error::Kind::Domain, "unsupported parabolic subset");
}

SignedPerm drop_last(const SignedPerm& w) {
  const int n = w.rank();
  if (n == 0 || w(n) != n) fail(Error::Kind::Domain, "element does not fix n: " + w.to_string());
  std::vector<int> win = w.window_vector();
  win.pop_back();
  return SignedPerm::from_window(win);
}

SignedPerm embed(const SignedPerm& u, int n) {
  if (u.rank() > n) fail(Error::Kind::Domain, "cannot embed into a smaller rank");
  std::vector<int> win = u.window_vector();
  for (int i = u.rank() + 1; i <= n; ++i) win.push_back(i);
  return SignedPerm::from_window(win);
}

}  // namespace bcells
