#include "bcells/tableau.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "bcells/error.hpp"

namespace bcells {

Partition conjugate(const Partition& p) {
  Partition out;
  if (p.empty()) return out;
  for (int c = 0; c < p.front(); ++c) {
    int len = 0;
    while (len < static_cast<int>(p.size()) && p[len] > c) ++len;
    out.push_back(len);
  }
  return out;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out;
}

int Bipartition::size() const {
  return std::accumulate(plus.begin(), plus.end(), 0) + std::accumulate(minus.begin(), minus.end(), 0);
}

Bipartition Bipartition::conjugate() const { return {bcells::conjugate(minus), bcells::conjugate(plus)}; }

std::string Bipartition::to_string() const { return "(" + bcells::to_string(plus) + " | " + bcells::to_string(minus) + ")"; }

Bipartition zeta(int n, int q) {
  if (q < 0 || q > n) fail(Error::Kind::Domain, "zeta index out of range");
  return {Partition(static_cast<std::size_t>(n - q), 1), Partition(static_cast<std::size_t>(q), 1)};
}

std::vector<Bipartition> bipartitions(int n) {
  std::vector<Bipartition> out;
  for (int k = n; k >= 0; --k)
    for (const auto& p : partitions(k))
      for (const auto& m : partitions(n - k)) out.push_back({p, m});
  return out;
}

Partition StandardTableau::shape() const {
  Partition out;
  for (const auto& r : rows) out.push_back(static_cast<int>(r.size()));
  return out;
}

int StandardTableau::size() const {
  int s = 0;
  for (const auto& r : rows) s += static_cast<int>(r.size());
  return s;
}

bool StandardTableau::is_standard() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) return false;
    if (i > 0 && rows[i].size() > rows[i - 1].size()) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j > 0 && rows[i][j] <= rows[i][j - 1]) return false;
      if (i > 0 && rows[i][j] <= rows[i - 1][j]) return false;
    }
  }
  auto e = entries();
  std::sort(e.begin(), e.end());
  return std::adjacent_find(e.begin(), e.end()) == e.end();
}

std::vector<int> StandardTableau::entries() const { return row_reading_word(); }

std::vector<int> StandardTableau::row_reading_word() const {
  std::vector<int> out;
  for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::string StandardTableau::to_string() const {
  if (rows.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ";";
    for (std::size_t j = 0; j < rows[i].size(); ++j) out += (j ? " " : "") + std::to_string(rows[i][j]);
  }
  return out;
}

StandardTableau StandardTableau::parse(std::string_view text) {
  StandardTableau t;
  std::string s(text);
  if (s.find_first_not_of(" \t") == std::string::npos) fail(Error::Kind::Parse, "empty tableau text");
  if (s.find_first_not_of(" \t-") == std::string::npos) return t;
  std::istringstream rows(s);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::istringstream in(row);
    std::vector<int> r;
    std::string tok;
    while (in >> tok) {
      try {
        std::size_t used = 0;
        r.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        fail(Error::Kind::Parse, "bad tableau entry '" + tok + "'");
      }
    }
    if (r.empty()) fail(Error::Kind::Parse, "empty row in tableau '" + s + "'");
    t.rows.push_back(std::move(r));
  }
  if (!t.is_standard()) fail(Error::Kind::InvalidInput, "tableau is not standard: '" + s + "'");
  return t;
}

std::string Bitableau::to_string() const { return plus.to_string() + " | " + minus.to_string(); }

Bitableau Bitableau::parse(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
    fail(Error::Kind::Parse, "bitableau needs exactly one '|'");
  return {StandardTableau::parse(text.substr(0, bar)), StandardTableau::parse(text.substr(bar + 1))};
}

int row_insert(StandardTableau& t, int x) {
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    auto& row = t.rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return static_cast<int>(r);
    }
    std::swap(*it, x);
  }
  t.rows.push_back({x});
  return static_cast<int>(t.rows.size()) - 1;
}

namespace {

void record(StandardTableau& q, int row, int label) {
  if (row == static_cast<int>(q.rows.size())) q.rows.emplace_back();
  q.rows[row].push_back(label);
}

// Reverse RS on (P, Q) with arbitrary increasing labels in Q; returns
// (label, value) pairs in increasing label order.
std::vector<std::pair<int, int>> reverse_rs(StandardTableau p, StandardTableau q) {
  if (p.shape() != q.shape()) fail(Error::Kind::InvalidInput, "tableaux have different shapes");
  std::vector<std::pair<int, int>> out;
  while (!q.rows.empty()) {
    std::size_t best = 0;
    for (std::size_t r = 1; r < q.rows.size(); ++r)
      if (q.rows[r].back() > q.rows[best].back()) best = r;
    const int label = q.rows[best].back();
    q.rows[best].pop_back();
    int x = p.rows[best].back();
    p.rows[best].pop_back();
    if (q.rows[best].empty()) {
      q.rows.erase(q.rows.begin() + static_cast<std::ptrdiff_t>(best));
      p.rows.erase(p.rows.begin() + static_cast<std::ptrdiff_t>(best));
    }
    for (std::size_t r = best; r-- > 0;) {
      auto& row = p.rows[r];
      auto it = std::lower_bound(row.begin(), row.end(), x);
      --it;
      std::swap(*it, x);
    }
    out.emplace_back(label, x);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

void require_standard(const StandardTableau& t) {
  if (!t.is_standard()) fail(Error::Kind::InvalidInput, "tableau is not standard: " + t.to_string());
}

}  // namespace

std::pair<StandardTableau, StandardTableau> rs_classic(std::span<const int> perm) {
  StandardTableau p, q;
  for (std::size_t i = 0; i < perm.size(); ++i) record(q, row_insert(p, perm[i]), static_cast<int>(i) + 1);
  return {p, q};
}

std::pair<StandardTableau, StandardTableau> rs_classic(const SignedPerm& u) {
  if (u.length_t() != 0) fail(Error::Kind::Domain, "rs_classic expects a positive permutation");
  const auto w = u.window_vector();
  return rs_classic(std::span<const int>(w));
}

std::vector<int> rs_classic_inverse(const StandardTableau& p, const StandardTableau& q) {
  require_standard(p);
  require_standard(q);
  std::vector<int> out;
  int expect = 1;
  for (const auto& [label, value] : reverse_rs(p, q)) {
    if (label != expect++) fail(Error::Kind::InvalidInput, "recording tableau entries are not 1..n");
    out.push_back(value);
  }
  return out;
}

std::pair<Bitableau, Bitableau> rs_generalized(const SignedPerm& w) {
  Bitableau a, b;
  for (int i = 1; i <= w.rank(); ++i) {
    const int x = w(i);
    if (x > 0) record(b.plus, row_insert(a.plus, x), i);
    else record(b.minus, row_insert(a.minus, -x), i);
  }
  return {a, b};
}

SignedPerm rs_generalized_inverse(const Bitableau& a, const Bitableau& b) {
  for (const auto* t : {&a.plus, &a.minus, &b.plus, &b.minus}) require_standard(*t);
  if (a.shape() != b.shape()) fail(Error::Kind::InvalidInput, "A and B have different shapes");
  const int n = a.size();
  auto check_cover = [n](const Bitableau& t) {
    auto e = t.plus.entries();
    const auto m = t.minus.entries();
    e.insert(e.end(), m.begin(), m.end());
    std::sort(e.begin(), e.end());
    for (int i = 0; i < n; ++i)
      if (e[i] != i + 1) fail(Error::Kind::InvalidInput, "bitableau entries are not {1..n}: " + t.to_string());
  };
  check_cover(a);
  check_cover(b);
  std::vector<int> window(static_cast<std::size_t>(n));
  for (const auto& [pos, v] : reverse_rs(a.plus, b.plus)) window[pos - 1] = v;
  for (const auto& [pos, v] : reverse_rs(a.minus, b.minus)) window[pos - 1] = -v;
  return SignedPerm::from_window(window);
}

Bipartition shape(const SignedPerm& w) { return rs_generalized(w).first.shape(); }

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t count_standard_tableaux(const Partition& shape) {
  const auto conj = conjugate(shape);
  int n = 0;
  for (int p : shape) n += p;
  // n! / Π hooks, accumulated as a fraction kept integral by dividing late.
  std::uint64_t num = 1;
  for (int i = 2; i <= n; ++i) num *= static_cast<std::uint64_t>(i);
  std::uint64_t den = 1;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c) den *= static_cast<std::uint64_t>(shape[r] - c + conj[c] - static_cast<int>(r) - 1);
  return num / den;
}

std::uint64_t count_standard_bitableaux(const Bipartition& shape) {
  int k = 0;
  for (int p : shape.plus) k += p;
  return binomial(shape.size(), k) * count_standard_tableaux(shape.plus) * count_standard_tableaux(shape.minus);
}

std::uint64_t count_standard_bitableaux(int n) {
  std::uint64_t total = 0;
  for (const auto& lambda : bipartitions(n)) total += count_standard_bitableaux(lambda);
  return total;
}

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
  int n = 0;
  for (int p : shape) n += p;
  if (n == 0) return {StandardTableau{}};
  std::vector<StandardTableau> out;
  // Remove the box holding n from each outer corner and recurse.
  for (std::size_t r = 0; r < shape.size(); ++r) {
    if (r + 1 < shape.size() && shape[r + 1] == shape[r]) continue;
    Partition smaller = shape;
    if (--smaller[r] == 0) smaller.pop_back();
    for (auto t : standard_tableaux(smaller)) {
      record(t, static_cast<int>(r), n);
      out.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const StandardTableau& x, const StandardTableau& y) { return x.row_reading_word() < y.row_reading_word(); });
  return out;
}

std::vector<Bitableau> standard_bitableaux(const Bipartition& shape) {
  const int n = shape.size();
  int k = 0;
  for (int p : shape.plus) k += p;
  const auto plus = standard_tableaux(shape.plus);
  const auto minus = standard_tableaux(shape.minus);
  std::vector<Bitableau> out;
  auto relabel = [](StandardTableau t, const std::vector<int>& labels) {
    for (auto& row : t.rows)
      for (auto& x : row) x = labels[static_cast<std::size_t>(x - 1)];
    return t;
  };
  std::vector<bool> choose(static_cast<std::size_t>(n), false);
  std::fill(choose.begin(), choose.begin() + k, true);
  do {
    std::vector<int> pl, mi;
    for (int i = 0; i < n; ++i) (choose[i] ? pl : mi).push_back(i + 1);
    for (const auto& p : plus)
      for (const auto& m : minus) out.push_back({relabel(p, pl), relabel(m, mi)});
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return out;
}

SignedPerm canonical_element(const Bipartition& lambda, int n) {
  if (lambda.size() != n) fail(Error::Kind::Domain, "bipartition " + lambda.to_string() + " is not of " + std::to_string(n));
  std::vector<int> parts = lambda.plus;
  parts.insert(parts.end(), lambda.minus.begin(), lambda.minus.end());
  int q = 0;
  for (int p : lambda.plus) q += p;
  std::vector<int> window;
  int start = 0;
  for (int p : parts) {
    for (int j = p; j >= 1; --j) window.push_back(start + j);
    start += p;
  }
  for (int i = 0; i < q; ++i) window[static_cast<std::size_t>(i)] = -window[static_cast<std::size_t>(i)];
  const auto w = SignedPerm::from_window(window);
  require_invariant(shape(w) == lambda.conjugate(), "sh(w_lambda) != lambda'");
  return w;
}

}  // namespace bcells
