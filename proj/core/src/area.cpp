#include "bcells/area.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bcells/error.hpp"
#include "bcells/tableau.hpp"

namespace bcells {

namespace {

GenWord concat(std::initializer_list<GenWord> parts) {
  GenWord out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

GenWord descending(int from, int to) {
  GenWord out;
  for (int i = from; i >= to; --i) out.push_back(Generator::s(i));
  return out;
}

GenWord ascending(int from, int to) {
  GenWord out;
  for (int i = from; i <= to; ++i) out.push_back(Generator::s(i));
  return out;
}

bool is_reduced(int n, const GenWord& word) { return from_word(n, word).length() == static_cast<int>(word.size()); }

std::vector<SignedPerm> sorted(std::vector<SignedPerm> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<SignedPerm> embedded_suffixes(const GenWord& word, int m, int n) {
  std::vector<SignedPerm> out;
  for (const auto& s : suffixes(from_word(m, word))) out.push_back(embed(s, n));
  return out;
}

std::vector<SignedPerm> area_elements_of(const GroupEnumeration& group, std::vector<ElementIndex>& indices) {
  std::vector<SignedPerm> out;
  for (ElementIndex i = 0; i < group.size(); ++i) {
    if (in_area(group.at(i))) {
      indices.push_back(i);
      out.push_back(group.at(i));
    }
  }
  return out;
}

}  // namespace

bool in_area_by_window(const SignedPerm& w) {
  int last_neg = w.rank() + 1;
  int last_pos = w.rank() + 1;
  for (int i = 1; i <= w.rank(); ++i) {
    const int x = w(i);
    int& last = x < 0 ? last_neg : last_pos;
    if (std::abs(x) >= last) return false;
    last = std::abs(x);
  }
  return true;
}

bool in_area_by_shape(const SignedPerm& w) {
  const auto sh = shape(w);
  auto column = [](const Partition& p) { return std::all_of(p.begin(), p.end(), [](int x) { return x == 1; }); };
  return column(sh.plus) && column(sh.minus);
}

bool in_area(const SignedPerm& w) {
  const bool by_window = in_area_by_window(w);
  require_invariant(by_window == in_area_by_shape(w), "Area_n window test disagrees with the shape test");
  return by_window;
}

bool in_area_reduced(const SignedPerm& w) {
  if (!in_area(w)) return false;
  const auto wj = longest_element_J(w.rank());
  return w != wj && w != wj * longest_element(w.rank());
}

GenWord p_word(int m, int q) {
  GenWord out;
  if (q <= 0 || q >= m) return out;
  for (int j = 0; j < q; ++j) {
    const auto block = descending(m - q + j, 1 + j);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

GenWord p_word_alt(int m, int q) {
  GenWord out;
  if (q <= 0 || q >= m) return out;
  for (int j = 0; j < m - q; ++j) {
    const auto block = ascending(m - q - j, m - 1 - j);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

GenWord chi_word(int n, int q) { return descending(n - 1, q); }

AreaWords build_words(int n) {
  if (n < 1 || n > kMaxRank) fail(Error::Kind::InvalidRank, "build_words: rank out of range");
  AreaWords w;
  w.n = n;
  for (int q = 0; q <= n; ++q) {
    GenWord a;
    for (int j = 0; j < q; ++j) a = concat({a, descending(j, 1), GenWord{Generator::t()}});
    GenWord b;
    if (q <= n - 2)
      for (int j = q + 1; j <= n - 1; ++j) b = concat({b, descending(j, q + 1)});
    const auto ae = from_word(n, a);
    const auto be = from_word(n, b);
    const auto sigma = from_word(n, concat({a, b}));
    require_invariant(ae * be == sigma, "sigma_{n,q} != a_q b_q");
    require_invariant(ae * be == be * ae, "a_q and b_q do not commute");
    require_invariant(sigma.length() == ae.length() + be.length() && is_reduced(n, a) && is_reduced(n, b),
                      "l(sigma_{n,q}) != l(a_q) + l(b_q)");
    w.a.push_back(a);
    w.b.push_back(b);
    w.sigma.push_back(sigma);

    const auto p = p_word(n, q);
    const auto p_alt = p_word_alt(n, q);
    const auto pe = from_word(n, p);
    require_invariant(pe == from_word(n, p_alt), "the two expressions of p_{n,q} differ");
    require_invariant(is_reduced(n, p) && is_reduced(n, p_alt), "p_{n,q} expression is not reduced");
    w.p.push_back(p);
    w.p_alt.push_back(p_alt);
    w.p_elem.push_back(pe);
    w.p_suffixes.push_back(suffixes(pe));
    require_invariant(w.p_suffixes.back().size() == binomial(n, q), "p_{n,q} does not have C(n,q) suffixes");

    w.chi.push_back(q == 0 ? GenWord{} : chi_word(n, q));
  }
  for (int q = 0; q < n; ++q) {
    const auto left = concat({descending(n - q - 1, 1), GenWord{Generator::t()}, w.p[q]});
    const auto right = concat({w.p[q + 1], GenWord{Generator::t()}, ascending(1, q)});
    const auto pi = from_word(n, left);
    require_invariant(pi == from_word(n, right), "the two expressions of Pi_{n,q} differ");
    require_invariant(is_reduced(n, left) && is_reduced(n, right), "Pi_{n,q} expression is not reduced");
    w.pi_left.push_back(left);
    w.pi_right.push_back(right);
    w.pi_elem.push_back(pi);

    const auto lower = embed(from_word(std::max(n - 1, 0), p_word(n - 1, q)), n);
    require_invariant(is_suffix(lower, w.p_elem[q]), "p_{n-1,q} is not a suffix of p_{n,q}");
    w.p_lower_suffixes.push_back(embedded_suffixes(p_word(n - 1, q), n - 1, n));
  }
  for (int q = 1; q <= n; ++q) {
    const auto lower = embed(from_word(n - 1, p_word(n - 1, q - 1)), n);
    const auto chi = from_word(n, w.chi[q]);
    require_invariant(lower * chi == w.p_elem[q] && lower.length() + chi.length() == w.p_elem[q].length(),
                      "p_{n,q} != p_{n-1,q-1} chi_q with lengths adding");
  }
  return w;
}

AreaCell asymptotic_cell(const AreaWords& words, int q, const SignedPerm& tau) {
  if (q < 0 || q > words.n) fail(Error::Kind::Domain, "asymptotic_cell: q out of range");
  const auto& sfx = words.p_suffixes[q];
  const auto it = std::find(sfx.begin(), sfx.end(), tau);
  if (it == sfx.end()) fail(Error::Kind::Domain, "asymptotic_cell: " + tau.to_string() + " is not a suffix of p_{n,q}");
  AreaCell cell;
  cell.q = q;
  cell.tau = tau;
  cell.tau_code = static_cast<int>(it - sfx.begin());
  const auto& sigma = words.sigma[q];
  const auto tau_inv = tau.inverse();
  for (const auto& pi : sfx) {
    const auto x = pi * sigma * tau_inv;
    require_invariant(x.length() == pi.length() + sigma.length() + tau.length(),
                      "pi sigma_{n,q} tau^-1 is not reduced");
    cell.members.push_back(x);
  }
  cell.members = sorted(std::move(cell.members));
  return cell;
}

AreaDecomposition area_decomposition(const GroupEnumeration& group, const AreaWords& words) {
  const int n = words.n;
  if (group.rank() != n) fail(Error::Kind::InvalidInput, "area_decomposition: rank mismatch");
  AreaDecomposition out;
  const auto area = area_elements_of(group, out.elements);
  std::map<SignedPerm, ClassId> cell_of;
  for (int q = 0; q <= n; ++q) {
    std::size_t omega = 0;
    for (const auto& tau : words.p_suffixes[q]) {
      auto cell = asymptotic_cell(words, q, tau);
      const auto b = rs_generalized(cell.members.front()).second;
      for (const auto& x : cell.members) {
        require_invariant(in_area(x), "cell member outside Area_n");
        require_invariant(rs_generalized(x).second == b, "cell is not contained in a B_n fiber");
        require_invariant(cell_of.emplace(x, static_cast<ClassId>(out.cells.size())).second, "cells overlap");
      }
      omega += cell.members.size();
      out.cells.push_back(std::move(cell));
    }
    const auto zq = zeta(n, q);
    const auto by_shape = static_cast<std::size_t>(
        std::count_if(area.begin(), area.end(), [&](const SignedPerm& x) { return shape(x) == zq; }));
    require_invariant(omega == binomial(n, q) * binomial(n, q) && by_shape == omega, "|Omega_{zeta_q}| != C(n,q)^2");
  }
  require_invariant(cell_of.size() == area.size(), "cells do not cover Area_n");
  require_invariant(out.cells.size() == (std::size_t{1} << n), "Area_n does not have 2^n cells");
  std::set<Bitableau> recordings;
  for (const auto& c : out.cells) recordings.insert(rs_generalized(c.members.front()).second);
  require_invariant(recordings.size() == out.cells.size(), "two cells share a B_n value");
  std::vector<ClassId> labels;
  for (const auto& x : area) labels.push_back(cell_of.at(x));
  out.partition = GroupPartition(n, std::move(labels));
  return out;
}

std::vector<SignedPerm> upsilon(const SignedPerm& w) {
  if (!in_area(w)) fail(Error::Kind::Domain, "upsilon: " + w.to_string() + " is not in Area_n");
  const GroupEnumeration group(w.rank());
  std::vector<SignedPerm> out;
  const auto d = w.right_descents();
  for (const auto& z : group.elements())
    if (z.right_descents() == d && in_area(z)) out.push_back(z);
  return sorted(std::move(out));
}

UpsilonDecomposition upsilon_decomposition(const GroupEnumeration& group, const AreaWords& words) {
  const int n = words.n;
  if (group.rank() != n) fail(Error::Kind::InvalidInput, "upsilon_decomposition: rank mismatch");
  if (n < 2) fail(Error::Kind::Domain, "upsilon_decomposition: requires n >= 2");
  UpsilonDecomposition out;
  const auto area = area_elements_of(group, out.elements);
  std::map<GenSet, std::vector<SignedPerm>> by_rdes;
  std::map<Bitableau, std::vector<SignedPerm>> by_b;
  for (const auto& x : area) {
    by_rdes[x.right_descents()].push_back(x);
    by_b[rs_generalized(x).second].push_back(x);
  }
  auto gamma = [&](const SignedPerm& x) { return by_b.at(rs_generalized(x).second); };
  std::map<SignedPerm, ClassId> class_of;
  for (int q = 0; q < n; ++q) {
    const auto pi_sfx = suffixes(words.pi_elem[q]);
    const auto& sigma = words.sigma[q];
    int code = 0;
    for (const auto& tau : words.p_lower_suffixes[q]) {
      UpsilonClass u;
      u.q = q;
      u.tau = tau;
      u.tau_code = code++;
      const auto base = sigma * tau.inverse();
      for (const auto& pi : pi_sfx) u.members.push_back(pi * base);
      u.members = sorted(std::move(u.members));
      require_invariant(u.members == sorted(by_rdes.at(base.right_descents())),
                        "Upsilon suffix description disagrees with the rdes fiber");
      require_invariant(u.members.size() == binomial(n, q) + binomial(n, q + 1), "|Upsilon| != C(n,q) + C(n,q+1)");
      const auto other = words.sigma[q + 1] * from_word(n, words.chi[q + 1]).inverse() * tau.inverse();
      auto halves = gamma(base);
      const auto& second = gamma(other);
      require_invariant(gamma(base) != second, "Upsilon halves coincide");
      halves.insert(halves.end(), second.begin(), second.end());
      require_invariant(sorted(std::move(halves)) == u.members, "Upsilon is not Gamma(sigma tau^-1) + Gamma(...)");
      for (const auto& x : u.members)
        require_invariant(class_of.emplace(x, static_cast<ClassId>(out.classes.size())).second,
                          "Upsilon classes overlap");
      out.classes.push_back(std::move(u));
    }
  }
  require_invariant(class_of.size() == area.size(), "Upsilon classes do not cover Area_n");
  require_invariant(out.classes.size() == (std::size_t{1} << (n - 1)), "Area_n does not have 2^{n-1} Upsilon classes");
  std::vector<ClassId> labels;
  for (const auto& x : area) labels.push_back(class_of.at(x));
  out.partition = GroupPartition(n, std::move(labels));
  return out;
}

SubcellSplit subcell_split(const AreaWords& words, const AreaCell& cell) {
  const int n = words.n;
  if (cell.members.empty()) fail(Error::Kind::Domain, "subcell_split: empty cell");
  const auto sigma = *std::min_element(cell.members.begin(), cell.members.end(),
                                       [](const SignedPerm& x, const SignedPerm& y) { return x.length() < y.length(); });
  const int q = sigma.length_t();
  if (q != cell.q) fail(Error::Kind::Domain, "subcell_split: cell is not of the form Gamma_q tau^-1");
  SubcellSplit out;
  if (q == 0 || q == n) {
    if (cell.members.size() != 1) fail(Error::Kind::Domain, "subcell_split: expected a singleton cell");
    out.gamma1 = cell.members;
    return out;
  }
  const auto s_last = gen_bit(Generator::s(n - 1));
  std::vector<SignedPerm> g1a, g2a, g1b, g2b;
  for (const auto& pi : words.p_suffixes[q]) ((support(pi) & s_last) ? g2a : g1a).push_back(pi * sigma);
  for (const auto& pi : words.p_lower_suffixes[q]) g1b.push_back(pi * sigma);
  const auto chi = from_word(n, words.chi[q]);
  for (const auto& pi : words.p_lower_suffixes[q - 1]) g2b.push_back(pi * chi * sigma);
  out.gamma1 = sorted(std::move(g1a));
  out.gamma2 = sorted(std::move(g2a));
  require_invariant(out.gamma1 == sorted(std::move(g1b)), "the two descriptions of gamma_1 differ");
  require_invariant(out.gamma2 == sorted(std::move(g2b)), "the two descriptions of gamma_2 differ");
  auto all = out.gamma1;
  all.insert(all.end(), out.gamma2.begin(), out.gamma2.end());
  require_invariant(sorted(std::move(all)) == cell.members, "gamma_1 + gamma_2 != Gamma");
  require_invariant(out.gamma2.empty() == (cell.members.size() == 1), "gamma_2 empty iff |Gamma| = 1 fails");
  return out;
}

}  // namespace bcells
