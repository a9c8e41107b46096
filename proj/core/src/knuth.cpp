#include "bcells/knuth.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "bcells/area.hpp"
#include "bcells/error.hpp"

namespace bcells {

std::string_view to_string(KnuthKind kind) {
  switch (kind) {
    case KnuthKind::I: return "I";
    case KnuthKind::II: return "II";
    case KnuthKind::III: return "III";
  }
  return "?";
}

std::vector<KnuthRelation> relations_at_level(int k, std::initializer_list<KnuthKind> kinds) {
  std::vector<KnuthRelation> out;
  for (auto kind : kinds) out.push_back({kind, k});
  return out;
}

bool move_applies(const SignedPerm& w, const KnuthMove& m) {
  const int i = m.position;
  if (m.level > w.rank()) return false;
  switch (m.kind) {
    case KnuthKind::I:
      if (i < 1 || i > m.level - 2) return false;
      return (w(i + 1) < w(i) && w(i) < w(i + 2)) || (w(i + 2) < w(i) && w(i) < w(i + 1));
    case KnuthKind::II:
      if (i < 1 || i > m.level - 2) return false;
      return (w(i + 1) < w(i + 2) && w(i + 2) < w(i)) || (w(i) < w(i + 2) && w(i + 2) < w(i + 1));
    case KnuthKind::III:
      if (i < 1 || i > m.level - 1) return false;
      return (w(i) > 0) != (w(i + 1) > 0);
  }
  return false;
}

std::vector<std::pair<KnuthMove, SignedPerm>> applicable_moves(const SignedPerm& w,
                                                               std::span<const KnuthRelation> relations) {
  std::vector<std::pair<KnuthMove, SignedPerm>> out;
  for (const auto& r : relations) {
    if (r.level > w.rank()) fail(Error::Kind::Domain, "Knuth level exceeds rank");
    const int last = r.kind == KnuthKind::III ? r.level - 1 : r.level - 2;
    for (int i = 1; i <= last; ++i) {
      const KnuthMove m{r.kind, r.level, i};
      if (move_applies(w, m)) out.emplace_back(m, w.right_mul(m.generator()));
    }
  }
  return out;
}

std::vector<std::pair<KnuthMove, SignedPerm>> applicable_moves(const SignedPerm& w, int k,
                                                               std::initializer_list<KnuthKind> kinds) {
  const auto rel = relations_at_level(k, kinds);
  return applicable_moves(w, rel);
}

GroupPartition knuth_classes(const GroupEnumeration& group, std::span<const KnuthRelation> relations) {
  DisjointSets sets(group.size());
  for (ElementIndex i = 0; i < group.size(); ++i)
    for (const auto& [m, y] : applicable_moves(group.at(i), relations)) sets.unite(i, group.index_of(y));
  return sets.partition(group.rank());
}

GroupPartition knuth_classes(int n, int k, std::initializer_list<KnuthKind> kinds) {
  const GroupEnumeration group(n);
  const auto rel = relations_at_level(k, kinds);
  return knuth_classes(group, rel);
}

std::vector<KnuthMove> welsh_bridge(const SignedPerm& w) {
  const int n = w.rank();
  if (n < 2) fail(Error::Kind::Domain, "welsh_bridge needs n >= 2");
  if (in_area(w)) fail(Error::Kind::Domain, "welsh_bridge: " + w.to_string() + " lies in Area_n");
  if ((w(n - 1) > 0) == (w(n) > 0)) fail(Error::Kind::Domain, "welsh_bridge: w(n-1), w(n) have the same sign");

  const std::vector<KnuthRelation> rel{{KnuthKind::I, n}, {KnuthKind::II, n}, {KnuthKind::III, n - 1}};
  const auto target = w.right_mul(Generator::s(n - 1));
  std::unordered_map<SignedPerm, std::pair<SignedPerm, KnuthMove>> parent;
  parent.emplace(w, std::pair{w, KnuthMove{KnuthKind::I, n, 0}});
  std::deque<SignedPerm> queue{w};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    if (x == target) {
      std::vector<KnuthMove> path;
      for (auto cur = x; cur != w;) {
        const auto& [prev, move] = parent.at(cur);
        path.push_back(move);
        cur = prev;
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (const auto& [m, y] : applicable_moves(x, rel)) {
      if (parent.try_emplace(y, std::pair{x, m}).second) queue.push_back(y);
    }
  }
  fail(Error::Kind::InvariantViolation, "no I_n/II_n/III_{n-1} path from " + w.to_string() + " to w*s_{n-1}");
}

SignedPerm apply_moves(const SignedPerm& w, std::span<const KnuthMove> moves) {
  auto x = w;
  for (const auto& m : moves) {
    if (!move_applies(x, m)) fail(Error::Kind::InvalidInput, "move does not apply to " + x.to_string());
    x = x.right_mul(m.generator());
  }
  return x;
}

std::string format_moves(std::span<const KnuthMove> moves) {
  std::string out;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (i) out += ", ";
    out += std::string(to_string(moves[i].kind)) + "@" + std::to_string(moves[i].position);
  }
  return out;
}

std::vector<KnuthMove> parse_moves(std::string_view text, int level) {
  std::vector<KnuthMove> out;
  std::istringstream in{std::string(text)};
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) continue;
    const auto at = item.find('@');
    if (at == std::string::npos) fail(Error::Kind::Parse, "move '" + item + "' lacks '@'");
    const auto kind = item.substr(0, at);
    KnuthMove m{KnuthKind::I, level, 0};
    if (kind == "I") m.kind = KnuthKind::I;
    else if (kind == "II") m.kind = KnuthKind::II;
    else if (kind == "III") m.kind = KnuthKind::III;
    else fail(Error::Kind::Parse, "unknown move kind '" + kind + "'");
    try {
      m.position = std::stoi(item.substr(at + 1));
    } catch (const std::exception&) {
      fail(Error::Kind::Parse, "bad move position in '" + item + "'");
    }
    out.push_back(m);
  }
  return out;
}

}  // namespace bcells
