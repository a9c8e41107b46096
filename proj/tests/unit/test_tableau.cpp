#include <algorithm>
#include <map>
#include <set>

#include "bcells/error.hpp"
#include "bcells/tableau.hpp"
#include "helpers.hpp"

using namespace bcells;

namespace {

// Textbook row insertion, independent of the library's implementation.
struct Rs {
  std::vector<std::vector<int>> p, q;
  void insert(int x, int label) {
    for (std::size_t r = 0;; ++r) {
      if (r == p.size()) {
        p.push_back({x});
        q.push_back({label});
        return;
      }
      auto it = std::upper_bound(p[r].begin(), p[r].end(), x);
      if (it == p[r].end()) {
        p[r].push_back(x);
        q[r].push_back(label);
        return;
      }
      std::swap(*it, x);
    }
  }
};

std::vector<std::vector<int>> rows(const StandardTableau& t) { return t.rows; }

}  // namespace

TEST_CASE("classic RS basics") {
  const std::vector<int> id{1, 2, 3};
  const auto [p, q] = rs_classic(id);
  CHECK(p.to_string() == "1 2 3");
  CHECK(q == p);
  const std::vector<int> rev{3, 2, 1};
  const auto [pr, qr] = rs_classic(rev);
  CHECK(pr.to_string() == "1;2;3");
  CHECK(qr == pr);
}

TEST_CASE("classic RS agrees with textbook insertion and longest increasing subsequences") {
  for (int n = 1; n <= 6; ++n) {
    auto perm = oracle::identity(n);
    do {
      Rs ref;
      for (int i = 0; i < n; ++i) ref.insert(perm[i], i + 1);
      const auto [p, q] = rs_classic(perm);
      CHECK(rows(p) == ref.p);
      CHECK(rows(q) == ref.q);
      CHECK(static_cast<int>(p.rows.front().size()) == oracle::lis(perm));
      CHECK(rs_classic_inverse(p, q) == perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("Knuth classes of S_4 are the P fibers") {
  for (int n = 3; n <= 4; ++n) {
    const auto classes = oracle::knuth_classes_sn(n);
    for (const auto& [u, cu] : classes)
      for (const auto& [v, cv] : classes) CHECK((cu == cv) == (rs_classic(u).first == rs_classic(v).first));
  }
}

TEST_CASE("generalized RS splits by sign") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& w : enumerate(n)) {
      Rs plus, minus;
      for (int i = 1; i <= n; ++i) (w(i) > 0 ? plus : minus).insert(std::abs(w(i)), i);
      const auto [a, b] = rs_generalized(w);
      CHECK(rows(a.plus) == plus.p);
      CHECK(rows(b.plus) == plus.q);
      CHECK(rows(a.minus) == minus.p);
      CHECK(rows(b.minus) == minus.q);
    }
  }
}

TEST_CASE("worked element") {
  const auto y = SignedPerm::parse("-7,-5,6,4,3,-2,1");
  const auto [a, b] = rs_generalized(y);
  CHECK(a == Bitableau::parse("1;3;4;6 | 2;5;7"));
  CHECK(b == Bitableau::parse("3;4;5;7 | 1;2;6"));
  CHECK(shape(y).to_string() == "(1,1,1,1 | 1,1,1)");
}

TEST_CASE("element rebuilt from tableaux shares B with the worked element") {
  const auto w = rs_generalized_inverse(Bitableau::parse("3;5;6;7 | 1;2;4"), Bitableau::parse("3;4;5;7 | 1;2;6"));
  const auto y = SignedPerm::parse("-7,-5,6,4,3,-2,1");
  CHECK(rs_generalized(w).second == rs_generalized(y).second);
  for (int i = 1; i <= 7; ++i) CHECK((w(i) < 0) == (y(i) < 0));
}

TEST_CASE("identity has single-row tableaux") {
  for (int n = 1; n <= 5; ++n) {
    const auto [a, b] = rs_generalized(SignedPerm::identity(n));
    CHECK(a.plus.rows.size() == 1);
    CHECK(a.minus.empty());
    CHECK(a == b);
  }
}

TEST_CASE("generalized RS is a bijection compatible with inversion") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::pair<Bitableau, Bitableau>> seen;
    std::map<Bipartition, std::set<Bitableau>> recordings;
    for (const auto& w : enumerate(n)) {
      const auto ab = rs_generalized(w);
      CHECK(seen.insert(ab).second);
      CHECK(rs_generalized_inverse(ab.first, ab.second) == w);
      CHECK(ab.first.shape() == ab.second.shape());
      recordings[ab.first.shape()].insert(ab.second);
      if (n <= 4) {
        const auto inv = rs_generalized(w.inverse());
        CHECK(inv.first == ab.second);
        CHECK(inv.second == ab.first);
      }
    }
    std::uint64_t squares = 0;
    for (const auto& lambda : bipartitions(n)) {
      const auto c = count_standard_bitableaux(lambda);
      CHECK(recordings[lambda].size() == c);
      CHECK(standard_bitableaux(lambda).size() == c);
      squares += c * c;
    }
    CHECK(squares == group_order(n));
  }
}

TEST_CASE("inverse RS rejects mismatched shapes") {
  CHECK_THROWS_KIND(rs_generalized_inverse(Bitableau::parse("1 2 | -"), Bitableau::parse("1;2 | -")), InvalidInput);
  CHECK_THROWS_KIND(rs_generalized_inverse(Bitableau::parse("1 2 | -"), Bitableau::parse("1 | 2")), InvalidInput);
}

TEST_CASE("tableau counts") {
  CHECK(count_standard_bitableaux(2) == 6);
  CHECK(count_standard_bitableaux(3) == 20);
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t total = 0;
    for (const auto& lambda : bipartitions(n)) {
      std::uint64_t by_enum = 0;
      if (n <= 5) by_enum = standard_bitableaux(lambda).size();
      const auto c = count_standard_bitableaux(lambda);
      if (n <= 5) CHECK(c == by_enum);
      total += c;
    }
    CHECK(total == count_standard_bitableaux(n));
  }
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : partitions(n)) {
      const auto ts = standard_tableaux(p);
      CHECK(ts.size() == count_standard_tableaux(p));
      for (const auto& t : ts) CHECK(t.is_standard());
      CHECK(std::is_sorted(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
        return x.row_reading_word() < y.row_reading_word();
      }));
    }
  }
}

TEST_CASE("partitions and conjugation") {
  CHECK(partitions(4).size() == 5);
  CHECK(bipartitions(3).size() == 10);
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  const Bipartition l{{2}, {1, 1}};
  CHECK(l.conjugate() == Bipartition{{2}, {1, 1}});
  CHECK(Bipartition{{3}, {}}.conjugate() == Bipartition{{}, {1, 1, 1}});
  CHECK(zeta(3, 1) == Bipartition{{1, 1}, {1}});
  for (const auto& b : bipartitions(4)) CHECK(b.conjugate().conjugate() == b);
}

TEST_CASE("tableau text format") {
  const auto t = StandardTableau::parse("1 3 4;2");
  CHECK(t.to_string() == "1 3 4;2");
  CHECK(t.shape() == Partition{3, 1});
  CHECK(StandardTableau::parse("-").empty());
  CHECK_THROWS_KIND(StandardTableau::parse("2 1"), InvalidInput);
  CHECK(Bitableau::parse("1 2 | 3").to_string() == "1 2 | 3");
}

TEST_CASE("canonical elements") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : bipartitions(n)) CHECK(shape(canonical_element(lambda, n)) == lambda.conjugate());
    CHECK(canonical_element(Bipartition{{}, Partition{n}}, n) == longest_element_J(n));
    CHECK(shape(longest_element_J(n)) == zeta(n, 0));
  }
}
