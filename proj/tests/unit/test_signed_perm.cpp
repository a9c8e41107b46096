#include <algorithm>

#include "bcells/error.hpp"
#include "bcells/signed_perm.hpp"
#include "helpers.hpp"

using namespace bcells;
using test::P;
using test::win;

TEST_CASE("from_word evaluates generator windows") {
  CHECK(from_word(2, parse_word("t")) == P({-1, 2}));
  CHECK(from_word(3, {}) == SignedPerm::identity(3));
  CHECK(from_word(2, parse_word("t s1 t s1")) == P({-1, -2}));
  CHECK(win(from_word(2, parse_word("t s1 t s1"))) == oracle::evaluate(2, {0, 1, 0, 1}));
  CHECK_THROWS_KIND(from_word(2, parse_word("s2")), InvalidRank);
}

TEST_CASE("window text round-trips and rejects malformed input") {
  const auto y = SignedPerm::parse("-7,-5,6,4,3,-2,1");
  CHECK(y.to_string() == "-7,-5,6,4,3,-2,1");
  CHECK(SignedPerm::parse(" ( 2, -1 ) ") == P({2, -1}));
  CHECK_THROWS_KIND(SignedPerm::parse("1,1"), InvalidElement);
  CHECK_THROWS_KIND(SignedPerm::parse("1,x"), Parse);
  CHECK_THROWS_KIND(SignedPerm::parse("1,2,"), Parse);
  CHECK(to_string(parse_word("t  s1 s2")) == "t s1 s2");
}

TEST_CASE("length and length_t agree with Cayley-graph distances") {
  for (int n = 1; n <= 4; ++n) {
    const oracle::Cayley cayley(n);
    for (const auto& [w, d] : cayley.elements()) {
      const auto x = test::perm(w);
      CHECK(x.length() == d);
      const auto neg = static_cast<int>(std::count_if(w.begin(), w.end(), [](int v) { return v < 0; }));
      CHECK(x.length_t() == neg);
      const auto word = reduced_word(x);
      CHECK(static_cast<int>(word.size()) == d);
      CHECK(std::count_if(word.begin(), word.end(), [](Generator g) { return g.is_t(); }) == neg);
      CHECK(from_word(n, word) == x);
    }
  }
}

TEST_CASE("length_t counts t letters in reduced words up to rank 5") {
  const oracle::Cayley cayley(5);
  for (const auto& w : cayley.elements()) {
    const auto x = test::perm(w.first);
    const auto word = reduced_word(x);
    CHECK(std::count_if(word.begin(), word.end(), [](Generator g) { return g.is_t(); }) == x.length_t());
  }
}

TEST_CASE("longest elements") {
  const auto w0 = longest_element(2);
  CHECK(w0 == P({-1, -2}));
  CHECK(w0.length() == 4);
  CHECK(w0.length_t() == 2);
  for (int n = 1; n <= 4; ++n) {
    const auto wj = longest_element_J(n);
    CHECK(wj.length() == oracle::Cayley(n).length(win(wj)));
    CHECK(wj.length() == n * (n - 1) / 2);
    CHECK(wj.length_t() == 0);
  }
}

TEST_CASE("descent window rule matches the length change") {
  for (int n = 1; n <= 4; ++n) {
    const oracle::Cayley cayley(n);
    for (const auto& [w, d] : cayley.elements()) {
      const auto x = test::perm(w);
      for (int g = 0; g < n; ++g) {
        const int dg = cayley.length(oracle::act(w, g));
        CHECK(std::abs(dg - d) == 1);
        CHECK(x.has_right_descent(Generator{g}) == (dg < d));
        CHECK(x.right_mul(Generator{g}) == test::perm(oracle::act(w, g)));
      }
      for (int j = 1; j <= n; ++j) {
        const auto tj = reflection_t(n, j);
        CHECK(is_descent_tj(x, j) == (cayley.length(win(x * tj)) < d));
      }
    }
  }
}

TEST_CASE("descents of a worked element") {
  const auto y = SignedPerm::parse("-7,-5,6,4,3,-2,1");
  const GenSet expected = gen_bit(Generator::t()) | gen_bit(Generator::s(3)) | gen_bit(Generator::s(4)) |
                          gen_bit(Generator::s(5));
  CHECK(right_descents(y) == expected);
  CHECK(gen_set_to_string(right_descents(y)) == "t,s3,s4,s5");
  CHECK(is_descent_tj(y, 2));
  CHECK(right_descents(SignedPerm::identity(4)) == 0);
}

TEST_CASE("reflection t_j negates position j") {
  CHECK(reflection_t(3, 1) == P({-1, 2, 3}));
  CHECK(reflection_t(3, 3) == P({1, 2, -3}));
  CHECK(reflection_t(4, 2) == from_word(4, parse_word("s1 t s1")));
}

TEST_CASE("group axioms") {
  const oracle::Cayley cayley(3);
  const auto& elems = cayley.elements();
  std::vector<SignedPerm> all;
  for (const auto& [w, d] : elems) all.push_back(test::perm(w));
  const auto e = SignedPerm::identity(3);
  for (const auto& x : all) {
    CHECK(x * x.inverse() == e);
    CHECK(x.inverse() * x == e);
    for (const auto& y : all) {
      CHECK((x * y).inverse() == y.inverse() * x.inverse());
      for (int i = 1; i <= 3; ++i) CHECK((x * y)(i) == x(y(i)));
    }
  }
  for (std::size_t i = 0; i < all.size(); i += 5)
    for (std::size_t j = 0; j < all.size(); j += 3)
      for (std::size_t k = 0; k < all.size(); k += 7) CHECK((all[i] * all[j]) * all[k] == all[i] * (all[j] * all[k]));
}

TEST_CASE("is_suffix agrees with trailing-segment search") {
  for (int n = 1; n <= 3; ++n) {
    const oracle::Cayley cayley(n);
    for (const auto& [w, dw] : cayley.elements()) {
      CHECK(is_suffix(SignedPerm::identity(n), test::perm(w)));
      for (const auto& [y, dy] : cayley.elements()) CHECK(is_suffix(test::perm(y), test::perm(w)) == cayley.is_suffix(y, w));
    }
  }
}

TEST_CASE("suffixes lists exactly the suffixes, sorted by length") {
  const oracle::Cayley cayley(3);
  for (const auto& [w, d] : cayley.elements()) {
    const auto sfx = suffixes(test::perm(w));
    std::size_t expected = 0;
    for (const auto& [y, dy] : cayley.elements()) expected += cayley.is_suffix(y, w);
    CHECK(sfx.size() == expected);
    CHECK(std::is_sorted(sfx.begin(), sfx.end(),
                         [](const SignedPerm& a, const SignedPerm& b) { return a.length() < b.length(); }));
  }
}

TEST_CASE("Bruhat order agrees with the subword property") {
  for (int n = 1; n <= 3; ++n) {
    const oracle::Cayley cayley(n);
    const auto w0 = longest_element(n);
    for (const auto& [w, dw] : cayley.elements()) {
      const auto x = test::perm(w);
      CHECK(bruhat_leq(SignedPerm::identity(n), x));
      CHECK(bruhat_leq(w0, x) == (x == w0));
      for (const auto& [y, dy] : cayley.elements()) CHECK(bruhat_leq(test::perm(y), x) == cayley.bruhat_leq(y, w));
    }
  }
}

TEST_CASE("coset decompositions") {
  for (int n = 1; n <= 4; ++n) {
    const oracle::Cayley cayley(n);
    for (const auto& [w, d] : cayley.elements()) {
      const auto x = test::perm(w);
      for (auto I : {Parabolic::J, Parabolic::K}) {
        const auto c = coset_decompose(x, I);
        CHECK(c.rep * c.part == x);
        CHECK(c.rep.length() + c.part.length() == x.length());
        CHECK(in_parabolic(c.part, I));
        if (in_parabolic(x, I)) CHECK(c.rep == SignedPerm::identity(n));
      }
    }
  }
}

TEST_CASE("coset representatives are minimal on the whole parabolic") {
  for (int n = 1; n <= 3; ++n) {
    const oracle::Cayley cayley(n);
    std::vector<SignedPerm> all;
    for (const auto& [w, d] : cayley.elements()) all.push_back(test::perm(w));
    for (auto I : {Parabolic::J, Parabolic::K}) {
      for (const auto& x : all) {
        const auto rep = coset_decompose(x, I).rep;
        for (const auto& u : all)
          if (in_parabolic(u, I)) CHECK((rep * u).length() == rep.length() + u.length());
      }
    }
  }
}

TEST_CASE("t_n times an element of W_K has representative t_n") {
  for (int n = 2; n <= 4; ++n) {
    const auto tn = reflection_t(n, n);
    const oracle::Cayley cayley(n);
    for (const auto& [w, d] : cayley.elements()) {
      const auto u = test::perm(w);
      if (!in_parabolic(u, Parabolic::K)) continue;
      CHECK(tn * u == u * tn);
      CHECK(coset_decompose(tn * u, Parabolic::K).rep == tn);
    }
  }
}

TEST_CASE("J representative sorts the window") {
  const auto c = coset_decompose(P({3, -1, -4, 2}), Parabolic::J);
  CHECK(c.rep == P({-4, -1, 2, 3}));
  CHECK(c.part == P({4, 2, 1, 3}));
}

TEST_CASE("weights compare slopes exactly") {
  const WeightFunction w(2, 5);
  CHECK(w.slope_greater(2));
  CHECK_FALSE(w.slope_greater(3));
  CHECK(classify(w, 4) == Regime::SubAsymptotic);
  CHECK(classify(WeightFunction(1, 3), 4) == Regime::Intermediate);
  CHECK(classify(WeightFunction(1, 4), 4) == Regime::Asymptotic);
  CHECK(classify(WeightFunction(1, 2), 4) == Regime::Low);
  CHECK_THROWS_KIND(WeightFunction(0, 1), Domain);
}
