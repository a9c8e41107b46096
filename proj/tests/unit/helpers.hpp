#pragma once

#include <vector>

#include "bcells/enumeration.hpp"
#include "bcells/signed_perm.hpp"
#include "doctest.h"
#include "oracles.hpp"

namespace test {

inline oracle::Window win(const bcells::SignedPerm& w) { return w.window_vector(); }

inline bcells::SignedPerm perm(const oracle::Window& w) { return bcells::SignedPerm::from_window(w); }

inline bcells::SignedPerm P(std::initializer_list<int> w) { return bcells::SignedPerm::from_window(std::vector<int>(w)); }

}  // namespace test

#define CHECK_THROWS_KIND(expr, k)                  \
  do {                                              \
    bool thrown_ = false;                           \
    try {                                           \
      (void)(expr);                                 \
    } catch (const bcells::Error& e_) {             \
      thrown_ = true;                               \
      CHECK(e_.kind() == bcells::Error::Kind::k);   \
    }                                               \
    CHECK(thrown_);                                 \
  } while (0)
