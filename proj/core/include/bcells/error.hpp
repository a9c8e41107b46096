#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bcells {

/// Single exception type for the library; `kind()` says which contract was
/// broken so callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    InvalidRank,         // rank outside what the operation supports
    InvalidElement,      // malformed signed permutation / word
    Parse,               // text format could not be parsed
    Domain,              // precondition on an argument violated
    Regime,              // weight outside the validity region of a construction
    Budget,              // input too large for the configured budget
    InvalidInput,        // structurally inconsistent input (e.g. shape mismatch)
    InvariantViolation,  // a checked mathematical identity failed
  };

  Error(Kind kind, const std::string& what);

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

std::string_view to_string(Error::Kind kind);

[[noreturn]] void fail(Error::Kind kind, const std::string& what);

/// Throws InvariantViolation with `what` unless `cond` holds. Always on.
inline void require_invariant(bool cond, const char* what) {
  if (!cond) fail(Error::Kind::InvariantViolation, what);
}

}  // namespace bcells
