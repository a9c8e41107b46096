#include "bcells/error.hpp"

namespace bcells {

Error::Error(Kind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

std::string_view to_string(Error::Kind kind) {
  switch (kind) {
    case Error::Kind::InvalidRank: return "invalid rank";
    case Error::Kind::InvalidElement: return "invalid element";
    case Error::Kind::Parse: return "parse error";
    case Error::Kind::Domain: return "domain error";
    case Error::Kind::Regime: return "regime error";
    case Error::Kind::Budget: return "budget exceeded";
    case Error::Kind::InvalidInput: return "invalid input";
    case Error::Kind::InvariantViolation: return "invariant violation";
  }
  return "error";
}

void fail(Error::Kind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace bcells
