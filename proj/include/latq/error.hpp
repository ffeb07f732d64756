#pragma once

#include <stdexcept>
#include <string>

namespace latq {

// Error categories map onto CLI exit codes: parse -> 1, precondition -> 2,
// internal check -> 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

// A caller violated a documented precondition (bad input, cap exceeded, ...).
struct PreconditionError : Error {
  using Error::Error;
};

// An internal consistency check failed; indicates a bug or a broken invariant.
struct CheckError : Error {
  using Error::Error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw PreconditionError(msg);
}

inline void check(bool cond, const std::string& msg) {
  if (!cond) throw CheckError(msg);
}

}  // namespace latq
