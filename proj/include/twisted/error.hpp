#pragma once

#include <stdexcept>
#include <string>

namespace twisted {

/// Malformed or out-of-contract input: bad tables, non-generating sets,
/// matrices that are not automorphisms, sizes above the documented caps.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An internal self-check failed. Every operation that re-verifies its own
/// output (witnesses, coefficient matching, certificates) throws this
/// rather than returning a wrong answer.
class VerificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace twisted
