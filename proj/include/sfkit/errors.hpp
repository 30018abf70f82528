#pragma once

#include <stdexcept>

namespace sfkit {

/// An input violates an operation's precondition (arity, membership, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The map has positive-dimensional generic fibers.
class NotGenericallyFinite : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace sfkit
