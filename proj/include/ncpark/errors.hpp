#pragma once

#include <stdexcept>
#include <string>

namespace ncpark {

/// Input that does not describe a valid object (bad partition, bad tuple, ...).
class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition of an operation was violated by the caller.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A desk-scale enumeration or matrix cap was exceeded.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (a bijection or convention bug).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ncpark
