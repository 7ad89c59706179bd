#pragma once

#include <stdexcept>
#include <string>

namespace cayconn {

/// Bad argument to an operation (position out of range, u == v, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input that parses but violates a structural rule (triangle in a
/// unicyclic generating graph, disconnected generators, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds what can be materialized (n > kMaxArity, graph6 on
/// more than 62 vertices, ...).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cayconn
