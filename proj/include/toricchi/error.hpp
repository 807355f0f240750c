#pragma once

#include <stdexcept>
#include <string>

namespace toricchi {

// Input that cannot be interpreted at all: bad JSON, wrong shapes, length
// mismatches, out-of-range indices.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structurally sound fan that violates one of the complete simplicial fan
// invariants.
class InvalidFan : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation that hit a state a complete fan never produces, e.g. an
// unbounded divisor polyhedron.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace toricchi
