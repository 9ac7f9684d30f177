#pragma once

#include <stdexcept>
#include <string>

namespace qha {

// Input outside the supported scope or violating a stated precondition.
class ScopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A verification that should hold by construction failed.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qha
