#pragma once

#include <stdexcept>
#include <string>

namespace mukai {

/// Malformed or inconsistent input: dimension mismatch, invalid lattice,
/// non-integral class where an integral one is required.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well formed but violates a theorem hypothesis.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Configuration outside what the library handles.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mukai
