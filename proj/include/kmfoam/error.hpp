#pragma once

#include <stdexcept>
#include <string>

namespace kmfoam {

/// Input that fails parsing or structural validation (exit code 2).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A broken internal invariant: inexact division, grading mismatch, a
/// corrupted cache entry (exit code 3).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvariantError(what);
}

}  // namespace kmfoam
