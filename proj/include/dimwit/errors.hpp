#pragma once

#include <stdexcept>
#include <string>

namespace dimwit {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape mismatches and violated type invariants (bad norms, non-Hermitian
// input, entries out of range, unknown names).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A computation produced a value that cannot be trusted (imaginary residue
// above tolerance, non-finite objective).
class NumericIntegrityError : public Error {
 public:
  using Error::Error;
};

// Input is valid in shape but degenerate in content (linearly dependent
// vectors fed to orthogonalization).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// The request exceeds what this implementation supports (e.g. exhaustive
// search beyond its size limit).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace dimwit
