#pragma once

#include <stdexcept>
#include <string>

namespace metallic {

// Alphabet parameter outside 1..kMaxAlphabet.
class InvalidAlphabet : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A letter larger than the alphabet parameter.
class LetterOutOfRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Letters are in range but letter a is not preceded by 0.
class InvalidWord : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Generic precondition violation (index out of range, length mismatch, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class VertexNotFound : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A vertex count or all-pairs workload exceeds its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested (a, n) is outside the support of an operation.
class Unsupported : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A constructive routine produced something that failed its own validation.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a structural theorem appears to be violated at runtime.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace metallic
