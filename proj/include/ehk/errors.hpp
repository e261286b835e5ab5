#pragma once

#include <stdexcept>
#include <string>

namespace ehk {

// A computation would exceed a configured resource cap (slice dimension,
// degree, ...).  Callers map this to exit code 20.  A capacity error is the
// only permitted alternative to a correct answer: no routine ever degrades to
// an approximate or unverified result.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed external input: DIMACS graphs, model documents, CLI values.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ill-formed in-process data: mismatched generator universes, coordinates
// against the wrong slice, inhomogeneous input where homogeneous is required.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Two independent decision procedures disagreed, or a certificate failed
// re-validation.  Always a bug in this library, never a property of the
// input; surfaced loudly instead of being papered over.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ehk
