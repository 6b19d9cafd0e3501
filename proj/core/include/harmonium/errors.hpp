#pragma once

#include <stdexcept>
#include <string>

namespace harmonium {

/// Base class of every failure the library reports through exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A nonzero coefficient sits on a root of the Euler polynomial; the log
/// sector would be needed and the engine does not produce it.
class ResonanceError : public Error {
 public:
  using Error::Error;
};

/// No sign-compatible real root of the quantization polynomial.
class NoBranchError : public Error {
 public:
  using Error::Error;
};

class InconsistentParams : public Error {
 public:
  using Error::Error;
};

class QuadratureNonConvergence : public Error {
 public:
  using Error::Error;
};

class NodeCountUnreachable : public Error {
 public:
  using Error::Error;
};

/// The minimized functional has no interior minimum in the bracket, or a
/// root search found no sign change.
class BracketError : public Error {
 public:
  using Error::Error;
};

}  // namespace harmonium
