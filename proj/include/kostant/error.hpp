#pragma once

#include <stdexcept>
#include <string>

namespace kostant {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed Dynkin diagram, bad node reference, unsupported type.
class DiagramError : public Error {
public:
  using Error::Error;
};

/// A precondition on an operation's arguments was violated.
class DomainError : public Error {
public:
  using Error::Error;
};

/// A configurable size cap (poset elements, full-group KL) was exceeded.
class SizeLimitError : public Error {
public:
  using Error::Error;
};

/// An internal consistency check failed (e.g. a KL convention produced a
/// negative coefficient). Indicates a bug or misconfiguration, never bad input.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

/// Shipped configuration data (Wallach constants, golden tables) is invalid.
class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace kostant
