#ifndef OMEGA_ERRORS_HPP
#define OMEGA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace omega {

/// Base class for all engine errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text. Carries 1-based line/column of the offending token.
class ParseError : public Error {
public:
  ParseError(const std::string& what, int line, int column)
    : Error(what + " (line " + std::to_string(line) + ", column " +
            std::to_string(column) + ")"),
      line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// Operands belong to different rings or incompatible free-module ambients.
class MismatchError : public Error {
public:
  using Error::Error;
};

/// An element required to be homogeneous is not.
class NonHomogeneousError : public Error {
public:
  using Error::Error;
};

/// Operation requires a nonzero module (depth, dim, pd, omega, ...).
class ZeroModuleError : public Error {
public:
  using Error::Error;
};

/// A configured resource cap (S-pairs, enumeration degree, resolution
/// length) was hit. Distinct from a wrong answer by contract.
class ResourceCapError : public Error {
public:
  using Error::Error;
};

/// Exponent or degree arithmetic left the 32-bit range.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// Two independent pipelines that must agree did not. A certified bug in
/// the engine, never user error; aborts the computation that raised it.
class InternalInconsistencyError : public Error {
public:
  using Error::Error;
};

} // namespace omega

#endif
