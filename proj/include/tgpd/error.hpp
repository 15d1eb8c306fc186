#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tgpd {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two operands live over carriers of different width.
class CarrierMismatch : public Error {
public:
  using Error::Error;
};

class PreconditionViolation : public Error {
public:
  using Error::Error;
};

class CapExceeded : public Error {
public:
  using Error::Error;
};

/// A structure failed its construction invariants (duplicate labels,
/// non-open member, table out of range, ...).
class InvalidStructure : public Error {
public:
  using Error::Error;
};

/// A search that a theorem guarantees to succeed came back empty, or a
/// derived object violated a proven property. Always a bug.
class Defect : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string &msg, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

} // namespace tgpd
