#pragma once

#include <stdexcept>
#include <string>

namespace symball {

/// Base class of every error thrown by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in complex spaces of different dimension.
class dimension_mismatch : public error {
 public:
  using error::error;
};

/// A value violates a domain constraint (point outside the ball,
/// matrix not unitary, invalid partition, ...).
class domain_error : public error {
 public:
  using error::error;
};

/// An exact integer result does not fit in 64 bits.
class overflow_error : public error {
 public:
  using error::error;
};

/// A black-box map failed the induced-map checks (non-diagonal image of a
/// diagonal, or round-trip mismatch against the recovered generator).
class not_induced : public error {
 public:
  using error::error;
};

/// Malformed or out-of-schema JSON input.  `path` locates the offending
/// element inside the document ("/points/2" style).
class schema_error : public error {
 public:
  schema_error(std::string path, const std::string& message)
      : error(path.empty() ? message : path + ": " + message),
        path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace symball
