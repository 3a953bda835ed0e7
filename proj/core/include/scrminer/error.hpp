#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace scrminer {

/// Malformed schema, data or parameters.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive enumeration would exceed the configured condset cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::uint64_t required, std::uint64_t cap);

  std::uint64_t required() const { return required_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

}  // namespace scrminer
