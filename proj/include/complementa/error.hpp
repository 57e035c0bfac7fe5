#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace complementa {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size limit would be exceeded; `cap_name()` names the limit.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string cap_name, std::size_t cap)
      : Error(cap_name + " cap exceeded (limit " + std::to_string(cap) + ")"),
        cap_name_(std::move(cap_name)),
        cap_(cap) {}

  const std::string& cap_name() const { return cap_name_; }
  std::size_t cap() const { return cap_; }

 private:
  std::string cap_name_;
  std::size_t cap_;
};

/// The caller broke an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A table, action or homomorphism failed its structural audit.
class InvalidStructure : public Error {
 public:
  using Error::Error;
};

}  // namespace complementa
