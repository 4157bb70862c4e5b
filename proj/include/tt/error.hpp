#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tt {

enum class ErrorKind {
  InvalidInput,
  IncompatibleRadicands,
  InvalidParams,
  InvalidRadii,
  InvalidTriple,
  VerificationFailure,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for every library failure; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tt
