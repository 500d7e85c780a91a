#pragma once

#include <stdexcept>
#include <string>

namespace mlakit {

/// Base of every error raised by the library. `kind()` is the stable name
/// used in structured reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define MLAKIT_DEFINE_ERROR(Name)                                     \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  };

MLAKIT_DEFINE_ERROR(ParseError)
MLAKIT_DEFINE_ERROR(NotAnIdeal)
MLAKIT_DEFINE_ERROR(NotASubalgebra)
MLAKIT_DEFINE_ERROR(NotAnIsomorphism)
MLAKIT_DEFINE_ERROR(NotAHomomorphism)
MLAKIT_DEFINE_ERROR(PreconditionViolated)
MLAKIT_DEFINE_ERROR(ConstructionFailure)
MLAKIT_DEFINE_ERROR(InvalidExtension)
MLAKIT_DEFINE_ERROR(OrderCapExceeded)
MLAKIT_DEFINE_ERROR(NoStemFound)
MLAKIT_DEFINE_ERROR(NotOneClass)
MLAKIT_DEFINE_ERROR(InternalError)

#undef MLAKIT_DEFINE_ERROR

}  // namespace mlakit
