#ifndef SUBDIREKT_ERROR_HPP_
#define SUBDIREKT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace subdirekt {

enum class ErrorCode {
  MalformedTable,
  NotAssociative,
  TooSmall,
  NotSeparating,
  BoundTooSmall,
  PeriodNotDetected,
  NotApplicable,
  TooManyGenerators,
  TooLarge,
  EmptySet,
  MissingOne,
  BadM,
  IsUnionOfGroups,
  HasRelativeIdentities,
  DegenerateTriple,
  UnknownSuite,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace subdirekt

#endif  // SUBDIREKT_ERROR_HPP_
