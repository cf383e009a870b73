#pragma once

#include <stdexcept>
#include <string>

namespace gammalab {

enum class ErrorCode {
  InvalidTopology,
  PointOutOfRange,
  CapExceeded,
  EmptySubspace,
  IncompleteOperationTable,
  NotAnOperation,
  NotAnOpenSet,
  UnknownReference,
  DuplicateName,
  IncompleteMap,
  Syntax,
  Usage,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gammalab
