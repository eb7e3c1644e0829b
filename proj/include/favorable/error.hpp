#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace favorable {

enum class ErrorKind {
  RowNotCompetitionRank,
  DimensionMismatch,
  IndexOutOfRange,
  PreconditionNotMet,
  StepBudgetExhausted,
  SpaceTooLarge,
  DegenerateRange,
  UnsupportedUtility,
  EmptySample,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every library operation. The kind is stable and
/// intended for dispatch; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace favorable
