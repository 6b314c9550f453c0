#pragma once

#include <stdexcept>
#include <string>

namespace credcheck {

// Every failure the library can raise, so callers (and the CLI) can map
// failures to stable, machine-parseable codes.
enum class ErrorCode {
  IoFailure,
  CsvFormat,
  MissingColumn,
  BadLabel,
  EmptyText,
  EmptyDataset,
  DegenerateClass,
  InvalidConfig,
  InvalidPattern,
  EmptyCorpus,
  EmptyDocument,
  UnfittedModel,
  EmptyTrainingSet,
  SingleClass,
  NonPositiveAlpha,
  EmptyEvaluation,
  ModelFormat,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// what() is "<CodeName>: <message>".
[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace credcheck
