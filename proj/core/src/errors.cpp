#include "credcheck/errors.hpp"

namespace credcheck {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::CsvFormat: return "CsvFormat";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::BadLabel: return "BadLabel";
    case ErrorCode::EmptyText: return "EmptyText";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::DegenerateClass: return "DegenerateClass";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidPattern: return "InvalidPattern";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::EmptyDocument: return "EmptyDocument";
    case ErrorCode::UnfittedModel: return "UnfittedModel";
    case ErrorCode::EmptyTrainingSet: return "EmptyTrainingSet";
    case ErrorCode::SingleClass: return "SingleClass";
    case ErrorCode::NonPositiveAlpha: return "NonPositiveAlpha";
    case ErrorCode::EmptyEvaluation: return "EmptyEvaluation";
    case ErrorCode::ModelFormat: return "ModelFormat";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace credcheck
