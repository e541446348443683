#include "ontoscope/error.hpp"

namespace ontoscope {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::UnterminatedAnnotation: return "UnterminatedAnnotation";
    case ErrorCode::MalformedRule: return "MalformedRule";
    case ErrorCode::MalformedTriple: return "MalformedTriple";
    case ErrorCode::UnknownPredicate: return "UnknownPredicate";
    case ErrorCode::InvalidModeName: return "InvalidModeName";
    case ErrorCode::InvalidMatcher: return "InvalidMatcher";
    case ErrorCode::CycleBudgetExceeded: return "CycleBudgetExceeded";
    case ErrorCode::LayerViolation: return "LayerViolation";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

std::string Error::compose(const std::string& message, const std::string& source,
                           std::size_t line) {
  if (source.empty()) {
    return message;
  }
  if (line == 0) {
    return source + ": " + message;
  }
  return source + ":" + std::to_string(line) + ": " + message;
}

Error::Error(ErrorCode code, const std::string& message, std::string source,
             std::size_t line)
    : std::runtime_error(compose(message, source, line)),
      code_(code),
      source_(std::move(source)),
      line_(line) {}

}  // namespace ontoscope
