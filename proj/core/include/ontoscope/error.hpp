#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ontoscope {

enum class ErrorCode {
  MalformedLine,
  UnterminatedAnnotation,
  MalformedRule,
  MalformedTriple,
  UnknownPredicate,
  InvalidModeName,
  InvalidMatcher,
  CycleBudgetExceeded,
  LayerViolation,
  ConfigError,
  IoError,
};

const char* error_code_name(ErrorCode code);

/// Carries a machine-readable code plus optional source/line context so the
/// CLI can print `file:line: message` on stderr.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string source = {},
        std::size_t line = 0);

  ErrorCode code() const { return code_; }
  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }  // 1-based; 0 means no line info

 private:
  static std::string compose(const std::string& message,
                             const std::string& source, std::size_t line);

  ErrorCode code_;
  std::string source_;
  std::size_t line_;
};

}  // namespace ontoscope
