#pragma once

#include <stdexcept>
#include <string>

namespace gp {

// Every failure the library reports, across all modules. Loaders and the
// gateway throw gp::Error carrying one of these codes; reply decoding never
// throws (malformed model output is data, not an error).
enum class Errc {
  // ingest
  MissingFile,
  SchemaViolation,
  DanglingVideoId,
  OutOfRangeTimestamp,
  MalformedTimestamp,
  UnsortableOverlap,
  UnorderedScenes,
  EmptySelection,
  // textualize
  NonPositiveDuration,
  BothModalitiesDisabled,
  // prompting
  BudgetUnsatisfiable,
  // llm gateway
  AuthError,
  RateLimited,
  TransportError,
  ContextOverflow,
  MockMiss,
  // evaluation
  LengthMismatch,
  EmptyInput,
  IoError,
  // configuration
  InvalidConfig,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace gp
