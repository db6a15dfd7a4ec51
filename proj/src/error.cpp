#include "gp/error.hpp"

namespace gp {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::MissingFile: return "MissingFile";
    case Errc::SchemaViolation: return "SchemaViolation";
    case Errc::DanglingVideoId: return "DanglingVideoId";
    case Errc::OutOfRangeTimestamp: return "OutOfRangeTimestamp";
    case Errc::MalformedTimestamp: return "MalformedTimestamp";
    case Errc::UnsortableOverlap: return "UnsortableOverlap";
    case Errc::UnorderedScenes: return "UnorderedScenes";
    case Errc::EmptySelection: return "EmptySelection";
    case Errc::NonPositiveDuration: return "NonPositiveDuration";
    case Errc::BothModalitiesDisabled: return "BothModalitiesDisabled";
    case Errc::BudgetUnsatisfiable: return "BudgetUnsatisfiable";
    case Errc::AuthError: return "AuthError";
    case Errc::RateLimited: return "RateLimited";
    case Errc::TransportError: return "TransportError";
    case Errc::ContextOverflow: return "ContextOverflow";
    case Errc::MockMiss: return "MockMiss";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::IoError: return "IoError";
    case Errc::InvalidConfig: return "InvalidConfig";
  }
  return "UnknownError";
}

}  // namespace gp
