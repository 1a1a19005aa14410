#ifndef TPC_ERRORS_HPP
#define TPC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tpc {

enum class ErrorKind {
  // kernel
  UnboundName,
  TypeMismatch,
  KindMismatch,
  IllTyped,
  // presentations
  DuplicateName,
  IllFormedClassifier,
  // morphisms
  MissingAssignment,
  ExtraAssignment,
  SourceTargetMismatch,
  NotAnEmbedding,
  // combinators
  NotInjective,
  NameCollision,
  SharedBaseMismatch,
  RenamingConditionViolated,
  NotDisjoint,
  SquareDoesNotCommute,
  ClashWithContext,
  // elaborator
  SpecificationError,
  TypeError,
  DuplicateDefinition,
  UnknownReference,
  // frontend
  LexError,
  ParseError,
  // everything else is a bug in this library, not in user input
  Internal,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnboundName: return "UnboundName";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::IllTyped: return "IllTyped";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::IllFormedClassifier: return "IllFormedClassifier";
    case ErrorKind::MissingAssignment: return "MissingAssignment";
    case ErrorKind::ExtraAssignment: return "ExtraAssignment";
    case ErrorKind::SourceTargetMismatch: return "SourceTargetMismatch";
    case ErrorKind::NotAnEmbedding: return "NotAnEmbedding";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::NameCollision: return "NameCollision";
    case ErrorKind::SharedBaseMismatch: return "SharedBaseMismatch";
    case ErrorKind::RenamingConditionViolated: return "RenamingConditionViolated";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::SquareDoesNotCommute: return "SquareDoesNotCommute";
    case ErrorKind::ClashWithContext: return "ClashWithContext";
    case ErrorKind::SpecificationError: return "SpecificationError";
    case ErrorKind::TypeError: return "TypeError";
    case ErrorKind::DuplicateDefinition: return "DuplicateDefinition";
    case ErrorKind::UnknownReference: return "UnknownReference";
    case ErrorKind::LexError: return "LexError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "?";
}

struct Error : std::runtime_error {
  ErrorKind kind;
  std::string raw;  // message without the kind prefix
  int line = 0;     // 1-based when known, 0 otherwise
  int col = 0;

  Error(ErrorKind k, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(k)) + ": " + msg), kind(k), raw(msg) {}
  Error(ErrorKind k, const std::string& msg, int l, int c)
      : std::runtime_error(std::string(error_kind_name(k)) + ": " + msg),
        kind(k),
        raw(msg),
        line(l),
        col(c) {}
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

[[noreturn]] inline void bug(const std::string& msg) { throw Error(ErrorKind::Internal, msg); }

}  // namespace tpc

#endif
