#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fanflip {

enum class ErrorCode {
  EmptyComplex,
  InvalidVertexId,
  FaceNotPresent,
  VertexCollision,
  NotEquivariant,
  ActionNotFree,
  UnpairedVertex,
  QuotientRequiresSubdivision,
  MoveNotAdmissible,
  InterferingAntipodalMove,
  NoAdmissibleMove,
  IncompleteLabelling,
  InvalidLabelling,
  NoWitness,
  NotClosedPseudomanifold,
  CorruptSequence,
  CertificateUnavailable,
  InvalidDimension,
  GenerationFailed,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyComplex: return "EmptyComplex";
    case ErrorCode::InvalidVertexId: return "InvalidVertexId";
    case ErrorCode::FaceNotPresent: return "FaceNotPresent";
    case ErrorCode::VertexCollision: return "VertexCollision";
    case ErrorCode::NotEquivariant: return "NotEquivariant";
    case ErrorCode::ActionNotFree: return "ActionNotFree";
    case ErrorCode::UnpairedVertex: return "UnpairedVertex";
    case ErrorCode::QuotientRequiresSubdivision: return "QuotientRequiresSubdivision";
    case ErrorCode::MoveNotAdmissible: return "MoveNotAdmissible";
    case ErrorCode::InterferingAntipodalMove: return "InterferingAntipodalMove";
    case ErrorCode::NoAdmissibleMove: return "NoAdmissibleMove";
    case ErrorCode::IncompleteLabelling: return "IncompleteLabelling";
    case ErrorCode::InvalidLabelling: return "InvalidLabelling";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::NotClosedPseudomanifold: return "NotClosedPseudomanifold";
    case ErrorCode::CorruptSequence: return "CorruptSequence";
    case ErrorCode::CertificateUnavailable: return "CertificateUnavailable";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Replay hit an inadmissible move; `step` is its zero-based index.
class CorruptSequence : public Error {
 public:
  CorruptSequence(std::size_t step, const std::string& what)
      : Error(ErrorCode::CorruptSequence, "step " + std::to_string(step) + ": " + what),
        step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// The reduction was inconclusive. The directly counted number of positive
/// alternating facets is still attached.
class CertificateUnavailable : public Error {
 public:
  CertificateUnavailable(long long alpha_plus, const std::string& what)
      : Error(ErrorCode::CertificateUnavailable, what), alpha_plus_(alpha_plus) {}

  long long alpha_plus() const noexcept { return alpha_plus_; }

 private:
  long long alpha_plus_;
};

}  // namespace fanflip
