#include "chessprobe/error.hpp"

namespace chessprobe {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidBoard: return "InvalidBoard";
    case ErrorCode::IllegalMove: return "IllegalMove";
    case ErrorCode::EmptyOrOpponentSquare: return "EmptyOrOpponentSquare";
    case ErrorCode::MalformedUci: return "MalformedUci";
    case ErrorCode::AmbiguousSan: return "AmbiguousSan";
    case ErrorCode::NoLegalMatch: return "NoLegalMatch";
    case ErrorCode::IllegalGame: return "IllegalGame";
    case ErrorCode::MalformedSequence: return "MalformedSequence";
    case ErrorCode::InsufficientCorpus: return "InsufficientCorpus";
    case ErrorCode::ExhaustedPool: return "ExhaustedPool";
    case ErrorCode::NotIllegal: return "NotIllegal";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::MissingProbe: return "MissingProbe";
    case ErrorCode::DuplicateProbe: return "DuplicateProbe";
    case ErrorCode::UnknownToken: return "UnknownToken";
    case ErrorCode::MalformedRecord: return "MalformedRecord";
    case ErrorCode::EmptyResults: return "EmptyResults";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace chessprobe
