#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chessprobe {

enum class ErrorCode {
  InvalidArgument,
  InvalidBoard,
  IllegalMove,
  EmptyOrOpponentSquare,
  MalformedUci,
  AmbiguousSan,
  NoLegalMatch,
  IllegalGame,
  MalformedSequence,
  InsufficientCorpus,
  ExhaustedPool,
  NotIllegal,
  LengthMismatch,
  MissingProbe,
  DuplicateProbe,
  UnknownToken,
  MalformedRecord,
  EmptyResults,
  Io,
};

std::string_view to_string(ErrorCode code);

// Every failure the library reports carries one of the codes above so callers
// (the CLI in particular) can map them to exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace chessprobe
