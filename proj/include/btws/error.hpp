#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace btws {

enum class ErrorKind {
  MalformedToken,
  EdgeMultiplicity,
  SplitLink,
  InconsistentOrientation,
  LetterOutOfRange,
  ZeroLetter,
  NotAKnot,
  UngradedGenerator,
  DegenerateMatrix,
  NotCoprime,
  MeridianUnset,
  NonPositiveM,
  EvenDeterminant,
  DeterminantMismatch,
  InconsistentExtension,
  IncompatiblePresentation,
  SearchSpaceTooLarge,
  MissingLinData,
  MalformedTable,
  UnknownKnot,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it onto an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        _kind(kind) {}

  ErrorKind kind() const noexcept { return _kind; }

 private:
  ErrorKind _kind;
};

}  // namespace btws
