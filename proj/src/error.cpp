#include "btws/error.hpp"

namespace btws {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedToken: return "MalformedToken";
    case ErrorKind::EdgeMultiplicity: return "EdgeMultiplicity";
    case ErrorKind::SplitLink: return "SplitLink";
    case ErrorKind::InconsistentOrientation: return "InconsistentOrientation";
    case ErrorKind::LetterOutOfRange: return "LetterOutOfRange";
    case ErrorKind::ZeroLetter: return "ZeroLetter";
    case ErrorKind::NotAKnot: return "NotAKnot";
    case ErrorKind::UngradedGenerator: return "UngradedGenerator";
    case ErrorKind::DegenerateMatrix: return "DegenerateMatrix";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::MeridianUnset: return "MeridianUnset";
    case ErrorKind::NonPositiveM: return "NonPositiveM";
    case ErrorKind::EvenDeterminant: return "EvenDeterminant";
    case ErrorKind::DeterminantMismatch: return "DeterminantMismatch";
    case ErrorKind::InconsistentExtension: return "InconsistentExtension";
    case ErrorKind::IncompatiblePresentation: return "IncompatiblePresentation";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::MissingLinData: return "MissingLinData";
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::UnknownKnot: return "UnknownKnot";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace btws
