#include "ttflow/error.hpp"

namespace ttflow {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidOrdering: return "InvalidOrdering";
    case ErrorKind::LightlikeInput: return "LightlikeInput";
    case ErrorKind::OutOfRegion: return "OutOfRegion";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::StepOutOfRegion: return "StepOutOfRegion";
    case ErrorKind::NonpositiveAcceleration: return "NonpositiveAcceleration";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
  }
  return "Unknown";
}

}  // namespace ttflow
