#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace surfalg {

enum class ErrorKind {
  // triangulation documents
  Malformed,
  DuplicateArcUse,
  DuplicateSegmentUse,
  UnglueableSide,
  NonOrientableGluing,
  Disconnected,
  InteriorVertex,
  MonogonOrDigon,
  // operations
  UnknownArc,
  UnknownVertex,
  UnknownArrow,
  BoundarySegmentNotFlippable,
  InvariantViolation,
  DiscSurface,
  NotOneDegree,
  NotAdmissible,
  ArrowInTwoFaces,
  NotGentle,
  InvalidWord,
  GeneratorCountMismatch,
  QuiverMismatch,
  SurfaceMismatch,
  GenusNonzero,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `label()` names the offending arc,
/// segment, arrow or vertex when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string label, const std::string& detail = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& label() const noexcept { return label_; }

 private:
  ErrorKind kind_;
  std::string label_;
};

}  // namespace surfalg
