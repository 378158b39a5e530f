#include "surfalg/error.hpp"

namespace surfalg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::DuplicateArcUse: return "DuplicateArcUse";
    case ErrorKind::DuplicateSegmentUse: return "DuplicateSegmentUse";
    case ErrorKind::UnglueableSide: return "UnglueableSide";
    case ErrorKind::NonOrientableGluing: return "NonOrientableGluing";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::InteriorVertex: return "InteriorVertex";
    case ErrorKind::MonogonOrDigon: return "MonogonOrDigon";
    case ErrorKind::UnknownArc: return "UnknownArc";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownArrow: return "UnknownArrow";
    case ErrorKind::BoundarySegmentNotFlippable: return "BoundarySegmentNotFlippable";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::DiscSurface: return "DiscSurface";
    case ErrorKind::NotOneDegree: return "NotOneDegree";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::ArrowInTwoFaces: return "ArrowInTwoFaces";
    case ErrorKind::NotGentle: return "NotGentle";
    case ErrorKind::InvalidWord: return "InvalidWord";
    case ErrorKind::GeneratorCountMismatch: return "GeneratorCountMismatch";
    case ErrorKind::QuiverMismatch: return "QuiverMismatch";
    case ErrorKind::SurfaceMismatch: return "SurfaceMismatch";
    case ErrorKind::GenusNonzero: return "GenusNonzero";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string& label, const std::string& detail) {
  std::string msg(to_string(kind));
  if (!label.empty()) msg += "(" + label + ")";
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

Error::Error(ErrorKind kind, std::string label, const std::string& detail)
    : std::runtime_error(compose(kind, label, detail)), kind_(kind), label_(std::move(label)) {}

}  // namespace surfalg
