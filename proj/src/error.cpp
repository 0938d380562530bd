#include "idealis/error.hpp"

namespace idealis {

const char* toString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::LatticeCapExceeded: return "LatticeCapExceeded";
    case ErrorKind::SearchCapExceeded: return "SearchCapExceeded";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotMultClosed: return "NotMultClosed";
    case ErrorKind::ZeroInS: return "ZeroInS";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ImproperIdeal: return "ImproperIdeal";
    case ErrorKind::NotW1AP: return "NotW1AP";
    case ErrorKind::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Error";
}

namespace {

std::string describe(std::size_t offset, const std::vector<std::string>& expected, const std::string& detail) {
  std::string msg = "at offset " + std::to_string(offset) + ": " + detail;
  if (!expected.empty()) {
    msg += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += "'" + expected[i] + "'";
    }
    msg += ")";
  }
  return msg;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& detail)
    : Error(ErrorKind::SyntaxError, describe(offset, expected, detail)),
      offset_(offset),
      expected_(std::move(expected)),
      detail_(detail) {}

}  // namespace idealis
