#include "tripent/error.hpp"

namespace tripent {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidName: return "InvalidName";
    case ErrorKind::DuplicateLeaf: return "DuplicateLeaf";
    case ErrorKind::UnknownLeaf: return "UnknownLeaf";
    case ErrorKind::EmptyLeafSet: return "EmptyLeafSet";
    case ErrorKind::InconsistentInput: return "InconsistentInput";
    case ErrorKind::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorKind::SetTooLarge: return "SetTooLarge";
    case ErrorKind::MalformedArc: return "MalformedArc";
    case ErrorKind::UnknownNode: return "UnknownNode";
    case ErrorKind::ArcNotInGraph: return "ArcNotInGraph";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ResourceExhausted: return "ResourceExhausted";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ClauseTooLarge: return "ClauseTooLarge";
    case ErrorKind::EmptyClause: return "EmptyClause";
    case ErrorKind::MalformedFormula: return "MalformedFormula";
    case ErrorKind::IncompleteAssignment: return "IncompleteAssignment";
    case ErrorKind::TooManyVariables: return "TooManyVariables";
    case ErrorKind::UnsatisfyingAssignment: return "UnsatisfyingAssignment";
    case ErrorKind::NotAWitnessPath: return "NotAWitnessPath";
  }
  return "Unknown";
}

bool is_resource_guard(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UniverseTooLarge:
    case ErrorKind::SetTooLarge:
    case ErrorKind::BudgetExceeded:
    case ErrorKind::ResourceExhausted:
    case ErrorKind::TooManyVariables:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace tripent
