#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tripent {

enum class ErrorKind {
  InvalidName,
  DuplicateLeaf,
  UnknownLeaf,
  EmptyLeafSet,
  InconsistentInput,
  UniverseTooLarge,
  SetTooLarge,
  MalformedArc,
  UnknownNode,
  ArcNotInGraph,
  BudgetExceeded,
  ResourceExhausted,
  ParseError,
  ClauseTooLarge,
  EmptyClause,
  MalformedFormula,
  IncompleteAssignment,
  TooManyVariables,
  UnsatisfyingAssignment,
  NotAWitnessPath,
};

std::string_view to_string(ErrorKind kind);

// True for the guard errors (search/enumeration size limits).
bool is_resource_guard(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tripent
