#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tripent {

// Signed variable index: +i is x_i, −i is ¬x_i.
using Literal = int;
using Clause = std::vector<Literal>;

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

inline constexpr std::size_t kMaxClauseLiterals = 3;
inline constexpr int kMaxBruteForceVars = 24;

// Throws Error{MalformedFormula} on out-of-range literals or empty clauses,
// Error{ClauseTooLarge} on more than three literals.
void validate(const CnfFormula& f);

// Truth value per variable; index 0 is x_1.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<bool> values) : values_(std::move(values)) {}

  // Bit i of `bits` is x_{i+1}.
  static Assignment from_bits(int num_vars, std::uint64_t bits);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool value(int var) const { return values_.at(static_cast<std::size_t>(var - 1)); }
  bool satisfies_literal(Literal lit) const { return lit > 0 ? value(lit) : !value(-lit); }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<bool> values_;
};

std::string to_string(const Assignment& v);  // DIMACS-style "v 1 -2 0"
std::string to_string(const CnfFormula& f);  // "(x1 | ~x2) & (~x1)"

// DIMACS CNF: `c` comment lines, one `p cnf <vars> <clauses>` header, then
// zero-terminated clauses (which may span lines). Throws Error{ParseError}
// carrying the line number, or Error{ClauseTooLarge}.
CnfFormula parse_dimacs(std::string_view text);
std::string format_dimacs(const CnfFormula& f);

// Throws Error{IncompleteAssignment} if v does not cover exactly 1..n.
bool eval_assignment(const CnfFormula& f, const Assignment& v);
bool clause_satisfied(const Clause& c, const Assignment& v);

// First satisfying assignment counting upward from all-false (x_1 is the
// least significant bit). Throws Error{TooManyVariables} above 24 variables.
std::optional<Assignment> brute_force_sat(const CnfFormula& f);

}  // namespace tripent
