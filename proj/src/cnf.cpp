#include "tripent/cnf.hpp"

#include <charconv>
#include <cctype>
#include <sstream>

#include "tripent/error.hpp"

namespace tripent {

void validate(const CnfFormula& f) {
  if (f.num_vars < 0) throw Error(ErrorKind::MalformedFormula, "negative variable count");
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const auto& c = f.clauses[j];
    if (c.empty()) throw Error(ErrorKind::EmptyClause, "clause " + std::to_string(j + 1) + " is empty");
    if (c.size() > kMaxClauseLiterals) {
      throw Error(ErrorKind::ClauseTooLarge,
                  "clause " + std::to_string(j + 1) + " has " + std::to_string(c.size()) + " literals");
    }
    for (auto lit : c) {
      if (lit == 0 || lit > f.num_vars || -lit > f.num_vars) {
        throw Error(ErrorKind::MalformedFormula,
                    "literal " + std::to_string(lit) + " out of range in clause " + std::to_string(j + 1));
      }
    }
  }
}

Assignment Assignment::from_bits(int num_vars, std::uint64_t bits) {
  std::vector<bool> v(static_cast<std::size_t>(num_vars));
  for (int i = 0; i < num_vars; ++i) v[i] = (bits >> i) & 1u;
  return Assignment(std::move(v));
}

std::string to_string(const Assignment& v) {
  std::ostringstream os;
  os << 'v';
  for (int i = 1; i <= v.size(); ++i) os << ' ' << (v.value(i) ? i : -i);
  os << " 0";
  return os.str();
}

std::string to_string(const CnfFormula& f) {
  std::ostringstream os;
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    if (j) os << " & ";
    os << '(';
    for (std::size_t k = 0; k < f.clauses[j].size(); ++k) {
      const auto lit = f.clauses[j][k];
      if (k) os << " | ";
      os << (lit < 0 ? "~x" : "x") << (lit < 0 ? -lit : lit);
    }
    os << ')';
  }
  return os.str();
}

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  bool have_header = false;
  long declared_clauses = 0;
  Clause current;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> Error {
    return Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + msg);
  };

  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size() || line[i] == 'c') continue;
    if (line[i] == '%') break;  // SATLIB trailer
    if (line[i] == 'p') {
      if (have_header) throw fail("duplicate header");
      std::istringstream hs{std::string(line.substr(i))};
      std::string p, fmt;
      long nv = -1, nc = -1;
      if (!(hs >> p >> fmt >> nv >> nc) || p != "p" || fmt != "cnf" || nv < 0 || nc < 0) {
        throw fail("malformed header, expected 'p cnf <vars> <clauses>'");
      }
      std::string extra;
      if (hs >> extra) throw fail("trailing tokens after header");
      f.num_vars = static_cast<int>(nv);
      declared_clauses = nc;
      have_header = true;
      continue;
    }
    if (!have_header) throw fail("clause before 'p cnf' header");
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i == line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      long lit = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, lit);
      if (ec != std::errc() || ptr != line.data() + j) {
        throw fail("bad literal '" + std::string(line.substr(i, j - i)) + "'");
      }
      i = j;
      if (lit == 0) {
        if (current.empty()) throw fail("empty clause");
        if (current.size() > kMaxClauseLiterals) {
          throw Error(ErrorKind::ClauseTooLarge,
                      "line " + std::to_string(line_no) + ": clause has " +
                          std::to_string(current.size()) + " literals (at most 3 supported)");
        }
        for (auto l : current) {
          if (l > f.num_vars || -l > f.num_vars) {
            throw fail("literal " + std::to_string(l) + " exceeds declared variable count");
          }
        }
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (lit > INT32_MAX || lit < -INT32_MAX) throw fail("literal out of range");
      current.push_back(static_cast<Literal>(lit));
    }
  }
  if (!have_header) throw Error(ErrorKind::ParseError, "missing 'p cnf' header");
  if (!current.empty()) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": last clause not terminated by 0");
  }
  if (static_cast<long>(f.clauses.size()) != declared_clauses) {
    throw Error(ErrorKind::ParseError, "header declares " + std::to_string(declared_clauses) +
                                           " clauses, found " + std::to_string(f.clauses.size()));
  }
  return f;
}

std::string format_dimacs(const CnfFormula& f) {
  std::ostringstream os;
  os << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (auto lit : c) os << lit << ' ';
    os << "0\n";
  }
  return os.str();
}

bool clause_satisfied(const Clause& c, const Assignment& v) {
  for (auto lit : c) {
    if (v.satisfies_literal(lit)) return true;
  }
  return false;
}

bool eval_assignment(const CnfFormula& f, const Assignment& v) {
  if (v.size() != f.num_vars) {
    throw Error(ErrorKind::IncompleteAssignment, "assignment covers " + std::to_string(v.size()) +
                                                     " of " + std::to_string(f.num_vars) + " variables");
  }
  for (const auto& c : f.clauses) {
    if (!clause_satisfied(c, v)) return false;
  }
  return true;
}

std::optional<Assignment> brute_force_sat(const CnfFormula& f) {
  if (f.num_vars > kMaxBruteForceVars) {
    throw Error(ErrorKind::TooManyVariables, std::to_string(f.num_vars) + " variables exceeds " +
                                                 std::to_string(kMaxBruteForceVars));
  }
  const std::uint64_t total = std::uint64_t{1} << f.num_vars;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    auto v = Assignment::from_bits(f.num_vars, bits);
    if (eval_assignment(f, v)) return v;
  }
  return std::nullopt;
}

}  // namespace tripent
