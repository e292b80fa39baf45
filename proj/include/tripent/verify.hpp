#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tripent/cnf.hpp"
#include "tripent/paths.hpp"
#include "tripent/reduction.hpp"
#include "tripent/subsets.hpp"

namespace tripent {

struct StageTimings {
  double reduce_ms = 0;
  double sat_ms = 0;
  double path_ms = 0;
  double entail_ms = 0;
};

struct ChainReport {
  std::string id;
  std::size_t triples = 0;
  bool sat = false;
  bool path_exists = false;
  SearchStatus path_status = SearchStatus::NotFound;
  std::optional<bool> entailed;  // none when |R| exceeds the entailment budget
  bool agreement = false;
  StageTimings timings;
};

struct ChainOptions {
  std::size_t entailment_budget = kDefaultMaxSubsetTriples;
  SearchLimits path_limits = {};
};

// Never throws on disagreement; a path search that runs out of budget is
// reported with agreement = false.
ChainReport check_chain(const CnfFormula& f, const ChainOptions& options = {},
                        std::string id = {});

struct LemmaCheck {
  std::string name;     // "witness" or "cyclic"
  std::string subject;  // assignment, plus the violated clause for cyclic checks
  bool passed = false;
  std::string detail;
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;
  std::size_t satisfying = 0;
  std::size_t cyclic_cases = 0;
  bool vacuous() const { return checks.empty(); }
  bool passed() const;
};

// Every satisfying assignment's witness subset must be consistent and entail
// the target; every (assignment, falsified clause) pair must give a cyclic
// path with inconsistent triples. Throws Error{TooManyVariables} above 16.
LemmaReport check_lemma_suite(const ReductionInstance& inst);

// Timings vary run to run; leave them out for byte-stable output.
std::string format_report(const ChainReport& r, bool with_timings = true);
std::string format_report(const LemmaReport& r);

}  // namespace tripent
