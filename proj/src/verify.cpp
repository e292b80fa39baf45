#include "tripent/verify.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "tripent/consistency.hpp"
#include "tripent/error.hpp"

namespace tripent {

namespace {

constexpr int kMaxLemmaVars = 16;

template <typename F>
double timed_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NotFound: return "not_found";
    case SearchStatus::Exhausted: return "exhausted";
  }
  return "?";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

ChainReport check_chain(const CnfFormula& f, const ChainOptions& options, std::string id) {
  ChainReport r;
  r.id = id.empty() ? to_string(f) : std::move(id);

  std::optional<ReductionInstance> inst;
  r.timings.reduce_ms = timed_ms([&] { inst.emplace(reduce(f)); });
  r.triples = inst->triples.size();
  r.timings.sat_ms = timed_ms([&] { r.sat = brute_force_sat(inst->formula).has_value(); });
  r.timings.path_ms = timed_ms([&] {
    const auto search = find_acyclic_path(inst->graph, inst->source, inst->dest, options.path_limits);
    r.path_status = search.status;
    r.path_exists = search.status == SearchStatus::Found;
  });
  if (r.triples <= options.entailment_budget) {
    r.timings.entail_ms = timed_ms([&] {
      r.entailed = entails_inconsistent(inst->triples, inst->target,
                                        SubsetLimits{options.entailment_budget})
                       .entailed;
    });
  }
  r.agreement = r.path_status != SearchStatus::Exhausted && r.sat == r.path_exists &&
                (!r.entailed || *r.entailed == r.sat);
  return r;
}

bool LemmaReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

LemmaReport check_lemma_suite(const ReductionInstance& inst) {
  const auto& f = inst.formula;
  if (f.num_vars > kMaxLemmaVars) {
    throw Error(ErrorKind::TooManyVariables,
                std::to_string(f.num_vars) + " variables exceeds " + std::to_string(kMaxLemmaVars));
  }
  LemmaReport report;
  const std::uint64_t total = std::uint64_t{1} << f.num_vars;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const auto v = Assignment::from_bits(f.num_vars, bits);
    if (eval_assignment(f, v)) {
      ++report.satisfying;
      LemmaCheck c{"witness", to_string(v), false, {}};
      const auto path = path_of_assignment(inst, v);
      const auto sub = triples_of_arcs(path.arcs);
      const bool consistent = is_consistent(sub);
      const bool entails = consistent && entails_consistent(sub, inst.target);
      c.passed = consistent && entails;
      c.detail = std::string("consistent=") + yes_no(consistent) + " entails=" + yes_no(entails);
      report.checks.push_back(std::move(c));
      continue;
    }
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
      if (clause_satisfied(f.clauses[j], v)) continue;
      ++report.cyclic_cases;
      LemmaCheck c{"cyclic", to_string(v) + " clause=" + std::to_string(j + 1), false, {}};
      const auto path = forced_wrong_side_path(inst, v, j);
      const auto kind = validate_path(inst.graph, path.arcs);
      const bool consistent = is_consistent(triples_of_arcs(path.arcs));
      c.passed = kind == PathKind::CyclicPath && !consistent;
      c.detail = std::string("kind=") + std::string(to_string(kind)) +
                 " consistent=" + yes_no(consistent);
      report.checks.push_back(std::move(c));
    }
  }
  return report;
}

std::string format_report(const ChainReport& r, bool with_timings) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << "id=" << r.id << '\n';
  os << "triples=" << r.triples << '\n';
  os << "sat=" << yes_no(r.sat) << '\n';
  os << "path_exists=" << yes_no(r.path_exists) << '\n';
  os << "path_search=" << status_name(r.path_status) << '\n';
  os << "entailed=" << (r.entailed ? yes_no(*r.entailed) : "none") << '\n';
  os << "agreement=" << yes_no(r.agreement) << '\n';
  if (!with_timings) return os.str();
  os << "reduce_ms=" << r.timings.reduce_ms << '\n';
  os << "sat_ms=" << r.timings.sat_ms << '\n';
  os << "path_ms=" << r.timings.path_ms << '\n';
  os << "entail_ms=" << r.timings.entail_ms << '\n';
  return os.str();
}

std::string format_report(const LemmaReport& r) {
  std::ostringstream os;
  os << "satisfying=" << r.satisfying << '\n';
  os << "cyclic_cases=" << r.cyclic_cases << '\n';
  os << "checks=" << r.checks.size() << '\n';
  os << "vacuous=" << yes_no(r.vacuous()) << '\n';
  os << "passed=" << yes_no(r.passed()) << '\n';
  for (const auto& c : r.checks) {
    os << '\n';
    os << "check=" << c.name << '\n';
    os << "subject=" << c.subject << '\n';
    os << "result=" << (c.passed ? "pass" : "fail") << '\n';
    os << "detail=" << c.detail << '\n';
  }
  return os.str();
}

}  // namespace tripent
