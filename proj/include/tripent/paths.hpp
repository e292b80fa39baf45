#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "tripent/hypergraph.hpp"

namespace tripent {

// Sequence of distinct arcs a_1..a_l with t(a_1) = source, dest ∈ h(a_l) and
// t(a_{k+1}) ∈ h(a_k). The empty path has source == dest.
struct HPath {
  HNode source;
  HNode dest;
  std::vector<Hyperarc> arcs;

  std::size_t length() const noexcept { return arcs.size(); }
  friend bool operator==(const HPath&, const HPath&) = default;
};

// Least fixpoint containing u and both heads of every arc whose tail it
// contains. Throws Error{UnknownNode}.
std::set<HNode> b_connected_set(const Hypergraph& h, const HNode& u);

enum class PathKind { NotAPath, CyclicPath, AcyclicPath };

std::string_view to_string(PathKind kind);

// Classifies an arc sequence: chaining and distinctness first, then back-arcs
// (a head equal to the tail of an earlier arc, including the first arc).
// Throws Error{ArcNotInGraph}.
PathKind validate_path(const Hypergraph& h, const std::vector<Hyperarc>& seq);

inline constexpr std::uint64_t kDefaultExpansionBudget = 10'000'000;

struct SearchLimits {
  std::uint64_t max_expansions = kDefaultExpansionBudget;
};

enum class SearchStatus { Found, NotFound, Exhausted };

struct PathSearch {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<HPath> path;
  std::uint64_t expansions = 0;
};

// Depth-first search over arc sequences in lexicographic arc order, never
// extending a sequence with an arc that would be a back-arc. Throws
// Error{UnknownNode}.
PathSearch find_acyclic_path(const Hypergraph& h, const HNode& from, const HNode& to,
                             SearchLimits limits = {});

// Shortest acyclic path by arc count; ties go to the lexicographically
// smallest arc sequence. NotFound is the infeasible (infinite-cost) outcome.
PathSearch min_acyclic_path(const Hypergraph& h, const HNode& from, const HNode& to,
                            SearchLimits limits = {});

// True iff some simple path inside the set closes on itself
// (h(a_l) ∋ t(a_1)).
bool is_cyclic_arcset(const std::set<Hyperarc>& arcs);

}  // namespace tripent
