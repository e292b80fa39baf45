#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "tripent/triples.hpp"

namespace tripent {

inline constexpr std::size_t kDefaultMaxSubsetTriples = 24;

struct SubsetLimits {
  std::size_t max_triples = kDefaultMaxSubsetTriples;
};

// Visits every maximal consistent subset of R exactly once. The search
// includes triples greedily, never extends an inconsistent partial set, and
// abandons an exclusion as soon as the remaining triples can no longer make
// the excluded one inconsistent. Visitor returns false to stop.
// Throws Error{SetTooLarge} when |R| exceeds the limit.
void for_each_maximal_consistent_subset(const TripleSet& r,
                                        const std::function<bool(const TripleSet&)>& visit,
                                        SubsetLimits limits = {});

std::vector<TripleSet> maximal_consistent_subsets(const TripleSet& r, SubsetLimits limits = {});

struct EntailmentAnswer {
  bool entailed = false;
  std::optional<TripleSet> witness;  // a consistent subset entailing t
};

// R ⊢ t for arbitrary (possibly inconsistent) R.
EntailmentAnswer entails_inconsistent(const TripleSet& r, const RootedTriple& t,
                                      SubsetLimits limits = {});

// {t : R ⊢ t} over candidates on L(R).
TripleSet closure_inconsistent(const TripleSet& r, SubsetLimits limits = {});

}  // namespace tripent
