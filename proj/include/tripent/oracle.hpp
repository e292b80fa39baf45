#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "tripent/tree.hpp"
#include "tripent/triples.hpp"

namespace tripent {

inline constexpr std::size_t kMaxEnumeratedLeaves = 8;

// Visits every rooted binary tree on `leaves` exactly once, up to child
// order; (2n−3)!! trees for n ≥ 2. The visitor returns false to stop early.
// Throws Error{UniverseTooLarge} above kMaxEnumeratedLeaves, Error{EmptyLeafSet}
// on no leaves.
void for_each_binary_tree(const LeafSet& leaves,
                          const std::function<bool(const RootedTree&)>& visit);

std::vector<RootedTree> enumerate_binary_trees(const LeafSet& leaves);

// Brute force: some binary tree on L(R) displays every member of R.
bool displayable_by_enumeration(const TripleSet& r);

// Intersection of r(T) over every binary tree T on L(R) displaying R.
// Throws Error{InconsistentInput} if no tree displays R.
TripleSet closure_oracle(const TripleSet& r);
TripleSet closure_oracle(const TripleSet& r, const LeafSet& universe);

}  // namespace tripent
