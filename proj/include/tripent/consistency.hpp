#pragma once

#include <variant>
#include <vector>

#include "tripent/tree.hpp"
#include "tripent/triples.hpp"

namespace tripent {

// Edge-labeled multigraph [R, L]: one A-edge {p,q} labeled o for every
// pq|o in R with p, q, o all in L.
struct Ahograph {
  struct Edge {
    Leaf a;
    Leaf b;
    Leaf label;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  LeafSet nodes;
  std::vector<Edge> edges;

  // Connected components, each sorted, ordered by smallest leaf.
  std::vector<LeafSet> components() const;
};

Ahograph ahograph(const TripleSet& r, const LeafSet& leaves);

struct Consistent {
  RootedTree tree;
};
struct Inconsistent {
  LeafSet witness;  // leaf set whose Ahograph was connected
};
using ConsistencyResult = std::variant<Consistent, Inconsistent>;

// Aho et al.'s BUILD. Components of each Ahograph become the root's children,
// ordered by their smallest leaf name. Throws Error{EmptyLeafSet}.
ConsistencyResult build(const TripleSet& r, const LeafSet& leaves);

bool is_consistent(const TripleSet& r);

// R ⊢ pq|o for consistent R: both alternatives po|q and qo|p are
// incompatible with R. Throws Error{InconsistentInput}.
bool entails_consistent(const TripleSet& r, const RootedTriple& t);

// Every candidate triple over L(R) entailed by R. Throws Error{InconsistentInput}.
TripleSet closure_consistent(const TripleSet& r);

// Conclusions of the three two-premise inference rules applied to (t1, t2)
// in either order.
TripleSet dyadic_apply(const RootedTriple& t1, const RootedTriple& t2);

}  // namespace tripent
