#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tripent/cnf.hpp"
#include "tripent/hypergraph.hpp"
#include "tripent/paths.hpp"
#include "tripent/triples.hpp"

namespace tripent {

// Fixed leaf naming for generated instances: x{i}_{j}, nx{i}_{j}, y{i}_{j},
// ny{i}_{j}, b{i}, bp{i}, c{j}, d{j}, alpha, beta, gamma.
namespace leaf_names {
Leaf x(int i, int j, bool negated = false);  // x_i^j or its barred twin
Leaf y(int i, int j, bool negated = false);
Leaf b(int i);
Leaf bp(int i);
Leaf c(int j);
Leaf d(int j);
Leaf alpha();
Leaf beta();
Leaf gamma();
}  // namespace leaf_names

// Drops repeated literals, keeping first appearances in order.
Clause dedup_clause(const Clause& clause);

// Both sides of x_i's gadget, 2·(2m+2) triples.
TripleSet variable_gadget(int i, int m);
// One side in path order: b_i b'_i | x_i^1, ..., ending at b_{i+1} b'_{i+1}.
std::vector<RootedTriple> variable_side(int i, int m, bool negative_side);

// Witness paths for every distinct literal plus c_j c_{j+1} | d_{j+1} when
// j < m. Throws Error{EmptyClause}.
TripleSet clause_gadget(int j, const Clause& clause, int m);
// The three witness-path triples for one literal appearance in C_j.
std::vector<RootedTriple> clause_witness(int j, Literal lit);
// The arc leaving c_j c_{j+1}: c_j c_{j+1} | d_{j+1}, or c_m c_{m+1} | γ.
RootedTriple clause_exit(int j, int m);

struct LeafCounts {
  std::size_t l1 = 0;     // x, nx, y, ny leaves
  std::size_t l2 = 0;     // b, bp
  std::size_t l3 = 0;     // c_1..c_m, d_1..d_m
  std::size_t l4 = 0;     // alpha, beta, gamma
  std::size_t extra = 0;  // c_{m+1}
  std::size_t total() const { return l1 + l2 + l3 + l4 + extra; }
};

struct ReductionInstance {
  CnfFormula formula;  // clauses deduplicated
  TripleSet triples;
  Hypergraph graph;
  HNode source;
  HNode dest;
  RootedTriple target;
  std::map<std::string, Leaf> leaf_registry;  // role ("x_1^2", "~y_1^2", "b'_3", ...) → leaf

  int n() const { return formula.num_vars; }
  int m() const { return static_cast<int>(formula.clauses.size()); }
  LeafCounts leaf_counts() const;
  // Any clause with a single literal (outside the 2–3 literal construction).
  bool uses_unit_clauses() const;
  // n(2m+2) + 4m + 4
  std::size_t witness_path_length() const;
};

// Throws Error{MalformedFormula} unless n ≥ 1, m ≥ 1 and every clause has 1–3
// in-range literals after deduplication.
ReductionInstance reduce(const CnfFormula& formula);

// Path that crosses x_i's gadget on its negative side iff v(x_i) is true and
// leaves clause C_j through the witness chosen for it.
HPath path_with_witnesses(const ReductionInstance& inst, const Assignment& v,
                          const std::vector<Literal>& witness_per_clause);

// Witnesses are the first true literal of each clause. Throws
// Error{UnsatisfyingAssignment}.
HPath path_of_assignment(const ReductionInstance& inst, const Assignment& v);

// Path whose clause `violated` (0-based) takes its first literal's witness
// even though v falsifies it; other clauses use their first true literal when
// they have one. Requires v to falsify that clause.
HPath forced_wrong_side_path(const ReductionInstance& inst, const Assignment& v,
                             std::size_t violated);

// Reads v(x_i) = true iff the path used x_i's negative side. Throws
// Error{NotAWitnessPath} for paths that are not acyclic source→dest paths
// crossing every variable gadget on exactly one side.
Assignment assignment_of_path(const ReductionInstance& inst, const HPath& path);

TripleSet witness_subset(const ReductionInstance& inst, const Assignment& v);

// Instance bundle: triple file, hypergraph file, key=value metadata.
std::string format_metadata(const ReductionInstance& inst);
// Rebuilds the instance from the metadata's formula and checks the triple
// and hypergraph files against it. Throws Error{ParseError} on mismatch.
ReductionInstance parse_instance_bundle(std::string_view triples_text,
                                        std::string_view hypergraph_text,
                                        std::string_view metadata_text);

}  // namespace tripent
