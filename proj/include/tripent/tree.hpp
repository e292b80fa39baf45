#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tripent/triples.hpp"

namespace tripent {

// Rooted tree with uniquely labeled leaves. Internal nodes have an ordered
// list of at least two children; BUILD may produce multifurcations.
class RootedTree {
 public:
  using NodeId = std::size_t;
  static constexpr NodeId npos = static_cast<NodeId>(-1);

  struct Node {
    std::optional<Leaf> label;  // set iff the node is a leaf
    std::vector<NodeId> children;
    NodeId parent = npos;
  };

  static RootedTree leaf(Leaf label);
  // Joins subtrees under a fresh root, keeping the given order. Requires at
  // least two subtrees with disjoint leaf sets.
  static RootedTree join(std::vector<RootedTree> subtrees);

  NodeId root() const noexcept { return root_; }
  const Node& node(NodeId id) const { return nodes_.at(id); }
  std::size_t node_count() const noexcept { return nodes_.size(); }

  const LeafSet& leaves() const noexcept { return leaf_set_; }
  bool is_binary() const;

  // Node holding the given label, or npos.
  NodeId find(const Leaf& label) const;
  NodeId lca(NodeId a, NodeId b) const;
  std::size_t depth(NodeId id) const;
  bool is_proper_descendant(NodeId below, NodeId above) const;

  // Newick with children in stored order, e.g. "((a,b),c);".
  std::string to_newick() const;

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.to_newick() == b.to_newick();
  }

 private:
  NodeId append(const RootedTree& sub, NodeId parent);

  std::vector<Node> nodes_;
  NodeId root_ = npos;
  LeafSet leaf_set_;
};

// Parses unweighted Newick ("((a,b),c);"). Branch lengths and internal labels
// are not supported. Throws Error{ParseError}.
RootedTree parse_newick(std::string_view text);

// True iff t's LHS pair coalesces strictly below its join with the RHS leaf.
// Throws Error{UnknownLeaf} if some leaf of t is not in the tree.
bool displays(const RootedTree& tree, const RootedTriple& t);

// r(T): every triple displayed by the tree.
TripleSet displayed_triples(const RootedTree& tree);

}  // namespace tripent
