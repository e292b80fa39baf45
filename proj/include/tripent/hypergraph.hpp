#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tripent/triples.hpp"

namespace tripent {

// Hypergraph node: either an unordered leaf pair (serialized "p,q", sorted)
// or a free-standing name with no comma.
class HNode {
 public:
  static HNode pair(const Leaf& a, const Leaf& b);
  static HNode named(std::string name);
  static HNode parse(std::string_view text);

  bool is_pair() const noexcept { return is_pair_; }
  // Pair components, p < q. Only valid for pair nodes.
  std::pair<Leaf, Leaf> leaves() const;
  const std::string& str() const noexcept { return text_; }

  friend auto operator<=>(const HNode& a, const HNode& b) { return a.text_ <=> b.text_; }
  friend bool operator==(const HNode& a, const HNode& b) { return a.text_ == b.text_; }

 private:
  HNode(std::string text, bool is_pair) : text_(std::move(text)), is_pair_(is_pair) {}

  std::string text_;
  bool is_pair_ = false;
};

std::ostream& operator<<(std::ostream& os, const HNode& n);

// 1-2-hyperarc tail → {head_a, head_b}; the three nodes are distinct and the
// heads are stored sorted.
class Hyperarc {
 public:
  Hyperarc(HNode tail, HNode head1, HNode head2);

  const HNode& tail() const noexcept { return tail_; }
  const HNode& head_a() const noexcept { return heads_.first; }
  const HNode& head_b() const noexcept { return heads_.second; }
  bool has_head(const HNode& n) const { return heads_.first == n || heads_.second == n; }

  // Ordering is lexicographic on (tail, head_a, head_b).
  friend auto operator<=>(const Hyperarc&, const Hyperarc&) = default;
  friend bool operator==(const Hyperarc&, const Hyperarc&) = default;

 private:
  HNode tail_;
  std::pair<HNode, HNode> heads_;
};

std::string to_string(const Hyperarc& a);  // "tail -> head_a head_b"
std::ostream& operator<<(std::ostream& os, const Hyperarc& a);

class Hypergraph {
 public:
  Hypergraph() = default;

  void add_node(const HNode& n) { nodes_.insert(n); }
  // Adds the arc and its endpoints.
  void add_arc(const Hyperarc& a);

  const std::set<HNode>& nodes() const noexcept { return nodes_; }
  const std::set<Hyperarc>& arcs() const noexcept { return arcs_; }
  bool has_node(const HNode& n) const { return nodes_.count(n) > 0; }
  bool has_arc(const Hyperarc& a) const { return arcs_.count(a) > 0; }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::set<HNode> nodes_;
  std::set<Hyperarc> arcs_;
};

// arc(pq|o) = pq → {po, qo}.
Hyperarc arc_of_triple(const RootedTriple& t);
// (v ⊕ v') | (v ∩ v'); throws Error{MalformedArc} unless the heads share
// exactly one leaf and the tail is their symmetric difference.
RootedTriple triple_of_arc(const Hyperarc& a);

Hypergraph hypergraph_of_triples(const TripleSet& r);
TripleSet triples_of_arcs(const std::vector<Hyperarc>& arcs);

// Text format: one arc per line `tail -> head1 head2`; a line holding a single
// node declares it (for nodes without arcs); `#` starts a comment line.
Hypergraph parse_hypergraph(std::string_view text);
std::string format_hypergraph(const Hypergraph& h);

// Graphviz export: nodes as records, every hyperarc as a junction point with
// one incoming and two outgoing edges. Arcs in `highlight` are drawn bold.
std::string to_dot(const Hypergraph& h, const std::vector<Hyperarc>& highlight = {});

}  // namespace tripent
