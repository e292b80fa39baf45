#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tripent {

// A leaf label. Names are non-empty and restricted to [A-Za-z0-9_+] so they
// survive every text format used here (triples, Newick, hypergraph pairs).
class Leaf {
 public:
  explicit Leaf(std::string name);

  const std::string& name() const noexcept { return name_; }

  friend auto operator<=>(const Leaf&, const Leaf&) = default;
  friend bool operator==(const Leaf&, const Leaf&) = default;

 private:
  std::string name_;
};

bool is_valid_leaf_name(std::string_view name);

using LeafSet = std::set<Leaf>;

// The rooted triple pq|o, stored canonically with p < q.
class RootedTriple {
 public:
  const Leaf& p() const noexcept { return p_; }
  const Leaf& q() const noexcept { return q_; }
  const Leaf& o() const noexcept { return o_; }

  bool mentions(const Leaf& leaf) const { return p_ == leaf || q_ == leaf || o_ == leaf; }

  friend auto operator<=>(const RootedTriple&, const RootedTriple&) = default;
  friend bool operator==(const RootedTriple&, const RootedTriple&) = default;

 private:
  friend RootedTriple make_triple(Leaf p, Leaf q, Leaf o);
  RootedTriple(Leaf p, Leaf q, Leaf o) : p_(std::move(p)), q_(std::move(q)), o_(std::move(o)) {}

  Leaf p_;
  Leaf q_;
  Leaf o_;
};

// Throws Error{DuplicateLeaf} unless p, q, o are pairwise distinct.
RootedTriple make_triple(Leaf p, Leaf q, Leaf o);
RootedTriple make_triple(std::string_view p, std::string_view q, std::string_view o);

std::string to_string(const RootedTriple& t);  // "p q | o"
std::ostream& operator<<(std::ostream& os, const RootedTriple& t);

class TripleSet {
 public:
  using const_iterator = std::set<RootedTriple>::const_iterator;

  TripleSet() = default;
  TripleSet(std::initializer_list<RootedTriple> triples) : triples_(triples) {}
  template <typename It>
  TripleSet(It first, It last) : triples_(first, last) {}

  bool insert(const RootedTriple& t) { return triples_.insert(t).second; }
  bool erase(const RootedTriple& t) { return triples_.erase(t) > 0; }
  bool contains(const RootedTriple& t) const { return triples_.count(t) > 0; }

  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }
  const_iterator begin() const noexcept { return triples_.begin(); }
  const_iterator end() const noexcept { return triples_.end(); }

  // L(R): every leaf mentioned by some member.
  LeafSet leaves() const;

  bool is_subset_of(const TripleSet& other) const;
  TripleSet united(const TripleSet& other) const;
  TripleSet with(const RootedTriple& t) const;

  friend bool operator==(const TripleSet&, const TripleSet&) = default;

 private:
  std::set<RootedTriple> triples_;
};

std::ostream& operator<<(std::ostream& os, const TripleSet& r);

// Triple text format: one `p q | o` per line, `#` comment lines, blank lines
// ignored. Spaces around the tokens are optional.
RootedTriple parse_triple(std::string_view line);
TripleSet parse_triples(std::string_view text);
std::string format_triples(const TripleSet& r);

// All C(|L|,2)·(|L|−2) triples over a leaf set, in canonical order.
std::vector<RootedTriple> candidate_triples(const LeafSet& leaves);

}  // namespace tripent
