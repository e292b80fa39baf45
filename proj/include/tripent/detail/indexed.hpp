#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tripent/triples.hpp"

namespace tripent::detail {

struct IdTriple {
  std::uint32_t p;
  std::uint32_t q;
  std::uint32_t o;
};

// Leaves of a triple set renumbered 0..n-1 in name order, so that id order
// equals leaf order.
class TripleIndex {
 public:
  explicit TripleIndex(const TripleSet& r, const LeafSet& extra = {});

  std::size_t leaf_count() const noexcept { return leaves_.size(); }
  const std::vector<Leaf>& leaves() const noexcept { return leaves_; }
  const std::vector<RootedTriple>& triples() const noexcept { return triples_; }
  const std::vector<IdTriple>& ids() const noexcept { return ids_; }

  std::uint32_t id_of(const Leaf& leaf) const;  // throws Error{UnknownLeaf}
  IdTriple encode(const RootedTriple& t) const;

 private:
  std::vector<Leaf> leaves_;
  std::vector<RootedTriple> triples_;
  std::vector<IdTriple> ids_;
};

// BUILD's decision procedure without tree construction. `leaf_count` bounds
// the ids used by `triples`; every id in [0, leaf_count) is a leaf.
bool consistent_ids(std::span<const IdTriple> triples, std::size_t leaf_count);

// R ∪ {alt1} and R ∪ {alt2} both inconsistent, where t = pq|o gives the
// alternatives po|q and qo|p.
bool entails_ids(std::span<const IdTriple> triples, std::size_t leaf_count, IdTriple t);

}  // namespace tripent::detail
