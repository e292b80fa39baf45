#include "tripent/detail/indexed.hpp"

#include <algorithm>
#include <numeric>

#include "tripent/error.hpp"

namespace tripent::detail {

TripleIndex::TripleIndex(const TripleSet& r, const LeafSet& extra) {
  LeafSet all = r.leaves();
  all.insert(extra.begin(), extra.end());
  leaves_.assign(all.begin(), all.end());
  triples_.assign(r.begin(), r.end());
  ids_.reserve(triples_.size());
  for (const auto& t : triples_) ids_.push_back(encode(t));
}

std::uint32_t TripleIndex::id_of(const Leaf& leaf) const {
  auto it = std::lower_bound(leaves_.begin(), leaves_.end(), leaf);
  if (it == leaves_.end() || *it != leaf) {
    throw Error(ErrorKind::UnknownLeaf, "leaf '" + leaf.name() + "' not indexed");
  }
  return static_cast<std::uint32_t>(it - leaves_.begin());
}

IdTriple TripleIndex::encode(const RootedTriple& t) const {
  return IdTriple{id_of(t.p()), id_of(t.q()), id_of(t.o())};
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;

  void reset(std::size_t n) {
    parent.resize(n);
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

}  // namespace

bool consistent_ids(std::span<const IdTriple> triples, std::size_t leaf_count) {
  if (triples.empty()) return true;

  struct Task {
    std::vector<std::uint32_t> leaves;
    std::vector<std::uint32_t> tris;
  };

  std::vector<std::uint32_t> local(leaf_count, 0);
  std::vector<char> mentioned(leaf_count, 0);
  Task first;
  for (const auto& t : triples) mentioned[t.p] = mentioned[t.q] = mentioned[t.o] = 1;
  for (std::uint32_t i = 0; i < leaf_count; ++i) {
    if (mentioned[i]) first.leaves.push_back(i);
  }
  first.tris.resize(triples.size());
  std::iota(first.tris.begin(), first.tris.end(), 0u);

  std::vector<Task> stack;
  stack.push_back(std::move(first));
  UnionFind uf;
  std::vector<std::uint32_t> root_slot;

  while (!stack.empty()) {
    Task task = std::move(stack.back());
    stack.pop_back();
    const std::size_t n = task.leaves.size();
    for (std::uint32_t i = 0; i < n; ++i) local[task.leaves[i]] = i;
    uf.reset(n);
    for (auto ti : task.tris) uf.unite(local[triples[ti].p], local[triples[ti].q]);

    root_slot.assign(n, UINT32_MAX);
    std::uint32_t comps = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      const auto r = uf.find(i);
      if (root_slot[r] == UINT32_MAX) root_slot[r] = comps++;
    }
    if (comps == 1) return false;  // n >= 3 here: connected multi-leaf Ahograph

    std::vector<Task> parts(comps);
    for (std::uint32_t i = 0; i < n; ++i) {
      parts[root_slot[uf.find(i)]].leaves.push_back(task.leaves[i]);
    }
    for (auto ti : task.tris) {
      const auto& t = triples[ti];
      const auto c = uf.find(local[t.p]);
      if (c == uf.find(local[t.o])) parts[root_slot[c]].tris.push_back(ti);
    }
    for (auto& part : parts) {
      if (part.leaves.size() >= 3 && !part.tris.empty()) stack.push_back(std::move(part));
    }
  }
  return true;
}

bool entails_ids(std::span<const IdTriple> triples, std::size_t leaf_count, IdTriple t) {
  std::vector<IdTriple> probe(triples.begin(), triples.end());
  probe.push_back(IdTriple{t.p, t.o, t.q});
  if (consistent_ids(probe, leaf_count)) return false;
  probe.back() = IdTriple{t.q, t.o, t.p};
  return !consistent_ids(probe, leaf_count);
}

}  // namespace tripent::detail
