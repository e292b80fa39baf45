#include "tripent/oracle.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "tripent/error.hpp"

namespace tripent {

namespace {

// Binary tree under construction: node ids < leaf count are leaves, the rest
// are internal nodes with exactly two children.
struct Scratch {
  std::vector<int> parent;
  std::vector<std::array<int, 2>> kids;
  int root = 0;
};

RootedTree materialize(const Scratch& s, const std::vector<Leaf>& labels, int id) {
  if (id < static_cast<int>(labels.size())) return RootedTree::leaf(labels[id]);
  std::vector<RootedTree> two;
  two.push_back(materialize(s, labels, s.kids[id][0]));
  two.push_back(materialize(s, labels, s.kids[id][1]));
  return RootedTree::join(std::move(two));
}

class Enumerator {
 public:
  Enumerator(std::vector<Leaf> labels, const std::function<bool(const RootedTree&)>& visit)
      : labels_(std::move(labels)), visit_(visit) {
    const int n = static_cast<int>(labels_.size());
    const int total = 2 * n - 1;
    s_.parent.assign(total, -1);
    s_.kids.assign(total, {-1, -1});
  }

  void run() {
    const int n = static_cast<int>(labels_.size());
    if (n == 1) {
      visit_(materialize(s_, labels_, 0));
      return;
    }
    // Start with the cherry (l0, l1) under internal node n.
    s_.kids[n] = {0, 1};
    s_.parent[0] = s_.parent[1] = n;
    s_.root = n;
    placed_nodes_ = {0, 1, n};
    insert(2);
  }

 private:
  // Inserts leaf k above each existing node in turn.
  bool insert(int k) {
    const int n = static_cast<int>(labels_.size());
    if (k == n) return visit_(materialize(s_, labels_, s_.root));
    const int fresh = n + k - 1;  // next internal node id
    const auto existing = placed_nodes_;
    for (int x : existing) {
      const int px = s_.parent[x];
      s_.kids[fresh] = {x, k};
      s_.parent[fresh] = px;
      s_.parent[x] = fresh;
      s_.parent[k] = fresh;
      if (px < 0) {
        s_.root = fresh;
      } else {
        auto& pk = s_.kids[px];
        (pk[0] == x ? pk[0] : pk[1]) = fresh;
      }
      placed_nodes_.push_back(k);
      placed_nodes_.push_back(fresh);

      const bool keep_going = insert(k + 1);

      placed_nodes_.pop_back();
      placed_nodes_.pop_back();
      if (px < 0) {
        s_.root = x;
      } else {
        auto& pk = s_.kids[px];
        (pk[0] == fresh ? pk[0] : pk[1]) = x;
      }
      s_.parent[x] = px;
      s_.parent[k] = -1;
      s_.parent[fresh] = -1;
      if (!keep_going) return false;
    }
    return true;
  }

  std::vector<Leaf> labels_;
  const std::function<bool(const RootedTree&)>& visit_;
  Scratch s_;
  std::vector<int> placed_nodes_;
};

}  // namespace

void for_each_binary_tree(const LeafSet& leaves,
                          const std::function<bool(const RootedTree&)>& visit) {
  if (leaves.empty()) throw Error(ErrorKind::EmptyLeafSet, "no leaves to enumerate trees on");
  if (leaves.size() > kMaxEnumeratedLeaves) {
    throw Error(ErrorKind::UniverseTooLarge,
                std::to_string(leaves.size()) + " leaves exceeds the enumeration limit of " +
                    std::to_string(kMaxEnumeratedLeaves));
  }
  Enumerator(std::vector<Leaf>(leaves.begin(), leaves.end()), visit).run();
}

std::vector<RootedTree> enumerate_binary_trees(const LeafSet& leaves) {
  std::vector<RootedTree> out;
  for_each_binary_tree(leaves, [&](const RootedTree& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

namespace {

bool displays_all(const RootedTree& tree, const TripleSet& r) {
  return std::all_of(r.begin(), r.end(), [&](const RootedTriple& t) { return displays(tree, t); });
}

}  // namespace

bool displayable_by_enumeration(const TripleSet& r) {
  if (r.empty()) return true;
  bool found = false;
  for_each_binary_tree(r.leaves(), [&](const RootedTree& tree) {
    found = displays_all(tree, r);
    return !found;
  });
  return found;
}

TripleSet closure_oracle(const TripleSet& r) { return closure_oracle(r, r.leaves()); }

TripleSet closure_oracle(const TripleSet& r, const LeafSet& universe) {
  LeafSet leaves = universe;
  const auto own = r.leaves();
  leaves.insert(own.begin(), own.end());
  if (leaves.empty()) return {};
  if (leaves.size() > kMaxEnumeratedLeaves) {
    throw Error(ErrorKind::UniverseTooLarge, "closure oracle limited to 8 leaves");
  }

  std::optional<TripleSet> common;
  for_each_binary_tree(leaves, [&](const RootedTree& tree) {
    if (!displays_all(tree, r)) return true;
    auto shown = displayed_triples(tree);
    if (!common) {
      common = std::move(shown);
    } else {
      TripleSet keep;
      for (const auto& t : *common) {
        if (shown.contains(t)) keep.insert(t);
      }
      common = std::move(keep);
    }
    return true;
  });
  if (!common) throw Error(ErrorKind::InconsistentInput, "no binary tree displays the triple set");
  return *common;
}

}  // namespace tripent
