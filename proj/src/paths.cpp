#include "tripent/paths.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "tripent/error.hpp"

namespace tripent {

namespace {

// Nodes and arcs renumbered in their set order; out-arcs per node ascend, so
// arc id order is lexicographic arc order.
struct IndexedHypergraph {
  std::vector<HNode> nodes;
  std::vector<Hyperarc> arcs;
  std::vector<std::uint32_t> tail;
  std::vector<std::array<std::uint32_t, 2>> heads;
  std::vector<std::vector<std::uint32_t>> out;

  explicit IndexedHypergraph(const Hypergraph& h)
      : nodes(h.nodes().begin(), h.nodes().end()), arcs(h.arcs().begin(), h.arcs().end()) {
    out.resize(nodes.size());
    for (std::uint32_t i = 0; i < arcs.size(); ++i) {
      tail.push_back(id(arcs[i].tail()));
      heads.push_back({id(arcs[i].head_a()), id(arcs[i].head_b())});
      out[tail.back()].push_back(i);
    }
  }

  std::uint32_t id(const HNode& n) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), n);
    if (it == nodes.end() || *it != n) {
      throw Error(ErrorKind::UnknownNode, "node '" + n.str() + "' is not in the hypergraph");
    }
    return static_cast<std::uint32_t>(it - nodes.begin());
  }
};

class AcyclicSearch {
 public:
  AcyclicSearch(const IndexedHypergraph& g, std::uint32_t from, std::uint32_t to,
                SearchLimits limits, bool minimize)
      : g_(g), from_(from), to_(to), limits_(limits), minimize_(minimize),
        is_tail_(g.nodes.size(), 0), used_(g.arcs.size(), 0) {}

  PathSearch run() {
    PathSearch result;
    if (from_ == to_) {
      result.status = SearchStatus::Found;
      result.path = HPath{g_.nodes[from_], g_.nodes[to_], {}};
      return result;
    }
    search();
    result.expansions = expansions_;
    if (best_) {
      result.status = SearchStatus::Found;
      HPath p{g_.nodes[from_], g_.nodes[to_], {}};
      for (auto a : *best_) p.arcs.push_back(g_.arcs[a]);
      result.path = std::move(p);
      // A budget hit during minimization leaves the optimum unproven.
      if (exhausted_ && minimize_) result.status = SearchStatus::Exhausted;
    } else {
      result.status = exhausted_ ? SearchStatus::Exhausted : SearchStatus::NotFound;
    }
    return result;
  }

 private:
  // Explicit stack: amplified graphs carry paths of up to 2^18 arcs.
  struct Frame {
    std::vector<std::uint32_t> candidates;
    std::size_t next = 0;
    bool pushed = false;  // this frame's arc is on path_
  };

  void search() {
    std::vector<Frame> stack;
    stack.push_back({g_.out[from_]});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.pushed) {
        const auto a = path_.back();
        path_.pop_back();
        used_[a] = 0;
        is_tail_[g_.tail[a]] = 0;
        f.pushed = false;
      }
      if (done_) return;
      if (f.next == f.candidates.size()) {
        stack.pop_back();
        continue;
      }
      const auto a = f.candidates[f.next++];
      if (used_[a]) continue;
      const auto t = g_.tail[a];
      const auto [h1, h2] = g_.heads[a];
      // The new arc's tail must not repeat, and its heads must avoid every
      // earlier tail (and its own tail, which the arc invariant guarantees).
      if (is_tail_[t] || is_tail_[h1] || is_tail_[h2]) continue;
      if (best_ && path_.size() + 1 >= best_->size()) {  // candidates only grow
        f.next = f.candidates.size();
        continue;
      }
      if (++expansions_ > limits_.max_expansions) {
        exhausted_ = true;
        return;
      }
      path_.push_back(a);
      used_[a] = 1;
      is_tail_[t] = 1;
      f.pushed = true;
      if (h1 == to_ || h2 == to_) {
        best_ = path_;
        if (!minimize_) done_ = true;
      } else {
        std::vector<std::uint32_t> next;
        next.reserve(g_.out[h1].size() + g_.out[h2].size());
        std::merge(g_.out[h1].begin(), g_.out[h1].end(), g_.out[h2].begin(), g_.out[h2].end(),
                   std::back_inserter(next));
        stack.push_back({std::move(next)});
      }
    }
  }

  const IndexedHypergraph& g_;
  std::uint32_t from_;
  std::uint32_t to_;
  SearchLimits limits_;
  bool minimize_;
  std::vector<char> is_tail_;
  std::vector<char> used_;
  std::vector<std::uint32_t> path_;
  std::optional<std::vector<std::uint32_t>> best_;
  std::uint64_t expansions_ = 0;
  bool exhausted_ = false;
  bool done_ = false;
};

}  // namespace

std::set<HNode> b_connected_set(const Hypergraph& h, const HNode& u) {
  if (!h.has_node(u)) throw Error(ErrorKind::UnknownNode, "node '" + u.str() + "' is not in the hypergraph");
  std::map<HNode, std::vector<const Hyperarc*>> out;
  for (const auto& a : h.arcs()) out[a.tail()].push_back(&a);
  std::set<HNode> reached{u};
  std::vector<HNode> frontier{u};
  while (!frontier.empty()) {
    const HNode n = frontier.back();
    frontier.pop_back();
    auto it = out.find(n);
    if (it == out.end()) continue;
    for (const auto* a : it->second) {
      for (const auto* head : {&a->head_a(), &a->head_b()}) {
        if (reached.insert(*head).second) frontier.push_back(*head);
      }
    }
  }
  return reached;
}

std::string_view to_string(PathKind kind) {
  switch (kind) {
    case PathKind::NotAPath: return "NotAPath";
    case PathKind::CyclicPath: return "CyclicPath";
    case PathKind::AcyclicPath: return "AcyclicPath";
  }
  return "?";
}

PathKind validate_path(const Hypergraph& h, const std::vector<Hyperarc>& seq) {
  for (const auto& a : seq) {
    if (!h.has_arc(a)) throw Error(ErrorKind::ArcNotInGraph, "arc " + to_string(a) + " is not in the hypergraph");
  }
  std::set<Hyperarc> seen;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (!seen.insert(seq[k]).second) return PathKind::NotAPath;
    if (k + 1 < seq.size() && !seq[k].has_head(seq[k + 1].tail())) return PathKind::NotAPath;
  }
  for (std::size_t k = 0; k < seq.size(); ++k) {
    for (std::size_t earlier = 0; earlier < k; ++earlier) {
      if (seq[k].has_head(seq[earlier].tail())) return PathKind::CyclicPath;
    }
  }
  return PathKind::AcyclicPath;
}

PathSearch find_acyclic_path(const Hypergraph& h, const HNode& from, const HNode& to,
                             SearchLimits limits) {
  IndexedHypergraph g(h);
  return AcyclicSearch(g, g.id(from), g.id(to), limits, false).run();
}

PathSearch min_acyclic_path(const Hypergraph& h, const HNode& from, const HNode& to,
                            SearchLimits limits) {
  IndexedHypergraph g(h);
  return AcyclicSearch(g, g.id(from), g.id(to), limits, true).run();
}

bool is_cyclic_arcset(const std::set<Hyperarc>& arcs) {
  // A closed chain of distinct arcs exists iff the tail→head digraph has a
  // directed cycle: two arcs sharing a tail never both sit on a node-simple cycle.
  Hypergraph h;
  for (const auto& a : arcs) h.add_arc(a);
  IndexedHypergraph g(h);
  enum : char { White, Grey, Black };
  std::vector<char> colour(g.nodes.size(), White);
  for (std::uint32_t s = 0; s < g.nodes.size(); ++s) {
    if (colour[s] != White) continue;
    // Iterative DFS; each frame holds a node and its next out-edge slot.
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{s, 0}};
    colour[s] = Grey;
    while (!stack.empty()) {
      auto& [n, slot] = stack.back();
      const auto& outs = g.out[n];
      if (slot == 2 * outs.size()) {
        colour[n] = Black;
        stack.pop_back();
        continue;
      }
      const auto next = g.heads[outs[slot / 2]][slot % 2];
      ++slot;
      if (colour[next] == Grey) return true;
      if (colour[next] == White) {
        colour[next] = Grey;
        stack.emplace_back(next, 0);
      }
    }
  }
  return false;
}

}  // namespace tripent
