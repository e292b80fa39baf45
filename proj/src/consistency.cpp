#include "tripent/consistency.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "tripent/detail/indexed.hpp"
#include "tripent/error.hpp"

namespace tripent {

namespace {

struct LeafUnionFind {
  std::map<Leaf, Leaf> parent;

  explicit LeafUnionFind(const LeafSet& leaves) {
    for (const auto& l : leaves) parent.emplace(l, l);
  }
  Leaf find(const Leaf& x) {
    Leaf cur = x;
    while (parent.at(cur) != cur) cur = parent.at(cur);
    return cur;
  }
  void unite(const Leaf& a, const Leaf& b) {
    auto ra = find(a);
    auto rb = find(b);
    if (ra != rb) parent.at(std::max(ra, rb)) = std::min(ra, rb);
  }
};

}  // namespace

std::vector<LeafSet> Ahograph::components() const {
  LeafUnionFind uf(nodes);
  for (const auto& e : edges) uf.unite(e.a, e.b);
  std::map<Leaf, LeafSet> by_root;
  for (const auto& l : nodes) by_root[uf.find(l)].insert(l);
  std::vector<LeafSet> out;
  for (auto& [root, comp] : by_root) out.push_back(std::move(comp));
  std::sort(out.begin(), out.end(),
            [](const LeafSet& a, const LeafSet& b) { return *a.begin() < *b.begin(); });
  return out;
}

Ahograph ahograph(const TripleSet& r, const LeafSet& leaves) {
  Ahograph g;
  g.nodes = leaves;
  for (const auto& t : r) {
    if (leaves.count(t.p()) && leaves.count(t.q()) && leaves.count(t.o())) {
      g.edges.push_back({t.p(), t.q(), t.o()});
    }
  }
  return g;
}

namespace {

ConsistencyResult build_rec(const TripleSet& r, const LeafSet& leaves) {
  if (leaves.size() == 1) return Consistent{RootedTree::leaf(*leaves.begin())};

  TripleSet inside;
  for (const auto& t : r) {
    if (leaves.count(t.p()) && leaves.count(t.q()) && leaves.count(t.o())) inside.insert(t);
  }
  const auto comps = ahograph(inside, leaves).components();
  if (comps.size() == 1) return Inconsistent{leaves};

  std::vector<RootedTree> children;
  children.reserve(comps.size());
  for (const auto& comp : comps) {
    auto sub = build_rec(inside, comp);
    if (auto* bad = std::get_if<Inconsistent>(&sub)) return std::move(*bad);
    children.push_back(std::move(std::get<Consistent>(sub).tree));
  }
  return Consistent{RootedTree::join(std::move(children))};
}

}  // namespace

ConsistencyResult build(const TripleSet& r, const LeafSet& leaves) {
  if (leaves.empty()) throw Error(ErrorKind::EmptyLeafSet, "build needs at least one leaf");
  return build_rec(r, leaves);
}

bool is_consistent(const TripleSet& r) {
  if (r.empty()) return true;
  detail::TripleIndex index(r);
  return detail::consistent_ids(index.ids(), index.leaf_count());
}

bool entails_consistent(const TripleSet& r, const RootedTriple& t) {
  detail::TripleIndex index(r);
  if (!detail::consistent_ids(index.ids(), index.leaf_count())) {
    throw Error(ErrorKind::InconsistentInput, "entailment query on an inconsistent triple set");
  }
  if (r.contains(t)) return true;
  const auto ls = r.leaves();
  if (!ls.count(t.p()) || !ls.count(t.q()) || !ls.count(t.o())) return false;
  return detail::entails_ids(index.ids(), index.leaf_count(), index.encode(t));
}

TripleSet closure_consistent(const TripleSet& r) {
  detail::TripleIndex index(r);
  if (!detail::consistent_ids(index.ids(), index.leaf_count())) {
    throw Error(ErrorKind::InconsistentInput, "closure of an inconsistent triple set");
  }
  TripleSet out;
  for (const auto& t : candidate_triples(r.leaves())) {
    if (r.contains(t) || detail::entails_ids(index.ids(), index.leaf_count(), index.encode(t))) {
      out.insert(t);
    }
  }
  return out;
}

namespace {

// Both orientations of a triple's LHS: {lhs0, lhs1, rhs}.
std::array<std::array<Leaf, 3>, 2> orientations(const RootedTriple& t) {
  return {{{t.p(), t.q(), t.o()}, {t.q(), t.p(), t.o()}}};
}

bool distinct(std::initializer_list<const Leaf*> ls) {
  for (auto i = ls.begin(); i != ls.end(); ++i) {
    for (auto j = std::next(i); j != ls.end(); ++j) {
      if (**i == **j) return false;
    }
  }
  return true;
}

void apply_ordered(const RootedTriple& first, const RootedTriple& second, TripleSet& out) {
  for (const auto& a : orientations(first)) {
    for (const auto& b : orientations(second)) {
      // {pq|o, qp'|o} ⊢ pp'|o
      {
        const Leaf &p = a[0], &q = a[1], &o = a[2], &pp = b[1];
        if (b[0] == q && b[2] == o && distinct({&p, &q, &o, &pp})) {
          out.insert(make_triple(p, pp, o));
        }
      }
      // {pq|o, qo|o'} ⊢ {pq|o', po|o'}
      {
        const Leaf &p = a[0], &q = a[1], &o = a[2], &oo = b[2];
        if (b[0] == q && b[1] == o && distinct({&p, &q, &o, &oo})) {
          out.insert(make_triple(p, q, oo));
          out.insert(make_triple(p, o, oo));
        }
      }
      // {pp'|o, oo'|p} ⊢ {pp'|o', oo'|p'}
      {
        const Leaf &p = a[0], &pp = a[1], &o = a[2], &oo = b[1];
        if (b[0] == o && b[2] == p && distinct({&p, &pp, &o, &oo})) {
          out.insert(make_triple(p, pp, oo));
          out.insert(make_triple(o, oo, pp));
        }
      }
    }
  }
}

}  // namespace

TripleSet dyadic_apply(const RootedTriple& t1, const RootedTriple& t2) {
  TripleSet out;
  apply_ordered(t1, t2, out);
  apply_ordered(t2, t1, out);
  return out;
}

}  // namespace tripent
