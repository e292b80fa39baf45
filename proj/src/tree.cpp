#include "tripent/tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "tripent/error.hpp"

namespace tripent {

RootedTree RootedTree::leaf(Leaf label) {
  RootedTree t;
  t.leaf_set_.insert(label);
  t.nodes_.push_back(Node{std::move(label), {}, npos});
  t.root_ = 0;
  return t;
}

RootedTree::NodeId RootedTree::append(const RootedTree& sub, NodeId parent) {
  // Copies sub's nodes, remapping ids.
  const NodeId offset = nodes_.size();
  for (const auto& n : sub.nodes_) {
    Node copy = n;
    for (auto& c : copy.children) c += offset;
    copy.parent = (n.parent == npos) ? parent : n.parent + offset;
    nodes_.push_back(std::move(copy));
  }
  return sub.root_ + offset;
}

RootedTree RootedTree::join(std::vector<RootedTree> subtrees) {
  if (subtrees.size() < 2) {
    throw std::invalid_argument("RootedTree::join needs at least two subtrees");
  }
  RootedTree t;
  t.nodes_.push_back(Node{});
  t.root_ = 0;
  for (const auto& sub : subtrees) {
    for (const auto& l : sub.leaf_set_) {
      if (!t.leaf_set_.insert(l).second) {
        throw Error(ErrorKind::DuplicateLeaf, "leaf '" + l.name() + "' appears twice in tree");
      }
    }
    const NodeId child = t.append(sub, 0);
    t.nodes_[0].children.push_back(child);
  }
  return t;
}

bool RootedTree::is_binary() const {
  return std::all_of(nodes_.begin(), nodes_.end(),
                     [](const Node& n) { return n.label || n.children.size() == 2; });
}

RootedTree::NodeId RootedTree::find(const Leaf& label) const {
  for (NodeId i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].label && *nodes_[i].label == label) return i;
  }
  return npos;
}

std::size_t RootedTree::depth(NodeId id) const {
  std::size_t d = 0;
  while (nodes_.at(id).parent != npos) {
    id = nodes_[id].parent;
    ++d;
  }
  return d;
}

RootedTree::NodeId RootedTree::lca(NodeId a, NodeId b) const {
  auto da = depth(a);
  auto db = depth(b);
  while (da > db) { a = nodes_[a].parent; --da; }
  while (db > da) { b = nodes_[b].parent; --db; }
  while (a != b) {
    a = nodes_[a].parent;
    b = nodes_[b].parent;
  }
  return a;
}

bool RootedTree::is_proper_descendant(NodeId below, NodeId above) const {
  if (below == above) return false;
  while (below != npos) {
    if (below == above) return true;
    below = nodes_.at(below).parent;
  }
  return false;
}

std::string RootedTree::to_newick() const {
  std::string out;
  std::function<void(NodeId)> emit = [&](NodeId id) {
    const Node& n = nodes_[id];
    if (n.label) {
      out += n.label->name();
      return;
    }
    out += '(';
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      if (i) out += ',';
      emit(n.children[i]);
    }
    out += ')';
  };
  if (root_ != npos) emit(root_);
  out += ';';
  return out;
}

namespace {

class NewickParser {
 public:
  explicit NewickParser(std::string_view s) : s_(s) {}

  RootedTree parse() {
    skip_ws();
    RootedTree t = subtree();
    skip_ws();
    expect(';');
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return t;
  }

 private:
  RootedTree subtree() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      std::vector<RootedTree> kids;
      kids.push_back(subtree());
      skip_ws();
      while (peek() == ',') {
        ++pos_;
        kids.push_back(subtree());
        skip_ws();
      }
      expect(')');
      if (kids.size() == 1) return std::move(kids.front());  // collapse unary nodes
      return RootedTree::join(std::move(kids));
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && is_valid_leaf_name(s_.substr(pos_, 1))) ++pos_;
    if (pos_ == start) fail("expected leaf name");
    return RootedTree::leaf(Leaf(std::string(s_.substr(start, pos_ - start))));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, "newick offset " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RootedTree parse_newick(std::string_view text) { return NewickParser(text).parse(); }

bool displays(const RootedTree& tree, const RootedTriple& t) {
  const auto p = tree.find(t.p());
  const auto q = tree.find(t.q());
  const auto o = tree.find(t.o());
  if (p == RootedTree::npos || q == RootedTree::npos || o == RootedTree::npos) {
    throw Error(ErrorKind::UnknownLeaf, "triple " + to_string(t) + " mentions a leaf not in the tree");
  }
  return tree.is_proper_descendant(tree.lca(p, q), tree.lca(p, o));
}

TripleSet displayed_triples(const RootedTree& tree) {
  std::vector<Leaf> ls(tree.leaves().begin(), tree.leaves().end());
  std::vector<RootedTree::NodeId> ids;
  for (const auto& l : ls) {
    ids.push_back(tree.find(l));
  }
  TripleSet out;
  const std::size_t n = ls.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto ij = tree.lca(ids[i], ids[j]);
      const auto dij = tree.depth(ij);
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto ik = tree.lca(ids[i], ids[k]);
        const auto jk = tree.lca(ids[j], ids[k]);
        const auto dik = tree.depth(ik);
        const auto djk = tree.depth(jk);
        // The deepest of the three pairwise lcas (if unique) names the cherry.
        if (dij > dik && dij > djk) out.insert(make_triple(ls[i], ls[j], ls[k]));
        else if (dik > dij && dik > djk) out.insert(make_triple(ls[i], ls[k], ls[j]));
        else if (djk > dij && djk > dik) out.insert(make_triple(ls[j], ls[k], ls[i]));
      }
    }
  }
  return out;
}

}  // namespace tripent
