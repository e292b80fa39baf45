#include "tripent/hypergraph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>

#include "tripent/error.hpp"

namespace tripent {

HNode HNode::pair(const Leaf& a, const Leaf& b) {
  if (a == b) throw Error(ErrorKind::DuplicateLeaf, "pair node needs two distinct leaves");
  const auto& lo = std::min(a, b);
  const auto& hi = std::max(a, b);
  return HNode(lo.name() + "," + hi.name(), true);
}

HNode HNode::named(std::string name) {
  if (name.empty() || name.find(',') != std::string::npos ||
      std::any_of(name.begin(), name.end(),
                  [](char c) { return std::isspace(static_cast<unsigned char>(c)); }) ||
      name == "->") {
    throw Error(ErrorKind::InvalidName, "invalid node name '" + name + "'");
  }
  return HNode(std::move(name), false);
}

HNode HNode::parse(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return named(std::string(text));
  if (text.find(',', comma + 1) != std::string_view::npos) {
    throw Error(ErrorKind::ParseError, "node '" + std::string(text) + "' has more than one comma");
  }
  return pair(Leaf(std::string(text.substr(0, comma))), Leaf(std::string(text.substr(comma + 1))));
}

std::pair<Leaf, Leaf> HNode::leaves() const {
  if (!is_pair_) throw Error(ErrorKind::MalformedArc, "node '" + text_ + "' is not a leaf pair");
  const auto comma = text_.find(',');
  return {Leaf(text_.substr(0, comma)), Leaf(text_.substr(comma + 1))};
}

std::ostream& operator<<(std::ostream& os, const HNode& n) { return os << n.str(); }

Hyperarc::Hyperarc(HNode tail, HNode head1, HNode head2)
    : tail_(std::move(tail)),
      heads_(head1 < head2 ? std::pair{std::move(head1), std::move(head2)}
                           : std::pair{std::move(head2), std::move(head1)}) {
  if (tail_ == heads_.first || tail_ == heads_.second || heads_.first == heads_.second) {
    throw Error(ErrorKind::MalformedArc, "hyperarc nodes must be distinct: " + tail_.str() +
                                             " -> " + heads_.first.str() + " " +
                                             heads_.second.str());
  }
}

std::string to_string(const Hyperarc& a) {
  return a.tail().str() + " -> " + a.head_a().str() + " " + a.head_b().str();
}

std::ostream& operator<<(std::ostream& os, const Hyperarc& a) { return os << to_string(a); }

void Hypergraph::add_arc(const Hyperarc& a) {
  nodes_.insert(a.tail());
  nodes_.insert(a.head_a());
  nodes_.insert(a.head_b());
  arcs_.insert(a);
}

Hyperarc arc_of_triple(const RootedTriple& t) {
  return Hyperarc(HNode::pair(t.p(), t.q()), HNode::pair(t.p(), t.o()), HNode::pair(t.q(), t.o()));
}

RootedTriple triple_of_arc(const Hyperarc& a) {
  if (!a.tail().is_pair() || !a.head_a().is_pair() || !a.head_b().is_pair()) {
    throw Error(ErrorKind::MalformedArc, "arc " + to_string(a) + " has a non-pair node");
  }
  const auto [v1, v2] = a.head_a().leaves();
  const auto [w1, w2] = a.head_b().leaves();
  LeafSet v{v1, v2};
  LeafSet w{w1, w2};
  std::vector<Leaf> common;
  std::vector<Leaf> sym;
  std::set_intersection(v.begin(), v.end(), w.begin(), w.end(), std::back_inserter(common));
  std::set_symmetric_difference(v.begin(), v.end(), w.begin(), w.end(), std::back_inserter(sym));
  if (common.size() != 1) {
    throw Error(ErrorKind::MalformedArc, "heads of " + to_string(a) + " do not share exactly one leaf");
  }
  if (HNode::pair(sym[0], sym[1]) != a.tail()) {
    throw Error(ErrorKind::MalformedArc,
                "tail of " + to_string(a) + " is not the symmetric difference of its heads");
  }
  return make_triple(sym[0], sym[1], common[0]);
}

Hypergraph hypergraph_of_triples(const TripleSet& r) {
  Hypergraph h;
  for (const auto& t : r) h.add_arc(arc_of_triple(t));
  return h;
}

TripleSet triples_of_arcs(const std::vector<Hyperarc>& arcs) {
  TripleSet out;
  for (const auto& a : arcs) out.insert(triple_of_arc(a));
  return out;
}

namespace {

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  Hypergraph h;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const auto line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    const auto toks = tokens(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    try {
      if (toks.size() == 1) {
        h.add_node(HNode::parse(toks[0]));
      } else if (toks.size() == 4 && toks[1] == "->") {
        h.add_arc(Hyperarc(HNode::parse(toks[0]), HNode::parse(toks[2]), HNode::parse(toks[3])));
      } else {
        throw Error(ErrorKind::ParseError, "expected 'tail -> head1 head2'");
      }
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return h;
}

std::string format_hypergraph(const Hypergraph& h) {
  std::set<HNode> touched;
  std::ostringstream os;
  for (const auto& a : h.arcs()) {
    os << to_string(a) << '\n';
    touched.insert(a.tail());
    touched.insert(a.head_a());
    touched.insert(a.head_b());
  }
  for (const auto& n : h.nodes()) {
    if (!touched.count(n)) os << n.str() << '\n';
  }
  return os.str();
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Hypergraph& h, const std::vector<Hyperarc>& highlight) {
  const std::set<Hyperarc> bold(highlight.begin(), highlight.end());
  std::ostringstream os;
  os << "digraph hypergraph {\n  rankdir=LR;\n  node [shape=record];\n";
  std::map<HNode, std::size_t> ids;
  for (const auto& n : h.nodes()) {
    const auto id = ids.size();
    ids.emplace(n, id);
    os << "  n" << id << " [label=" << dot_quote(n.str()) << "];\n";
  }
  std::size_t k = 0;
  for (const auto& a : h.arcs()) {
    const bool hot = bold.count(a) > 0;
    const std::string edge_attr = hot ? " [penwidth=2.5]" : "";
    os << "  j" << k << " [shape=point, width=0.08];\n";
    os << "  n" << ids.at(a.tail()) << " -> j" << k << " [arrowhead=none"
       << (hot ? ", penwidth=2.5" : "") << "];\n";
    os << "  j" << k << " -> n" << ids.at(a.head_a()) << edge_attr << ";\n";
    os << "  j" << k << " -> n" << ids.at(a.head_b()) << edge_attr << ";\n";
    ++k;
  }
  os << "}\n";
  return os.str();
}

}  // namespace tripent
