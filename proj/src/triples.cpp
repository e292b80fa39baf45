#include "tripent/triples.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "tripent/error.hpp"

namespace tripent {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
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

bool is_valid_leaf_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '+';
  });
}

Leaf::Leaf(std::string name) : name_(std::move(name)) {
  if (!is_valid_leaf_name(name_)) {
    throw Error(ErrorKind::InvalidName, "invalid leaf name '" + name_ + "'");
  }
}

RootedTriple make_triple(Leaf p, Leaf q, Leaf o) {
  if (p == q || p == o || q == o) {
    throw Error(ErrorKind::DuplicateLeaf,
                "triple leaves must be distinct: " + p.name() + " " + q.name() + " | " + o.name());
  }
  if (q < p) std::swap(p, q);
  return RootedTriple(std::move(p), std::move(q), std::move(o));
}

RootedTriple make_triple(std::string_view p, std::string_view q, std::string_view o) {
  return make_triple(Leaf(std::string(p)), Leaf(std::string(q)), Leaf(std::string(o)));
}

std::string to_string(const RootedTriple& t) {
  return t.p().name() + " " + t.q().name() + " | " + t.o().name();
}

std::ostream& operator<<(std::ostream& os, const RootedTriple& t) { return os << to_string(t); }

LeafSet TripleSet::leaves() const {
  LeafSet out;
  for (const auto& t : triples_) {
    out.insert(t.p());
    out.insert(t.q());
    out.insert(t.o());
  }
  return out;
}

bool TripleSet::is_subset_of(const TripleSet& other) const {
  return std::includes(other.triples_.begin(), other.triples_.end(), triples_.begin(),
                       triples_.end());
}

TripleSet TripleSet::united(const TripleSet& other) const {
  TripleSet out = *this;
  out.triples_.insert(other.triples_.begin(), other.triples_.end());
  return out;
}

TripleSet TripleSet::with(const RootedTriple& t) const {
  TripleSet out = *this;
  out.insert(t);
  return out;
}

std::ostream& operator<<(std::ostream& os, const TripleSet& r) {
  os << '{';
  bool first = true;
  for (const auto& t : r) {
    if (!first) os << ", ";
    first = false;
    os << t.p().name() << t.q().name() << '|' << t.o().name();
  }
  return os << '}';
}

RootedTriple parse_triple(std::string_view line) {
  const auto bar = line.find('|');
  if (bar == std::string_view::npos || line.find('|', bar + 1) != std::string_view::npos) {
    throw Error(ErrorKind::ParseError, "expected exactly one '|' in '" + std::string(line) + "'");
  }
  auto lhs = split_ws(line.substr(0, bar));
  auto rhs = split_ws(line.substr(bar + 1));
  if (lhs.size() != 2 || rhs.size() != 1) {
    throw Error(ErrorKind::ParseError, "expected 'p q | o', got '" + std::string(trim(line)) + "'");
  }
  for (auto tok : {lhs[0], lhs[1], rhs[0]}) {
    if (!is_valid_leaf_name(tok)) {
      throw Error(ErrorKind::ParseError, "invalid leaf name '" + std::string(tok) + "'");
    }
  }
  return make_triple(lhs[0], lhs[1], rhs[0]);
}

TripleSet parse_triples(std::string_view text) {
  TripleSet out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++line_no;
    auto line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    if (line.empty() || line.front() == '#') continue;
    try {
      out.insert(parse_triple(line));
    } catch (const Error& e) {
      throw Error(e.kind() == ErrorKind::DuplicateLeaf ? e.kind() : ErrorKind::ParseError,
                  "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::string format_triples(const TripleSet& r) {
  std::ostringstream os;
  for (const auto& t : r) os << to_string(t) << '\n';
  return os.str();
}

std::vector<RootedTriple> candidate_triples(const LeafSet& leaves) {
  std::vector<Leaf> ls(leaves.begin(), leaves.end());
  std::vector<RootedTriple> out;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      for (std::size_t k = 0; k < ls.size(); ++k) {
        if (k == i || k == j) continue;
        out.push_back(make_triple(ls[i], ls[j], ls[k]));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tripent
