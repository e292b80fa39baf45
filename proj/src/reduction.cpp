#include "tripent/reduction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tripent/error.hpp"

namespace tripent {

namespace leaf_names {

namespace {
Leaf indexed(const char* stem, int a) { return Leaf(stem + std::to_string(a)); }
Leaf indexed(const char* stem, int a, int b) {
  return Leaf(stem + std::to_string(a) + "_" + std::to_string(b));
}
}  // namespace

Leaf x(int i, int j, bool negated) { return indexed(negated ? "nx" : "x", i, j); }
Leaf y(int i, int j, bool negated) { return indexed(negated ? "ny" : "y", i, j); }
Leaf b(int i) { return indexed("b", i); }
Leaf bp(int i) { return indexed("bp", i); }
Leaf c(int j) { return indexed("c", j); }
Leaf d(int j) { return indexed("d", j); }
Leaf alpha() { return Leaf("alpha"); }
Leaf beta() { return Leaf("beta"); }
Leaf gamma() { return Leaf("gamma"); }

}  // namespace leaf_names

namespace ln = leaf_names;

Clause dedup_clause(const Clause& clause) {
  Clause out;
  for (auto lit : clause) {
    if (std::find(out.begin(), out.end(), lit) == out.end()) out.push_back(lit);
  }
  return out;
}

std::vector<RootedTriple> variable_side(int i, int m, bool negative_side) {
  const bool neg = negative_side;
  std::vector<RootedTriple> out;
  out.push_back(make_triple(ln::b(i), ln::bp(i), ln::x(i, 1, neg)));
  out.push_back(make_triple(ln::bp(i), ln::x(i, 1, neg), ln::y(i, 1, neg)));
  for (int j = 1; j < m; ++j) {
    out.push_back(make_triple(ln::x(i, j, neg), ln::y(i, j, neg), ln::x(i, j + 1, neg)));
    out.push_back(make_triple(ln::y(i, j, neg), ln::x(i, j + 1, neg), ln::y(i, j + 1, neg)));
  }
  out.push_back(make_triple(ln::x(i, m, neg), ln::y(i, m, neg), ln::b(i + 1)));
  // The two sides leave through different heads of the previous arc.
  out.push_back(neg ? make_triple(ln::x(i, m, neg), ln::b(i + 1), ln::bp(i + 1))
                    : make_triple(ln::y(i, m, neg), ln::b(i + 1), ln::bp(i + 1)));
  return out;
}

TripleSet variable_gadget(int i, int m) {
  TripleSet out;
  for (bool neg : {false, true}) {
    for (const auto& t : variable_side(i, m, neg)) out.insert(t);
  }
  return out;
}

std::vector<RootedTriple> clause_witness(int j, Literal lit) {
  const int i = lit > 0 ? lit : -lit;
  const bool neg = lit < 0;
  return {make_triple(ln::c(j), ln::d(j), ln::x(i, j, neg)),
          make_triple(ln::c(j), ln::x(i, j, neg), ln::y(i, j, neg)),
          make_triple(ln::c(j), ln::y(i, j, neg), ln::c(j + 1))};
}

RootedTriple clause_exit(int j, int m) {
  return j < m ? make_triple(ln::c(j), ln::c(j + 1), ln::d(j + 1))
               : make_triple(ln::c(j), ln::c(j + 1), ln::gamma());
}

TripleSet clause_gadget(int j, const Clause& clause, int m) {
  const auto lits = dedup_clause(clause);
  if (lits.empty()) throw Error(ErrorKind::EmptyClause, "clause " + std::to_string(j) + " is empty");
  TripleSet out;
  for (auto lit : lits) {
    for (const auto& t : clause_witness(j, lit)) out.insert(t);
  }
  if (j < m) out.insert(clause_exit(j, m));
  return out;
}

LeafCounts ReductionInstance::leaf_counts() const {
  LeafCounts c;
  const auto leaves = triples.leaves();
  const auto mm = m();
  for (const auto& l : leaves) {
    const auto& s = l.name();
    if (s == "alpha" || s == "beta" || s == "gamma") {
      ++c.l4;
    } else if (s.rfind("nx", 0) == 0 || s.rfind("ny", 0) == 0 || s[0] == 'x' || s[0] == 'y') {
      ++c.l1;
    } else if (s[0] == 'b') {
      ++c.l2;
    } else if (s[0] == 'c' || s[0] == 'd') {
      if (s == ln::c(mm + 1).name()) ++c.extra;
      else ++c.l3;
    }
  }
  return c;
}

bool ReductionInstance::uses_unit_clauses() const {
  return std::any_of(formula.clauses.begin(), formula.clauses.end(),
                     [](const Clause& c) { return c.size() == 1; });
}

std::size_t ReductionInstance::witness_path_length() const {
  const auto nn = static_cast<std::size_t>(n());
  const auto mm = static_cast<std::size_t>(m());
  return nn * (2 * mm + 2) + 4 * mm + 4;
}

namespace {

void register_leaves(ReductionInstance& inst) {
  auto& reg = inst.leaf_registry;
  const int n = inst.n();
  const int m = inst.m();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      const auto sup = std::to_string(i) + "^" + std::to_string(j);
      reg.emplace("x_" + sup, ln::x(i, j));
      reg.emplace("~x_" + sup, ln::x(i, j, true));
      reg.emplace("y_" + sup, ln::y(i, j));
      reg.emplace("~y_" + sup, ln::y(i, j, true));
    }
  }
  for (int i = 1; i <= n + 1; ++i) {
    reg.emplace("b_" + std::to_string(i), ln::b(i));
    reg.emplace("b'_" + std::to_string(i), ln::bp(i));
  }
  for (int j = 1; j <= m; ++j) {
    reg.emplace("c_" + std::to_string(j), ln::c(j));
    reg.emplace("d_" + std::to_string(j), ln::d(j));
  }
  reg.emplace("c_" + std::to_string(m + 1), ln::c(m + 1));
  reg.emplace("alpha", ln::alpha());
  reg.emplace("beta", ln::beta());
  reg.emplace("gamma", ln::gamma());
}

}  // namespace

ReductionInstance reduce(const CnfFormula& formula) {
  CnfFormula f = formula;
  for (auto& c : f.clauses) c = dedup_clause(c);
  if (f.num_vars < 1) throw Error(ErrorKind::MalformedFormula, "formula needs at least one variable");
  if (f.clauses.empty()) throw Error(ErrorKind::MalformedFormula, "formula needs at least one clause");
  try {
    validate(f);
  } catch (const Error& e) {
    throw Error(ErrorKind::MalformedFormula, e.what());
  }

  const int n = f.num_vars;
  const int m = static_cast<int>(f.clauses.size());
  TripleSet r;
  for (int i = 1; i <= n; ++i) r = r.united(variable_gadget(i, m));
  for (int j = 1; j <= m; ++j) r = r.united(clause_gadget(j, f.clauses[j - 1], m));
  r.insert(make_triple(ln::alpha(), ln::beta(), ln::b(1)));
  r.insert(make_triple(ln::beta(), ln::b(1), ln::bp(1)));
  r.insert(make_triple(ln::b(n + 1), ln::bp(n + 1), ln::c(1)));
  r.insert(make_triple(ln::bp(n + 1), ln::c(1), ln::d(1)));
  r.insert(clause_exit(m, m));

  ReductionInstance inst{
      f,
      r,
      hypergraph_of_triples(r),
      HNode::pair(ln::alpha(), ln::beta()),
      HNode::pair(ln::c(m + 1), ln::gamma()),
      make_triple(ln::alpha(), ln::beta(), ln::gamma()),
      {},
  };
  register_leaves(inst);
  return inst;
}

HPath path_with_witnesses(const ReductionInstance& inst, const Assignment& v,
                          const std::vector<Literal>& witness_per_clause) {
  const int n = inst.n();
  const int m = inst.m();
  if (v.size() != n) {
    throw Error(ErrorKind::IncompleteAssignment, "assignment does not cover the formula's variables");
  }
  if (witness_per_clause.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("one witness literal per clause required");
  }
  std::vector<RootedTriple> seq;
  seq.push_back(make_triple(ln::alpha(), ln::beta(), ln::b(1)));
  seq.push_back(make_triple(ln::beta(), ln::b(1), ln::bp(1)));
  for (int i = 1; i <= n; ++i) {
    const auto side = variable_side(i, m, /*negative_side=*/v.value(i));
    seq.insert(seq.end(), side.begin(), side.end());
  }
  seq.push_back(make_triple(ln::b(n + 1), ln::bp(n + 1), ln::c(1)));
  seq.push_back(make_triple(ln::bp(n + 1), ln::c(1), ln::d(1)));
  for (int j = 1; j <= m; ++j) {
    const auto lit = witness_per_clause[j - 1];
    const auto& clause = inst.formula.clauses[j - 1];
    if (std::find(clause.begin(), clause.end(), lit) == clause.end()) {
      throw std::invalid_argument("witness literal " + std::to_string(lit) + " not in clause " +
                                  std::to_string(j));
    }
    const auto w = clause_witness(j, lit);
    seq.insert(seq.end(), w.begin(), w.end());
    seq.push_back(clause_exit(j, m));
  }
  HPath path{inst.source, inst.dest, {}};
  path.arcs.reserve(seq.size());
  for (const auto& t : seq) path.arcs.push_back(arc_of_triple(t));
  return path;
}

HPath path_of_assignment(const ReductionInstance& inst, const Assignment& v) {
  std::vector<Literal> witnesses;
  for (std::size_t j = 0; j < inst.formula.clauses.size(); ++j) {
    const auto& clause = inst.formula.clauses[j];
    auto it = std::find_if(clause.begin(), clause.end(),
                           [&](Literal lit) { return v.satisfies_literal(lit); });
    if (it == clause.end()) {
      throw Error(ErrorKind::UnsatisfyingAssignment,
                  "clause " + std::to_string(j + 1) + " is false under " + to_string(v));
    }
    witnesses.push_back(*it);
  }
  return path_with_witnesses(inst, v, witnesses);
}

HPath forced_wrong_side_path(const ReductionInstance& inst, const Assignment& v,
                             std::size_t violated) {
  const auto& clauses = inst.formula.clauses;
  if (violated >= clauses.size() || clause_satisfied(clauses[violated], v)) {
    throw std::invalid_argument("forced path needs a clause falsified by the assignment");
  }
  std::vector<Literal> witnesses;
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    const auto& clause = clauses[j];
    auto it = std::find_if(clause.begin(), clause.end(),
                           [&](Literal lit) { return v.satisfies_literal(lit); });
    witnesses.push_back(it == clause.end() ? clause.front() : *it);
  }
  return path_with_witnesses(inst, v, witnesses);
}

Assignment assignment_of_path(const ReductionInstance& inst, const HPath& path) {
  if (path.source != inst.source || path.dest != inst.dest) {
    throw Error(ErrorKind::NotAWitnessPath, "path does not run from source to destination");
  }
  if (path.arcs.empty() || !path.arcs.back().has_head(inst.dest) ||
      path.arcs.front().tail() != inst.source) {
    throw Error(ErrorKind::NotAWitnessPath, "path endpoints do not match its arcs");
  }
  const auto kind = validate_path(inst.graph, path.arcs);
  if (kind != PathKind::AcyclicPath) {
    throw Error(ErrorKind::NotAWitnessPath, "path is " + std::string(to_string(kind)));
  }
  const std::set<Hyperarc> used(path.arcs.begin(), path.arcs.end());
  const int m = inst.m();
  std::vector<bool> values;
  for (int i = 1; i <= inst.n(); ++i) {
    const bool pos = used.count(arc_of_triple(variable_side(i, m, false).front())) > 0;
    const bool neg = used.count(arc_of_triple(variable_side(i, m, true).front())) > 0;
    if (pos == neg) {
      throw Error(ErrorKind::NotAWitnessPath,
                  "path does not enter x" + std::to_string(i) + "'s gadget on exactly one side");
    }
    values.push_back(neg);
  }
  return Assignment(std::move(values));
}

TripleSet witness_subset(const ReductionInstance& inst, const Assignment& v) {
  return triples_of_arcs(path_of_assignment(inst, v).arcs);
}

std::string format_metadata(const ReductionInstance& inst) {
  const auto counts = inst.leaf_counts();
  std::ostringstream os;
  os << "source=" << inst.source.str() << '\n';
  os << "dest=" << inst.dest.str() << '\n';
  os << "target=" << to_string(inst.target) << '\n';
  os << "n=" << inst.n() << '\n';
  os << "m=" << inst.m() << '\n';
  os << "clauses=";
  for (std::size_t j = 0; j < inst.formula.clauses.size(); ++j) {
    if (j) os << ' ';
    for (auto lit : inst.formula.clauses[j]) os << lit << ' ';
    os << '0';
  }
  os << '\n';
  os << "triples=" << inst.triples.size() << '\n';
  os << "arcs=" << inst.graph.arcs().size() << '\n';
  os << "nodes=" << inst.graph.nodes().size() << '\n';
  os << "leaves=" << counts.total() << '\n';
  os << "leaves_L1=" << counts.l1 << '\n';
  os << "leaves_L2=" << counts.l2 << '\n';
  os << "leaves_L3=" << counts.l3 << '\n';
  os << "leaves_L4=" << counts.l4 << '\n';
  os << "leaves_extra=" << counts.extra << '\n';
  os << "witness_path_length=" << inst.witness_path_length() << '\n';
  os << "unit_clause_extension=" << (inst.uses_unit_clauses() ? "yes" : "no") << '\n';
  return os.str();
}

ReductionInstance parse_instance_bundle(std::string_view triples_text,
                                        std::string_view hypergraph_text,
                                        std::string_view metadata_text) {
  std::map<std::string, std::string> kv;
  std::istringstream in{std::string(metadata_text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "metadata line without '=': " + line);
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  for (const char* key : {"n", "clauses"}) {
    if (!kv.count(key)) throw Error(ErrorKind::ParseError, std::string("metadata lacks '") + key + "'");
  }
  CnfFormula f;
  f.num_vars = std::stoi(kv["n"]);
  std::istringstream cs{kv["clauses"]};
  Clause cur;
  for (int lit; cs >> lit;) {
    if (lit == 0) {
      f.clauses.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(lit);
    }
  }
  auto inst = reduce(f);
  if (parse_triples(triples_text) != inst.triples) {
    throw Error(ErrorKind::ParseError, "triple file does not match the metadata's formula");
  }
  if (parse_hypergraph(hypergraph_text) != inst.graph) {
    throw Error(ErrorKind::ParseError, "hypergraph file does not match the metadata's formula");
  }
  if (format_metadata(inst) != metadata_text) {
    throw Error(ErrorKind::ParseError, "metadata fields disagree with the regenerated instance");
  }
  return inst;
}

}  // namespace tripent
