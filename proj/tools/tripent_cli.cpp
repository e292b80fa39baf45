#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "tripent/amplify.hpp"
#include "tripent/cnf.hpp"
#include "tripent/consistency.hpp"
#include "tripent/error.hpp"
#include "tripent/hypergraph.hpp"
#include "tripent/paths.hpp"
#include "tripent/reduction.hpp"
#include "tripent/subsets.hpp"
#include "tripent/tree.hpp"
#include "tripent/verify.hpp"

using namespace tripent;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kGuard = 3;

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
  out << text;
}

int answer(bool b) {
  std::cout << (b ? "true" : "false") << '\n';
  return b ? kTrue : kFalse;
}

void print_path(const HPath& p) {
  for (const auto& a : p.arcs) std::cout << to_string(a) << '\n';
}

struct Options {
  std::string input;
  std::string triple;
  std::string from;
  std::string to;
  std::string eps;
  std::string out_prefix;
  bool min = false;
  bool dot = false;
  bool witness = false;
  bool lemmas = false;
  bool timings = false;
  std::size_t max_subset = kDefaultMaxSubsetTriples;
  std::uint64_t max_expansions = kDefaultExpansionBudget;
  std::uint64_t arc_budget = kDefaultArcBudget;
};

int cmd_consistent(const Options& o) {
  return answer(is_consistent(parse_triples(slurp(o.input))));
}

int cmd_build(const Options& o) {
  const auto r = parse_triples(slurp(o.input));
  if (r.empty()) throw Error(ErrorKind::EmptyLeafSet, "no triples, so no leaves to build over");
  const auto res = build(r, r.leaves());
  if (const auto* c = std::get_if<Consistent>(&res)) {
    std::cout << c->tree.to_newick() << '\n';
    return kTrue;
  }
  std::cerr << "inconsistent: Ahograph connected on {";
  bool first = true;
  for (const auto& l : std::get<Inconsistent>(res).witness) {
    std::cerr << (first ? "" : ", ") << l.name();
    first = false;
  }
  std::cerr << "}\n";
  return kFalse;
}

int cmd_closure(const Options& o) {
  const auto r = parse_triples(slurp(o.input));
  const auto c = is_consistent(r) ? closure_consistent(r) : closure_inconsistent(r, {o.max_subset});
  std::cout << format_triples(c);
  return kTrue;
}

int cmd_entails(const Options& o) {
  const auto r = parse_triples(slurp(o.input));
  const auto t = parse_triple(o.triple);
  if (is_consistent(r)) return answer(entails_consistent(r, t));
  const auto a = entails_inconsistent(r, t, {o.max_subset});
  const int code = answer(a.entailed);
  if (o.witness && a.witness) std::cout << format_triples(*a.witness);
  return code;
}

int cmd_reduce(const Options& o) {
  const auto inst = reduce(parse_dimacs(slurp(o.input)));
  const auto triples = format_triples(inst.triples);
  const auto graph = format_hypergraph(inst.graph);
  const auto meta = format_metadata(inst);
  if (!o.out_prefix.empty()) {
    write_file(o.out_prefix + ".triples", triples);
    write_file(o.out_prefix + ".hg", graph);
    write_file(o.out_prefix + ".meta", meta);
    return kTrue;
  }
  std::cout << "# triples\n" << triples << "# hypergraph\n" << graph << "# metadata\n" << meta;
  if (o.dot) std::cout << "# dot\n" << to_dot(inst.graph);
  return kTrue;
}

int cmd_path(const Options& o) {
  const auto h = parse_hypergraph(slurp(o.input));
  const auto from = HNode::parse(o.from);
  const auto to = HNode::parse(o.to);
  const SearchLimits limits{o.max_expansions};
  const auto s = o.min ? min_acyclic_path(h, from, to, limits) : find_acyclic_path(h, from, to, limits);
  if (s.status == SearchStatus::Exhausted) {
    throw Error(ErrorKind::ResourceExhausted,
                "search stopped after " + std::to_string(s.expansions) + " expansions");
  }
  if (s.status == SearchStatus::NotFound) return answer(false);
  if (o.dot) {
    std::cout << to_dot(h, s.path->arcs);
    return kTrue;
  }
  std::cout << "true\n";
  print_path(*s.path);
  return kTrue;
}

int cmd_bconnect(const Options& o) {
  const auto h = parse_hypergraph(slurp(o.input));
  const auto reached = b_connected_set(h, HNode::parse(o.from));
  if (o.dot) {
    std::vector<Hyperarc> fired;
    for (const auto& a : h.arcs()) {
      if (reached.count(a.tail())) fired.push_back(a);
    }
    std::cout << to_dot(h, fired);
    return kTrue;
  }
  for (const auto& n : reached) std::cout << n.str() << '\n';
  return kTrue;
}

int cmd_cyclic(const Options& o) {
  const auto h = parse_hypergraph(slurp(o.input));
  return answer(is_cyclic_arcset(h.arcs()));
}

int cmd_amplify(const Options& o) {
  const auto h = parse_hypergraph(slurp(o.input));
  const auto eps = Rational::parse(o.eps);
  const auto amp = amplify(h, HNode::parse(o.from), HNode::parse(o.to), eps, o.arc_budget);
  if (o.dot) {
    std::cout << to_dot(amp.graph);
    return kTrue;
  }
  std::cout << "# dummy_length=" << amp.dummy_length << '\n'
            << "# non_sink_nodes=" << amp.non_sink_nodes << '\n'
            << "# total_nodes=" << amp.total_nodes << '\n'
            << format_hypergraph(amp.graph);
  return kTrue;
}

int cmd_sat(const Options& o) {
  const auto v = brute_force_sat(parse_dimacs(slurp(o.input)));
  const int code = answer(v.has_value());
  if (v) std::cout << to_string(*v) << '\n';
  return code;
}

int cmd_verify(const Options& o) {
  const auto f = parse_dimacs(slurp(o.input));
  ChainOptions opts;
  opts.entailment_budget = o.max_subset;
  opts.path_limits.max_expansions = o.max_expansions;
  const auto report = check_chain(f, opts);
  std::cout << format_report(report, o.timings);
  bool ok = report.agreement;
  if (o.lemmas) {
    const auto lemmas = check_lemma_suite(reduce(f));
    std::cout << '\n' << format_report(lemmas);
    ok = ok && lemmas.passed();
  }
  return ok ? kTrue : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rooted triple consistency, entailment and the 3SAT hypergraph reduction"};
  app.require_subcommand(1);
  Options o;

  auto input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", o.input, std::string(what) + " file, '-' or omitted for stdin");
  };
  auto subset_guard = [&](CLI::App* sub) {
    sub->add_option("--max-subset", o.max_subset, "largest inconsistent set searched for subsets")
        ->capture_default_str();
  };
  auto expansions = [&](CLI::App* sub) {
    sub->add_option("--max-expansions", o.max_expansions, "path search budget")->capture_default_str();
  };

  auto* consistent = app.add_subcommand("consistent", "is the triple set consistent");
  input(consistent, "triple");
  auto* build_cmd = app.add_subcommand("build", "BUILD tree in Newick form");
  input(build_cmd, "triple");
  auto* closure = app.add_subcommand("closure", "all entailed triples");
  input(closure, "triple");
  subset_guard(closure);
  auto* entails = app.add_subcommand("entails", "does the set entail --triple");
  input(entails, "triple");
  entails->add_option("--triple", o.triple, "e.g. \"a b | c\"")->required();
  entails->add_flag("--witness", o.witness, "print an entailing consistent subset");
  subset_guard(entails);
  auto* reduce_cmd = app.add_subcommand("reduce", "3SAT instance to triples, hypergraph, metadata");
  input(reduce_cmd, "DIMACS");
  reduce_cmd->add_option("--out", o.out_prefix, "write <prefix>.triples, .hg and .meta");
  reduce_cmd->add_flag("--dot", o.dot);
  auto* path = app.add_subcommand("path", "acyclic path between two nodes");
  input(path, "hypergraph");
  path->add_option("--from", o.from)->required();
  path->add_option("--to", o.to)->required();
  path->add_flag("--min", o.min, "shortest acyclic path");
  path->add_flag("--dot", o.dot);
  expansions(path);
  auto* bconnect = app.add_subcommand("bconnect", "nodes B-connected to --from");
  input(bconnect, "hypergraph");
  bconnect->add_option("--from", o.from)->required();
  bconnect->add_flag("--dot", o.dot);
  auto* cyclic = app.add_subcommand("cyclic", "does the arc set contain a cycle");
  input(cyclic, "hypergraph");
  auto* amplify_cmd = app.add_subcommand("amplify", "pad with a dummy path from --from to --to");
  input(amplify_cmd, "hypergraph");
  amplify_cmd->add_option("--from", o.from)->required();
  amplify_cmd->add_option("--to", o.to)->required();
  amplify_cmd->add_option("--eps", o.eps, "in (0, 1/4), decimal or p/q")->required();
  amplify_cmd->add_option("--budget", o.arc_budget, "most dummy arcs generated")->capture_default_str();
  amplify_cmd->add_flag("--dot", o.dot);
  auto* sat = app.add_subcommand("sat", "brute-force satisfiability");
  input(sat, "DIMACS");
  auto* verify = app.add_subcommand("verify", "check sat, path and entailment agree");
  input(verify, "DIMACS");
  verify->add_option("--entailment-budget", o.max_subset, "largest R searched for entailment")
      ->capture_default_str();
  verify->add_flag("--lemmas", o.lemmas, "also run the per-assignment witness checks");
  verify->add_flag("--timings", o.timings, "include stage timings");
  expansions(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    auto* sub = app.get_subcommands().front();
    const auto name = sub->get_name();
    if (name == "consistent") return cmd_consistent(o);
    if (name == "build") return cmd_build(o);
    if (name == "closure") return cmd_closure(o);
    if (name == "entails") return cmd_entails(o);
    if (name == "reduce") return cmd_reduce(o);
    if (name == "path") return cmd_path(o);
    if (name == "bconnect") return cmd_bconnect(o);
    if (name == "cyclic") return cmd_cyclic(o);
    if (name == "amplify") return cmd_amplify(o);
    if (name == "sat") return cmd_sat(o);
    if (name == "verify") return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_resource_guard(e.kind()) ? kGuard : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
