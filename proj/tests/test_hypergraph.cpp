#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tripent/amplify.hpp"
#include "tripent/error.hpp"
#include "tripent/hypergraph.hpp"
#include "tripent/paths.hpp"

using namespace tripent;

namespace {

HNode N(const char* s) { return HNode::parse(s); }
Hyperarc A(const char* t, const char* a, const char* b) { return Hyperarc(N(t), N(a), N(b)); }
RootedTriple T(const char* p, const char* q, const char* o) { return make_triple(p, q, o); }

Hypergraph graph(std::initializer_list<Hyperarc> arcs) {
  Hypergraph h;
  for (const auto& a : arcs) h.add_arc(a);
  return h;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no tripent::Error thrown";
  return ErrorKind::ParseError;
}

}  // namespace

TEST(HNode, PairsAreSortedAndNamedNodesPlain) {
  EXPECT_EQ(HNode::pair(Leaf("b"), Leaf("a")).str(), "a,b");
  EXPECT_TRUE(N("b,a").is_pair());
  EXPECT_EQ(N("b,a"), N("a,b"));
  EXPECT_FALSE(N("w3").is_pair());
  EXPECT_EQ(kind_of([] { N("a,a"); }), ErrorKind::DuplicateLeaf);
  EXPECT_THROW(HNode::named("x,y"), Error);
}

TEST(Hyperarc, AllThreeNodesDistinct) {
  EXPECT_EQ(kind_of([] { A("u", "u", "v"); }), ErrorKind::MalformedArc);
  EXPECT_EQ(kind_of([] { A("u", "v", "v"); }), ErrorKind::MalformedArc);
  EXPECT_EQ(A("u", "w", "v"), A("u", "v", "w"));
}

TEST(ArcOfTriple, Examples) {
  EXPECT_EQ(arc_of_triple(T("a", "b", "c")), A("a,b", "a,c", "b,c"));
  EXPECT_EQ(arc_of_triple(T("b", "c", "a")), A("b,c", "a,b", "a,c"));
  EXPECT_EQ(triple_of_arc(arc_of_triple(T("a", "b", "c"))), T("a", "b", "c"));
}

TEST(TripleOfArc, Examples) {
  EXPECT_EQ(triple_of_arc(A("a,b", "a,c", "b,c")), T("a", "b", "c"));
  EXPECT_EQ(kind_of([] { triple_of_arc(A("a,b", "a,c", "b,d")); }), ErrorKind::MalformedArc);
  EXPECT_EQ(triple_of_arc(A("a,d", "a,c", "c,d")), T("a", "d", "c"));
  EXPECT_EQ(kind_of([] { triple_of_arc(A("a,e", "a,c", "c,d")); }), ErrorKind::MalformedArc);
  EXPECT_EQ(kind_of([] { triple_of_arc(A("u", "a,c", "c,d")); }), ErrorKind::MalformedArc);
}

TEST(ArcOfTriple, RoundTripRandom) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> pick(0, 25);
  for (int i = 0; i < 2000; ++i) {
    const int p = pick(rng), q = pick(rng), o = pick(rng);
    if (p == q || p == o || q == o) continue;
    const auto t = make_triple(std::string(1, 'a' + p), std::string(1, 'a' + q), std::string(1, 'a' + o));
    const auto a = arc_of_triple(t);
    EXPECT_EQ(triple_of_arc(a), t);
    EXPECT_EQ(arc_of_triple(triple_of_arc(a)), a);
  }
}

TEST(HypergraphText, RoundTrip) {
  const auto h = graph({A("u", "v", "s"), A("v", "w", "x"), A("a,b", "a,c", "b,c")});
  auto h2 = h;
  h2.add_node(N("lonely"));
  for (const auto& g : {h, h2}) EXPECT_EQ(parse_hypergraph(format_hypergraph(g)), g);
  EXPECT_EQ(parse_hypergraph("# c\n\nu -> v s\n"), graph({A("u", "v", "s")}));
  EXPECT_EQ(kind_of([] { parse_hypergraph("u -> v\n"); }), ErrorKind::ParseError);
}

TEST(HypergraphOfTriples, OneArcPerTriple) {
  const TripleSet r{T("a", "b", "c"), T("b", "c", "d")};
  const auto h = hypergraph_of_triples(r);
  EXPECT_EQ(h.arcs().size(), 2u);
  EXPECT_EQ(h.nodes().size(), 5u);  // ab ac bc bd cd
  std::vector<Hyperarc> arcs(h.arcs().begin(), h.arcs().end());
  EXPECT_EQ(triples_of_arcs(arcs), r);
}

TEST(Dot, MarksJunctionsAndHighlights) {
  const auto h = graph({A("u", "v", "s")});
  const auto dot = to_dot(h, {A("u", "v", "s")});
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("j0"), std::string::npos);
  EXPECT_NE(dot.find("penwidth"), std::string::npos);
}

TEST(BConnected, Examples) {
  EXPECT_EQ(b_connected_set(graph({A("u", "v", "w")}), N("u")),
            (std::set<HNode>{N("u"), N("v"), N("w")}));
  EXPECT_EQ(b_connected_set(graph({A("u", "v", "s1"), A("v", "w", "s2")}), N("u")),
            (std::set<HNode>{N("u"), N("v"), N("s1"), N("w"), N("s2")}));
  Hypergraph h;
  h.add_node(N("u"));
  EXPECT_EQ(b_connected_set(h, N("u")), (std::set<HNode>{N("u")}));
  EXPECT_EQ(kind_of([&] { b_connected_set(h, N("z")); }), ErrorKind::UnknownNode);
}

TEST(ValidatePath, Examples) {
  const auto h = graph({A("u", "v", "s"), A("v", "w", "s2"), A("v", "u", "s3"), A("w", "x", "s4")});
  EXPECT_EQ(validate_path(h, {A("u", "v", "s"), A("v", "w", "s2")}), PathKind::AcyclicPath);
  EXPECT_EQ(validate_path(h, {A("u", "v", "s"), A("v", "u", "s3")}), PathKind::CyclicPath);
  EXPECT_EQ(validate_path(h, {A("u", "v", "s"), A("w", "x", "s4")}), PathKind::NotAPath);
  EXPECT_EQ(validate_path(h, {A("u", "v", "s"), A("u", "v", "s")}), PathKind::NotAPath);
  EXPECT_EQ(kind_of([&] { validate_path(h, {A("u", "v", "q")}); }), ErrorKind::ArcNotInGraph);
}

TEST(FindAcyclicPath, Examples) {
  auto h = graph({A("u", "v", "s"), A("v", "w", "s2")});
  auto s = find_acyclic_path(h, N("u"), N("w"));
  ASSERT_EQ(s.status, SearchStatus::Found);
  EXPECT_EQ(s.path->length(), 2u);

  h = graph({A("u", "v", "s"), A("v", "w", "x"), A("w", "d", "u")});
  EXPECT_EQ(find_acyclic_path(h, N("u"), N("d")).status, SearchStatus::NotFound);
  EXPECT_FALSE(oracle::enumerate_paths(h.arcs(), N("u"), N("d")).acyclic);
  EXPECT_TRUE(oracle::enumerate_paths(h.arcs(), N("u"), N("d")).simple);

  s = find_acyclic_path(h, N("u"), N("u"));
  ASSERT_EQ(s.status, SearchStatus::Found);
  EXPECT_EQ(s.path->length(), 0u);
  EXPECT_EQ(kind_of([&] { find_acyclic_path(h, N("u"), N("zz")); }), ErrorKind::UnknownNode);
}

TEST(FindAcyclicPath, BudgetGivesExhausted) {
  std::mt19937 rng(2);
  const auto arcs = oracle::random_arcs(rng, 8, 20);
  Hypergraph h;
  for (const auto& a : arcs) h.add_arc(a);
  const auto from = arcs.begin()->tail();
  Hypergraph with_target = h;
  with_target.add_node(N("nowhere"));
  const auto s = find_acyclic_path(with_target, from, N("nowhere"), {3});
  EXPECT_EQ(s.status, SearchStatus::Exhausted);
  EXPECT_FALSE(s.path);
}

TEST(MinAcyclicPath, Examples) {
  auto h = graph({A("u", "v", "s"), A("u", "m", "s2"), A("m", "v", "s3")});
  auto s = min_acyclic_path(h, N("u"), N("v"));
  ASSERT_EQ(s.status, SearchStatus::Found);
  EXPECT_EQ(s.path->arcs, (std::vector<Hyperarc>{A("u", "v", "s")}));

  h = graph({A("u", "v", "s")});
  h.add_node(N("z"));
  EXPECT_EQ(min_acyclic_path(h, N("u"), N("z")).status, SearchStatus::NotFound);

  h = graph({A("u", "v", "s"), A("v", "w", "x"), A("w", "d", "u")});
  EXPECT_EQ(min_acyclic_path(h, N("u"), N("d")).status, SearchStatus::NotFound);
}

TEST(MinAcyclicPath, TiesGoToLexicographicallyFirst) {
  const auto h = graph({A("u", "b", "s1"), A("u", "a", "s2"), A("a", "v", "s3"), A("b", "v", "s4")});
  const auto s = min_acyclic_path(h, N("u"), N("v"));
  ASSERT_EQ(s.status, SearchStatus::Found);
  EXPECT_EQ(s.path->arcs, (std::vector<Hyperarc>{A("u", "a", "s2"), A("a", "v", "s3")}));
}

TEST(Paths, AgreeWithExhaustiveEnumeration) {
  std::mt19937 rng(17);
  for (int i = 0; i < 150; ++i) {
    const auto arcs = oracle::random_arcs(rng, 7, 1 + i % 12);
    Hypergraph h;
    for (const auto& a : arcs) h.add_arc(a);
    const std::vector<HNode> nodes(h.nodes().begin(), h.nodes().end());
    const auto& from = nodes[i % nodes.size()];
    const auto reach = b_connected_set(h, from);
    EXPECT_EQ(reach, oracle::digraph_reachable(arcs, from));
    for (const auto& to : nodes) {
      const auto census = oracle::enumerate_paths(arcs, from, to);
      EXPECT_EQ(reach.count(to) > 0, census.simple);
      const auto found = find_acyclic_path(h, from, to);
      EXPECT_EQ(found.status == SearchStatus::Found, census.acyclic);
      if (found.path) {
        if (found.path->length() > 0) {
          EXPECT_EQ(validate_path(h, found.path->arcs), PathKind::AcyclicPath);
        }
        std::set<HNode> tails;
        for (const auto& a : found.path->arcs) tails.insert(a.tail());
        EXPECT_EQ(tails.size(), found.path->length());
      }
      const auto best = min_acyclic_path(h, from, to);
      if (census.acyclic) {
        ASSERT_EQ(best.status, SearchStatus::Found);
        EXPECT_EQ(best.path->length(), census.min_acyclic);
      } else {
        EXPECT_EQ(best.status, SearchStatus::NotFound);
      }
    }
  }
}

TEST(IsCyclicArcset, Examples) {
  EXPECT_TRUE(is_cyclic_arcset({A("u", "v", "s"), A("v", "u", "s2")}));
  EXPECT_FALSE(is_cyclic_arcset({A("u", "v", "s"), A("v", "w", "s2")}));
  EXPECT_TRUE(is_cyclic_arcset({A("q", "r", "t"), A("x", "y", "s"), A("y", "x", "s2")}));
  EXPECT_FALSE(is_cyclic_arcset({}));
}

TEST(IsCyclicArcset, AgreesWithPathEnumeration) {
  std::mt19937 rng(29);
  for (int i = 0; i < 200; ++i) {
    const auto arcs = oracle::random_arcs(rng, 7, 1 + i % 9);
    EXPECT_EQ(is_cyclic_arcset(arcs), oracle::any_cycle(arcs));
  }
}

TEST(Rational, ParsesExactly) {
  const auto a = Rational::parse("0.05");
  EXPECT_EQ(a.num, 1u);
  EXPECT_EQ(a.den, 20u);
  const auto b = Rational::parse("2/8");
  EXPECT_EQ(b.num, 1u);
  EXPECT_EQ(b.den, 4u);
  EXPECT_EQ(Rational::parse("3").num, 3u);
  EXPECT_THROW(Rational::parse("0"), Error);
  EXPECT_THROW(Rational::parse("a/b"), Error);
  EXPECT_THROW(Rational::parse("1/0"), Error);
}

TEST(Amplify, ExponentAndLength) {
  EXPECT_EQ(amplification_exponent(Rational::parse("1/2")), 3u);
  EXPECT_EQ(dummy_path_length(4, Rational::parse("1/2")), 64u);
  EXPECT_EQ(amplification_exponent(Rational::parse("0.2")), 6u);
  EXPECT_EQ(amplification_exponent(Rational::parse("0.24")), 6u);
  EXPECT_EQ(amplification_exponent(Rational::parse("0.1")), 11u);
  EXPECT_EQ(amplification_exponent(Rational::parse("0.05")), 21u);
  EXPECT_EQ(dummy_path_length(12, Rational::parse("0.05")), 0u);  // overflows 64 bits
}

TEST(Amplify, BuildsDummyPath) {
  // eps = 1/2 is outside (0, 1/4), so the construction is built at 0.2.
  auto h = graph({A("u", "m", "s"), A("m", "v", "t")});
  const auto amp = amplify(h, N("u"), N("v"), Rational::parse("0.2"));
  EXPECT_EQ(amp.dummy_length, 15625u);  // 5^6
  EXPECT_EQ(amp.non_sink_nodes, 5u + 15625u - 1u);
  EXPECT_EQ(amp.total_nodes, 5u + 15625u - 1u + 15625u);
  EXPECT_EQ(amp.graph.arcs().size(), 2u + 15625u);
  const auto best = min_acyclic_path(amp.graph, N("u"), N("v"));
  ASSERT_EQ(best.status, SearchStatus::Found);
  EXPECT_EQ(best.path->length(), 2u);
}

TEST(Amplify, DummyPathIsTheOnlyRouteWhenNoneExists) {
  Hypergraph h = graph({A("u", "a", "b")});
  h.add_node(N("v"));
  h.add_node(N("c"));
  const auto amp = amplify(h, N("u"), N("v"), Rational::parse("0.2"));  // n=5
  const auto best = min_acyclic_path(amp.graph, N("u"), N("v"));
  ASSERT_EQ(best.status, SearchStatus::Found);
  EXPECT_EQ(best.path->length(), amp.dummy_length);
  EXPECT_EQ(validate_path(amp.graph, best.path->arcs), PathKind::AcyclicPath);
}

TEST(Amplify, FreshNamesAvoidClashes) {
  auto h = graph({A("u", "_w1", "_s1")});
  h.add_node(N("v"));
  const auto amp = amplify(h, N("u"), N("v"), Rational::parse("0.2"));
  EXPECT_TRUE(amp.graph.has_node(N("__w1")));
}

TEST(Amplify, Errors) {
  auto h = graph({A("u", "v", "s")});
  EXPECT_EQ(kind_of([&] { amplify(h, N("u"), N("v"), Rational::parse("0.25")); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([&] { amplify(h, N("u"), N("v"), Rational::parse("0.2"), 100); }),
            ErrorKind::BudgetExceeded);
  EXPECT_EQ(kind_of([&] { amplify(h, N("u"), N("zz"), Rational::parse("0.2")); }), ErrorKind::UnknownNode);
}

TEST(Amplify, BoundsSeparate) {
  for (std::uint64_t n = 4; n <= 12; ++n) {
    for (auto e : {"0.05", "0.1", "0.2", "0.24"}) {
      const auto eps = Rational::parse(e);
      const auto b = amplification_bounds(n, eps);
      EXPECT_TRUE(b.separated()) << n << ' ' << e;
      EXPECT_NEAR(static_cast<double>(b.log_dummy_length),
                  static_cast<double>(b.exponent) * std::log(static_cast<double>(n)), 1e-9);
    }
  }
}
