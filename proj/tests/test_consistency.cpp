#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tripent/consistency.hpp"
#include "tripent/error.hpp"
#include "tripent/oracle.hpp"
#include "tripent/tree.hpp"

using namespace tripent;

namespace {

RootedTriple T(const char* p, const char* q, const char* o) { return make_triple(p, q, o); }

LeafSet leaves(std::initializer_list<const char*> names) {
  LeafSet out;
  for (auto n : names) out.insert(Leaf(n));
  return out;
}

}  // namespace

TEST(Ahograph, Examples) {
  const TripleSet r{T("a", "b", "c"), T("b", "c", "d")};
  auto g = ahograph(r, leaves({"a", "b", "c", "d"}));
  ASSERT_EQ(g.edges.size(), 2u);
  EXPECT_EQ(g.nodes.size(), 4u);
  EXPECT_EQ(g.edges[0], (Ahograph::Edge{Leaf("a"), Leaf("b"), Leaf("c")}));
  EXPECT_EQ(g.edges[1], (Ahograph::Edge{Leaf("b"), Leaf("c"), Leaf("d")}));

  g = ahograph(r, leaves({"a", "b", "c"}));
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(g.edges[0].label, Leaf("c"));

  g = ahograph({}, leaves({"a"}));
  EXPECT_TRUE(g.edges.empty());
  EXPECT_EQ(g.components().size(), 1u);
}

TEST(Build, Examples) {
  auto res = build({T("a", "b", "c")}, leaves({"a", "b", "c"}));
  ASSERT_TRUE(std::holds_alternative<Consistent>(res));
  EXPECT_EQ(std::get<Consistent>(res).tree.to_newick(), "((a,b),c);");

  res = build({T("a", "b", "c"), T("b", "c", "a")}, leaves({"a", "b", "c"}));
  ASSERT_TRUE(std::holds_alternative<Inconsistent>(res));
  EXPECT_EQ(std::get<Inconsistent>(res).witness, leaves({"a", "b", "c"}));
  EXPECT_FALSE(oracle::consistent({T("a", "b", "c"), T("b", "c", "a")}));

  res = build({}, leaves({"a", "b", "c"}));
  ASSERT_TRUE(std::holds_alternative<Consistent>(res));
  EXPECT_EQ(std::get<Consistent>(res).tree.to_newick(), "(a,b,c);");

  EXPECT_THROW(build({}, {}), Error);
}

TEST(Build, ChildrenOrderedBySmallestLeaf) {
  const TripleSet r{T("d", "e", "a"), T("b", "c", "a")};
  const auto res = build(r, r.leaves());
  EXPECT_EQ(std::get<Consistent>(res).tree.to_newick(), "(a,(b,c),(d,e));");
}

TEST(Build, TreeDisplaysInputAndIsDeterministic) {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto r = oracle::random_triples(rng, 6, 1 + i % 6);
    const auto a = build(r, r.leaves());
    const auto b = build(r, r.leaves());
    ASSERT_EQ(a.index(), b.index());
    if (const auto* c = std::get_if<Consistent>(&a)) {
      EXPECT_EQ(c->tree, std::get<Consistent>(b).tree);
      for (const auto& t : r) EXPECT_TRUE(displays(c->tree, t)) << to_string(t);
    }
  }
}

TEST(IsConsistent, Examples) {
  EXPECT_TRUE(is_consistent({T("a", "b", "c")}));
  EXPECT_FALSE(is_consistent({T("a", "b", "c"), T("a", "c", "b")}));
  EXPECT_TRUE(is_consistent({T("a", "b", "c"), T("b", "c", "d")}));
  EXPECT_TRUE(is_consistent({}));
}

TEST(IsConsistent, AgreesWithClusterOracle) {
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto r = oracle::random_triples(rng, 5, 1 + i % 8);
    EXPECT_EQ(is_consistent(r), oracle::consistent(r)) << r;
    EXPECT_EQ(is_consistent(r), displayable_by_enumeration(r)) << r;
  }
}

TEST(EntailsConsistent, Examples) {
  const TripleSet r{T("a", "b", "c"), T("b", "c", "d")};
  EXPECT_TRUE(entails_consistent(r, T("a", "b", "d")));
  EXPECT_TRUE(oracle::entails(r, T("a", "b", "d")));
  EXPECT_FALSE(entails_consistent({T("a", "b", "c")}, T("a", "b", "d")));
  EXPECT_TRUE(displays(parse_newick("(((a,d),b),c);"), T("a", "b", "c")));
  EXPECT_FALSE(displays(parse_newick("(((a,d),b),c);"), T("a", "b", "d")));
  EXPECT_TRUE(entails_consistent({T("a", "b", "c")}, T("a", "b", "c")));
}

TEST(EntailsConsistent, RejectsInconsistentInput) {
  try {
    entails_consistent({T("a", "b", "c"), T("a", "c", "b")}, T("a", "b", "c"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InconsistentInput);
  }
}

TEST(EntailsConsistent, ForeignLeafOnlyWhenMember) {
  const TripleSet r{T("a", "b", "c"), T("b", "c", "d")};
  EXPECT_FALSE(entails_consistent(r, T("a", "b", "z")));
  EXPECT_FALSE(oracle::entails(r, T("a", "b", "z")));
}

TEST(ClosureConsistent, Examples) {
  EXPECT_EQ(closure_consistent({T("a", "b", "c"), T("b", "c", "d")}),
            (TripleSet{T("a", "b", "c"), T("b", "c", "d"), T("a", "b", "d"), T("a", "c", "d")}));
  EXPECT_EQ(closure_consistent({T("a", "b", "c")}), (TripleSet{T("a", "b", "c")}));
  EXPECT_TRUE(closure_consistent({}).empty());
}

TEST(ClosureOracle, Examples) {
  EXPECT_EQ(closure_oracle({T("a", "b", "c"), T("b", "c", "d")}),
            (TripleSet{T("a", "b", "c"), T("a", "b", "d"), T("a", "c", "d"), T("b", "c", "d")}));
  EXPECT_EQ(closure_oracle({T("a", "b", "c")}), (TripleSet{T("a", "b", "c")}));
  EXPECT_TRUE(closure_oracle({}, leaves({"a", "b", "c"})).empty());
  EXPECT_THROW(closure_oracle({T("a", "b", "c"), T("a", "c", "b")}), Error);
}

TEST(ClosureConsistent, MatchesBothOracles) {
  std::mt19937 rng(5);
  int checked = 0;
  while (checked < 150) {
    const auto r = oracle::random_triples(rng, 5, 1 + checked % 6);
    if (!is_consistent(r)) continue;
    ++checked;
    const auto c = closure_consistent(r);
    EXPECT_EQ(c, closure_oracle(r)) << r;
    EXPECT_EQ(c, oracle::closure(r)) << r;
    EXPECT_TRUE(r.is_subset_of(c));
  }
}

TEST(ClosureConsistent, Monotone) {
  std::mt19937 rng(9);
  int checked = 0;
  while (checked < 100) {
    const auto big = oracle::random_triples(rng, 6, 2 + checked % 5);
    if (!is_consistent(big)) continue;
    ++checked;
    TripleSet small;
    std::bernoulli_distribution keep(0.5);
    for (const auto& t : big) {
      if (keep(rng)) small.insert(t);
    }
    EXPECT_TRUE(closure_consistent(small).is_subset_of(closure_consistent(big))) << small << big;
  }
}

TEST(Dyadic, Examples) {
  EXPECT_EQ(dyadic_apply(T("a", "b", "c"), T("b", "d", "c")), (TripleSet{T("a", "d", "c")}));
  EXPECT_EQ(dyadic_apply(T("a", "b", "c"), T("b", "c", "d")),
            (TripleSet{T("a", "b", "d"), T("a", "c", "d")}));
  EXPECT_TRUE(dyadic_apply(T("a", "b", "c"), T("d", "e", "f")).empty());
}

TEST(Dyadic, RuleThree) {
  // {pp'|o, oo'|p} gives {pp'|o', oo'|p'}
  EXPECT_EQ(dyadic_apply(T("a", "b", "c"), T("c", "d", "a")),
            (TripleSet{T("a", "b", "d"), T("c", "d", "b")}));
}

TEST(Dyadic, OrderIndependent) {
  std::vector<std::string> names{"a", "b", "c", "d", "e"};
  const auto all = oracle::all_triples(names);
  for (const auto& t1 : all) {
    for (const auto& t2 : all) EXPECT_EQ(dyadic_apply(t1, t2), dyadic_apply(t2, t1));
  }
}

TEST(Dyadic, SoundOnEveryConsistentPair) {
  std::vector<std::string> names{"a", "b", "c", "d", "e"};
  const auto all = oracle::all_triples(names);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const TripleSet pair{all[i], all[j]};
      if (!is_consistent(pair)) continue;
      const auto out = dyadic_apply(all[i], all[j]);
      if (out.empty()) continue;
      EXPECT_TRUE(out.is_subset_of(oracle::closure(pair))) << pair;
    }
  }
}
