#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "tripent/consistency.hpp"
#include "tripent/error.hpp"
#include "tripent/subsets.hpp"

using namespace tripent;

namespace {

RootedTriple T(const char* p, const char* q, const char* o) { return make_triple(p, q, o); }

std::vector<TripleSet> sorted(std::vector<TripleSet> v) {
  std::sort(v.begin(), v.end(), [](const TripleSet& a, const TripleSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return v;
}

}  // namespace

TEST(MaximalSubsets, Examples) {
  EXPECT_EQ(sorted(maximal_consistent_subsets({T("a", "b", "c"), T("a", "c", "b")})),
            sorted({TripleSet{T("a", "b", "c")}, TripleSet{T("a", "c", "b")}}));
  EXPECT_EQ(maximal_consistent_subsets({T("a", "b", "c"), T("b", "c", "d")}),
            (std::vector<TripleSet>{{T("a", "b", "c"), T("b", "c", "d")}}));
  EXPECT_EQ(maximal_consistent_subsets({}), (std::vector<TripleSet>{TripleSet{}}));
}

TEST(MaximalSubsets, MatchesPowersetOracle) {
  std::mt19937 rng(21);
  for (int i = 0; i < 60; ++i) {
    const auto r = oracle::random_triples(rng, 4, 2 + i % 8);
    EXPECT_EQ(sorted(maximal_consistent_subsets(r)), sorted(oracle::maximal_subsets(r))) << r;
  }
}

TEST(MaximalSubsets, Guard) {
  std::mt19937 rng(1);
  const auto r = oracle::random_triples(rng, 7, 25);
  try {
    maximal_consistent_subsets(r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SetTooLarge);
    EXPECT_TRUE(is_resource_guard(e.kind()));
  }
  EXPECT_NO_THROW(maximal_consistent_subsets(oracle::random_triples(rng, 4, 10), {26}));
}

TEST(EntailsInconsistent, Examples) {
  const TripleSet r{T("a", "b", "c"), T("a", "c", "b")};
  auto a = entails_inconsistent(r, T("a", "b", "c"));
  EXPECT_TRUE(a.entailed);
  ASSERT_TRUE(a.witness);
  EXPECT_EQ(*a.witness, (TripleSet{T("a", "b", "c")}));

  a = entails_inconsistent(r, T("b", "c", "a"));
  EXPECT_FALSE(a.entailed);
  EXPECT_FALSE(a.witness);
  EXPECT_FALSE(oracle::entails_some_subset(r, T("b", "c", "a")));

  const TripleSet r3{T("a", "b", "c"), T("b", "c", "d"), T("b", "d", "c")};
  a = entails_inconsistent(r3, T("a", "b", "d"));
  EXPECT_TRUE(a.entailed);
  ASSERT_TRUE(a.witness);
  EXPECT_TRUE((TripleSet{T("a", "b", "c"), T("b", "c", "d")}).is_subset_of(*a.witness));
  EXPECT_TRUE(oracle::consistent(*a.witness));
  EXPECT_TRUE(oracle::entails(*a.witness, T("a", "b", "d")));
}

TEST(EntailsInconsistent, MatchesPowersetOracle) {
  std::mt19937 rng(33);
  std::vector<std::string> names{"a", "b", "c", "d"};
  const auto cands = oracle::all_triples(names);
  for (int i = 0; i < 25; ++i) {
    const auto r = oracle::random_triples(rng, 4, 3 + i % 6);
    for (std::size_t k = 0; k < cands.size(); k += 3) {
      const auto a = entails_inconsistent(r, cands[k]);
      EXPECT_EQ(a.entailed, oracle::entails_some_subset(r, cands[k])) << r << to_string(cands[k]);
      if (a.witness) {
        EXPECT_TRUE(a.witness->is_subset_of(r));
        EXPECT_TRUE(oracle::consistent(*a.witness));
      }
    }
  }
}

TEST(ClosureInconsistent, Examples) {
  EXPECT_EQ(closure_inconsistent({T("a", "b", "c"), T("a", "c", "b")}),
            (TripleSet{T("a", "b", "c"), T("a", "c", "b")}));
  EXPECT_EQ(closure_inconsistent({T("a", "b", "c"), T("b", "c", "d")}),
            (TripleSet{T("a", "b", "c"), T("b", "c", "d"), T("a", "b", "d"), T("a", "c", "d")}));
  EXPECT_TRUE(closure_inconsistent({}).empty());
}

TEST(ClosureInconsistent, ContainsInputAndIsUnionOfSubsetClosures) {
  std::mt19937 rng(44);
  for (int i = 0; i < 40; ++i) {
    const auto r = oracle::random_triples(rng, 5, 2 + i % 7);
    const auto c = closure_inconsistent(r);
    EXPECT_TRUE(r.is_subset_of(c)) << r;
    TripleSet expect;
    for (const auto& sub : oracle::maximal_subsets(r)) expect = expect.united(oracle::closure(sub));
    EXPECT_EQ(c, expect) << r;
  }
}
