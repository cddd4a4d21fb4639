#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "steiner/error.hpp"
#include "steiner/random.hpp"
#include "steiner/tree.hpp"

namespace steiner {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

TEST(ParseTree, Examples) {
  const Tree path = parse_tree("3\n1 2\n2 3");
  EXPECT_EQ(path.size(), 3);
  EXPECT_EQ(path.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));

  const Tree star = parse_tree("4\n1 2\n1 3\n1 4\n");
  EXPECT_EQ(star.degree(0), 3);
  EXPECT_EQ(star.degrees(), (std::vector<int>{3, 1, 1, 1}));

  EXPECT_EQ(code_of([] { parse_tree("3\n1 2\n1 2"); }), ErrorCode::NotATree);
}

TEST(ParseTree, Errors) {
  EXPECT_EQ(code_of([] { parse_tree(""); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([] { parse_tree("x"); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([] { parse_tree("3\n1 2"); }), ErrorCode::NotATree);
  EXPECT_EQ(code_of([] { parse_tree("3\n1 2\n2 4"); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([] { parse_tree("3\n1 2 3\n2 3"); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([] { parse_tree("4\n1 2\n2 3\n3 1"); }), ErrorCode::NotATree);
  EXPECT_EQ(code_of([] { parse_tree("2\n1 1"); }), ErrorCode::NotATree);
  EXPECT_EQ(code_of([] { parse_tree("0"); }), ErrorCode::MalformedInput);
}

TEST(ParseTree, FormatRoundTrip) {
  for (int n = 1; n <= 12; ++n) {
    const Tree t = random_tree(n, 1000 + n);
    EXPECT_EQ(parse_tree(format_tree(t)).edges(), t.edges());
  }
  EXPECT_EQ(format_tree(parse_tree("1")), "1\n");
}

TEST(RandomTree, SmallCasesAndDeterminism) {
  EXPECT_TRUE(random_tree(1, 99).edges().empty());
  EXPECT_EQ(random_tree(2, 99).edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(random_tree(8, 42).edges(), random_tree(8, 42).edges());
  EXPECT_EQ(random_tree(8, 42).edges().size(), 7U);
}

// Pins the generator so a change in the PRNG or the Pruefer decoding shows
// up as a failure rather than silently shifting every seeded campaign.
TEST(RandomTree, FrozenStream) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng(), 0x6E789E6AA1B965F4ULL);
  const Tree t = random_tree(8, 42);
  EXPECT_EQ(tree_from_prufer(8, prufer_code(t)).edges(), t.edges());
}

TEST(Prufer, RoundTripAndCount) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<Edge>> seen;
    long count = 0;
    for_each_labeled_tree(n, [&](const Tree& t) {
      ++count;
      seen.insert(t.edges());
      EXPECT_EQ(tree_from_prufer(n, prufer_code(t)).edges(), t.edges());
    });
    long cayley = 1;
    for (int i = 0; i < n - 2; ++i) cayley *= n;
    EXPECT_EQ(count, cayley) << n;
    EXPECT_EQ(static_cast<long>(seen.size()), cayley) << n;
  }
}

TEST(PairwiseDistance, Examples) {
  const Tree path = path_tree(3);
  EXPECT_EQ(path.distance(0, 2), 2);
  EXPECT_EQ(path.distance(1, 1), 0);
  const Tree star = star_tree(4);
  EXPECT_EQ(star.distance(1, 2), 2);
}

TEST(PairwiseDistance, MatchesBreadthFirstSearch) {
  for (int trial = 0; trial < 30; ++trial) {
    const Tree t = random_tree(2 + trial % 15, 500 + trial);
    for (Vertex src = 0; src < t.size(); ++src) {
      std::vector<int> dist(static_cast<std::size_t>(t.size()), -1);
      std::vector<Vertex> queue{src};
      dist[src] = 0;
      for (std::size_t h = 0; h < queue.size(); ++h)
        for (Vertex w : t.neighbors(queue[h]))
          if (dist[w] < 0) {
            dist[w] = dist[queue[h]] + 1;
            queue.push_back(w);
          }
      for (Vertex v = 0; v < t.size(); ++v) ASSERT_EQ(t.distance(src, v), dist[v]);
    }
  }
}

TEST(SteinerDistance, Examples) {
  const Tree path = path_tree(3);
  const Vertex ends[] = {0, 2};
  EXPECT_EQ(path.steiner_distance(ends), 2);

  const Tree star = star_tree(4);
  const Vertex leaves[] = {1, 2, 3};
  EXPECT_EQ(star.steiner_distance(leaves), 3);
  EXPECT_EQ(steiner_distance_bruteforce(star, leaves), 3);

  const Vertex triple[] = {2, 2, 2};
  EXPECT_EQ(star.steiner_distance(triple), 0);

  for (int n = 1; n <= 10; ++n) {
    const Tree t = random_tree(n, 7 * n);
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[v] = v;
    EXPECT_EQ(t.steiner_distance(all), n - 1);
  }
}

TEST(SteinerDistance, Errors) {
  const Tree t = path_tree(3);
  EXPECT_EQ(code_of([&] { t.steiner_distance({}); }), ErrorCode::EmptySet);
  EXPECT_EQ(code_of([&] { steiner_distance_bruteforce(t, {}); }), ErrorCode::EmptySet);
  const Tree big = path_tree(13);
  const Vertex one[] = {0};
  EXPECT_EQ(code_of([&] { steiner_distance_bruteforce(big, one); }), ErrorCode::TooLarge);
}

TEST(SteinerDistance, AgreesWithBruteForce) {
  SplitMix64 rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(9));
    const Tree t = random_tree(n, rng());
    for (int q = 0; q < 40; ++q) {
      std::vector<Vertex> s(1 + rng.below(4));
      for (auto& v : s) v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
      ASSERT_EQ(t.steiner_distance(s), steiner_distance_bruteforce(t, s));
    }
  }
}

TEST(SteinerDistance, MonotoneUnderInclusion) {
  SplitMix64 rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(14));
    const Tree t = random_tree(n, rng());
    std::vector<Vertex> s{static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)))};
    int prev = t.steiner_distance(s);
    for (int step = 0; step < 6; ++step) {
      s.push_back(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n))));
      const int cur = t.steiner_distance(s);
      ASSERT_LE(prev, cur);
      prev = cur;
    }
  }
}

TEST(SteinerDistance, TripleIdentityAndPairs) {
  for (int trial = 0; trial < 25; ++trial) {
    const Tree t = random_tree(3 + trial % 10, 90 + trial);
    const int n = t.size();
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j) {
        const Vertex pair[] = {i, j};
        ASSERT_EQ(t.steiner_distance(pair), t.distance(i, j));
        for (Vertex k = j + 1; k < n; ++k) {
          if (i == j || i == k) continue;
          const Vertex triple[] = {i, j, k};
          ASSERT_EQ(2 * t.steiner_distance(triple), t.distance(i, j) + t.distance(i, k) + t.distance(j, k));
        }
      }
  }
}

}  // namespace
}  // namespace steiner
