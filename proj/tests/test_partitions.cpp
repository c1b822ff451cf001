#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "utn/partitions.hpp"

using namespace utn;

namespace {

// Independent Catalan numbers by the convolution recurrence.
std::vector<long long> catalan_upto(int n) {
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  for (int m = 0; m < n; ++m) {
    long long s = 0;
    for (int i = 0; i <= m; ++i) s += c[i] * c[m - i];
    c[m + 1] = s;
  }
  return c;
}

// Definition-level oracle for upper_set: scan all of [[n]].
std::vector<Edge> upper_set_brute(int n, const std::vector<Edge>& base,
                                  int level) {
  std::vector<Edge> out;
  for (Edge f : all_edges(n)) {
    for (Edge e : base) {
      if (leq(e, f) && height(f) >= height(e) + level) {
        out.push_back(f);
        break;
      }
    }
  }
  return out;
}

std::set<std::vector<Edge>> as_set(const std::vector<std::vector<Edge>>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("edge indexing and the three partial orders") {
  CHECK(edge_count(4) == 6);
  CHECK(all_edges(3) == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
  for (int n : {2, 3, 5, 7}) {
    auto edges = all_edges(n);
    CHECK(static_cast<int>(edges.size()) == edge_count(n));
    for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
      CHECK(edge_index(n, edges[k]) == k);
      CHECK(edge_at(n, k) == edges[k]);
    }
  }
  CHECK(height(Edge{2, 6}) == 4);
  CHECK(leq(Edge{2, 3}, Edge{1, 4}));   // (2,3) inside (1,4)
  CHECK(!leq(Edge{1, 4}, Edge{2, 3}));
  CHECK(leq_left(Edge{2, 4}, Edge{1, 4}));
  CHECK(!leq_left(Edge{2, 4}, Edge{1, 3}));
  CHECK(leq_right(Edge{2, 4}, Edge{2, 5}));
  CHECK(comparable(Edge{1, 3}, Edge{1, 3}));
  CHECK(!comparable(Edge{1, 3}, Edge{2, 4}));
}

TEST_CASE("set partition and nonnesting recognition") {
  CHECK(is_set_partition(4, {{1, 2}, {2, 3}}));
  CHECK(is_set_partition(4, {}));
  CHECK(!is_set_partition(4, {{1, 2}, {1, 3}}));  // repeated left endpoint
  CHECK(!is_set_partition(4, {{1, 3}, {2, 3}}));  // repeated right endpoint
  CHECK(!is_set_partition(4, {{1, 2}, {1, 2}}));  // duplicate arc

  CHECK(is_nonnesting(4, {{1, 3}, {2, 4}}));   // crossing is fine
  CHECK(!is_nonnesting(4, {{1, 4}, {2, 3}}));  // nesting
  CHECK(is_nonnesting(3, {{1, 2}, {2, 3}}));
  CHECK(is_nonnesting(6, {{1, 2}, {3, 5}, {4, 6}}));
}

TEST_CASE("blocks generated by arcs") {
  auto blocks = partition_blocks(8, {{1, 2}, {2, 4}, {3, 5}, {5, 6}, {7, 8}});
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0] == std::vector<int>{1, 2, 4});
  CHECK(blocks[1] == std::vector<int>{3, 5, 6});
  CHECK(blocks[2] == std::vector<int>{7, 8});
  CHECK(partition_blocks(3, {}).empty());
}

TEST_CASE("upper sets at each level") {
  std::vector<Edge> lam = {{1, 2}, {3, 5}, {4, 6}};
  CHECK(upper_set(6, lam, 0) ==
        std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                          {2, 5}, {2, 6}, {3, 5}, {3, 6}, {4, 6}});
  CHECK(upper_set(6, lam, 1) ==
        std::vector<Edge>{{1, 3}, {1, 4}, {1, 5}, {1, 6},
                          {2, 5}, {2, 6}, {3, 6}});
  CHECK(upper_set(3, {}, 0).empty());

  // Against the definition for random bases.
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    std::vector<Edge> base;
    for (Edge e : all_edges(n))
      if (rng() % 3 == 0) base.push_back(e);
    for (int level = 0; level <= 2; ++level)
      CHECK(upper_set(n, base, level) == upper_set_brute(n, base, level));
  }
}

TEST_CASE("minimal elements of an upward-closed family") {
  CHECK(min_elements(3, all_edges(3)) == std::vector<Edge>{{1, 2}, {2, 3}});
  std::vector<Edge> lam = {{1, 2}, {3, 5}, {4, 6}};
  CHECK(min_elements(6, upper_set(6, lam, 0)) == lam);
  CHECK(min_elements(4, {}).empty());
  // Not upward closed: missing (1,3) above (2,3).
  CHECK_THROWS_AS(min_elements(3, std::vector<Edge>{{2, 3}}),
                  ValidationError);
}

TEST_CASE("round trips between generators and upper sets") {
  std::mt19937_64 rng(29);
  for (int n = 1; n <= 7; ++n) {
    // min_elements(upper_set(lambda)) = lambda for every nonnesting lambda:
    // NNSPs are antichains, so every arc is recovered.
    for (const auto& lam : all_nnsp(n))
      CHECK(min_elements(n, upper_set(n, lam, 0)) == lam);
    // upper_set(min_elements(F)) = F for upward-closed F.
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Edge> base;
      for (Edge e : all_edges(n))
        if (rng() % 3 == 0) base.push_back(e);
      auto F = upper_set(n, base, 0);
      CHECK(upper_set(n, min_elements(n, F), 0) == F);
    }
  }
}

TEST_CASE("nonnesting set partitions are counted by Catalan numbers") {
  auto cat = catalan_upto(8);
  for (int n = 1; n <= 8; ++n) {
    long long count = 0;
    enumerate_nnsp(n, [&](const std::vector<Edge>&) { ++count; });
    CHECK(count == cat[n]);
  }
}

TEST_CASE("the five nonnesting set partitions of three points") {
  auto got = all_nnsp(3);
  REQUIRE(got.size() == 5);
  CHECK(got.front().empty());  // empty partition first
  std::set<std::vector<Edge>> expected = {
      {},
      {{1, 2}},
      {{1, 3}},
      {{2, 3}},
      {{1, 2}, {2, 3}},
  };
  CHECK(as_set(got) == expected);
}

TEST_CASE("enumerated partitions are valid, distinct, and exhaustive") {
  for (int n = 1; n <= 6; ++n) {
    auto got = all_nnsp(n);
    std::set<std::vector<Edge>> seen;
    for (const auto& lam : got) {
      CHECK(is_nonnesting(n, lam));
      CHECK(std::is_sorted(lam.begin(), lam.end()));
      CHECK(seen.insert(lam).second);
    }
    // Exhaustive cross-check by filtering all arc subsets (n small).
    if (n <= 5) {
      long long brute = 0;
      auto edges = all_edges(n);
      for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
        std::vector<Edge> sub;
        for (size_t k = 0; k < edges.size(); ++k)
          if (mask >> k & 1) sub.push_back(edges[k]);
        if (is_nonnesting(n, sub)) ++brute;
      }
      CHECK(brute == static_cast<long long>(got.size()));
    }
  }
}
