#include <doctest.h>

#include <random>

#include "heisenspec/assignment.hpp"
#include "heisenspec/errors.hpp"
#include "../oracles.hpp"

using namespace heisenspec;

namespace {

CostMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  CostMatrix c(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t s = 0; s < rows.size(); ++s)
      c(r, s) = rows[r][s] >= oracle::kInf ? ExtendedInt::infinity() : ExtendedInt(static_cast<std::uint64_t>(rows[r][s]));
  return c;
}

ExtendedInt expected(long long v) {
  return v >= oracle::kInf ? ExtendedInt::infinity() : ExtendedInt(static_cast<std::uint64_t>(v));
}

constexpr long long X = oracle::kInf;

}  // namespace

TEST_CASE("min assignment on small matrices") {
  const auto a = min_assignment(from_rows({{1, 2}, {2, 4}}));
  CHECK(a.value == 4);
  CHECK(a.permutation == std::vector<std::size_t>{1, 0});
  CHECK(min_assignment(from_rows({{0, 5}, {5, 0}})).value == 0);
  const auto forced = min_assignment(from_rows({{X, 1}, {1, X}}));
  CHECK(forced.value == 2);
  CHECK(forced.permutation == std::vector<std::size_t>{1, 0});
  const auto none = min_assignment(from_rows({{X, X}, {1, 1}}));
  CHECK(none.value.is_infinite());
  CHECK(none.permutation.empty());
  CHECK(min_assignment(CostMatrix(0)).value == 0);
}

TEST_CASE("ties resolve to the lexicographically smallest permutation") {
  const auto a = min_assignment(from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
  CHECK(a.permutation == std::vector<std::size_t>{0, 1, 2});
  const auto b = min_assignment(from_rows({{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}));
  CHECK(b.value == 3);
  CHECK(b.permutation == std::vector<std::size_t>{1, 2, 0});
}

TEST_CASE("min assignment agrees with brute force") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> entry(0, 9);
  std::uniform_real_distribution<double> unit;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t a = 1 + trial % 6;
    const double blocked = (trial % 3) * 0.3;
    std::vector<std::vector<long long>> rows(a, std::vector<long long>(a));
    for (auto& row : rows)
      for (auto& x : row) x = unit(rng) < blocked ? X : entry(rng);
    const auto result = min_assignment(from_rows(rows));
    const long long want = oracle::brute_force_assignment(rows);
    CHECK(result.value == expected(want));
    CHECK(min_assignment_value(from_rows(rows)) == expected(want));
    if (result.value.is_finite()) {
      REQUIRE(result.permutation.size() == a);
      long long total = 0;
      for (std::size_t r = 0; r < a; ++r) total += rows[r][result.permutation[r]];
      CHECK(total == want);
    }
  }
}

TEST_CASE("cost matrix shape is checked") {
  CHECK_THROWS_AS(CostMatrix(2, std::vector<ExtendedInt>(3)), ValidationError);
}

TEST_CASE("kset distance examples") {
  const Graph p3 = generators::path(3);
  const auto d = all_pairs_distances(p3);
  CHECK(kset_distance({0, 1}, {1, 2}, d) == 2);
  CHECK(kset_distance({0, 1}, {0, 1}, d) == 0);
  const auto split = all_pairs_distances(Graph(4, {{0, 1}, {2, 3}}));
  CHECK(kset_distance({0}, {2}, split).is_infinite());
  CHECK_THROWS_AS(kset_distance({0}, {0, 1}, d), ValidationError);
}

TEST_CASE("kset distance against token graph BFS") {
  // Records whether the assignment value equals the BFS distance, and that
  // it never exceeds it.
  std::mt19937_64 rng(103);
  std::size_t compared = 0, equal = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 3 + trial % 5;
    const Graph g = oracle::random_graph(n, 0.4, rng);
    const auto d = all_pairs_distances(g);
    for (std::size_t k = 1; k <= n / 2 + 1 && k <= n; ++k) {
      const auto sets = enumerate_ksets(n, k);
      for (const KSet& x : sets)
        for (const KSet& y : sets) {
          const ExtendedInt got = kset_distance(x, y, d);
          const long long bfs = oracle::token_distance(g, oracle::mask_of({x.begin(), x.end()}),
                                                       oracle::mask_of({y.begin(), y.end()}));
          CHECK(got <= expected(bfs));
          CHECK(got == kset_distance(y, x, d));
          ++compared;
          equal += got == expected(bfs);
        }
    }
  }
  MESSAGE("assignment value equals BFS distance on " << equal << " of " << compared << " pairs");
  CHECK(equal == compared);
}

TEST_CASE("kset distance satisfies the triangle inequality") {
  std::mt19937_64 rng(107);
  const Graph g = oracle::random_connected_graph(8, 0.3, rng);
  const auto d = all_pairs_distances(g);
  const auto sets = enumerate_ksets(8, 3);
  std::uniform_int_distribution<std::size_t> pick(0, sets.size() - 1);
  for (int i = 0; i < 300; ++i) {
    const KSet &x = sets[pick(rng)], &y = sets[pick(rng)], &z = sets[pick(rng)];
    CHECK(kset_distance(x, z, d) <= kset_distance(x, y, d) + kset_distance(y, z, d));
  }
}
