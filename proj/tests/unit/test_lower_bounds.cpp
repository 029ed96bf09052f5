#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "heisenspec/errors.hpp"
#include "heisenspec/lower_bounds.hpp"
#include "heisenspec/symmetric_product.hpp"
#include "../oracles.hpp"

using namespace heisenspec;

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("generic lower bound arithmetic") {
  const auto rec = lower_bound_lambda_graph(3, 4, 1, 3, 1, 12);
  REQUIRE(rec.applicable());
  CHECK(*rec.bound == doctest::Approx(7.545e-5).epsilon(1e-3));

  // The same value through the volume-form constant, with vol = 2m.
  const double cd = c_delta(1, 4, 3);
  const double vol = 24;
  const double via_volume = 3 * std::pow(cd, 2) * std::pow(4.0, 2 - 2.0 / 3) / (16 * std::numbers::e * 16) * 0.25 *
                            std::pow(2.0 * 4 / (18 * vol), 2.0 / 3);
  CHECK(*rec.bound == doctest::Approx(via_volume));

  CHECK(*lower_bound_lambda_graph(3, 4, 1, 3, 0, 12).bound == 0.0);
  CHECK(*lower_bound_lambda_graph(2, 2, 1, kInfinity, 1, 6).bound ==
        doctest::Approx(2.0 / (16 * std::numbers::e * 4) * (1.0)));
}

TEST_CASE("generic lower bound scales as j^(2/delta)") {
  for (double delta : {2.5, 3.0, 5.0, 10.0}) {
    const double one = *lower_bound_lambda_graph(2, 5, 1.5, delta, 3, 40).bound;
    const double two = *lower_bound_lambda_graph(2, 5, 1.5, delta, 6, 40).bound;
    CHECK(two / one == doctest::Approx(std::pow(2.0, 2 / delta)));
  }
}

TEST_CASE("generic lower bound is not applicable at small dimension or without edges") {
  for (double delta : {1.5, 2.0}) {
    const auto rec = lower_bound_lambda_graph(3, 4, 1, delta, 1, 12);
    CHECK(!rec.applicable());
    CHECK(!rec.reason.empty());
  }
  CHECK(!lower_bound_lambda_graph(0, 0, 0, 3, 1, 0).applicable());
}

TEST_CASE("c_delta examples") {
  CHECK(c_delta(2, 2, kInfinity) == doctest::Approx(1.0));
  CHECK(c_delta(1, 4, 3) == doctest::Approx(0.39685).epsilon(1e-4));
  CHECK(c_delta(1.7, 1, 3) == doctest::Approx(1.7));
  CHECK_THROWS_AS(c_delta(1, 0, 3), ValidationError);
}

TEST_CASE("token graph lower bound examples") {
  const Graph p3 = generators::path(3);
  const double a2 = family_constant(p3, 2, 3).a_k;
  CHECK(a2 == 0.0);
  const auto p3_record = lower_bound_lambda_Lk(p3, 2, 1, a2, 3, IsoFit{3, 1, true});
  CHECK(!p3_record.applicable());
  CHECK_THROWS_AS(lower_bound_lambda_Lk(p3, 3, 1, 1, 3, IsoFit{3, 1, true}), ValidationError);
  const Graph p4 = generators::path(4);
  const auto none = lower_bound_lambda_Lk(p4, 2, 1, family_constant(p4, 2, 3).a_k, 3, IsoFit{3, 1, true});
  CHECK(!none.applicable());
  CHECK(none.reason.find("a_k") != std::string::npos);

  const Graph g = generators::random_connected(8, 0.5, 3);
  CHECK(*lower_bound_lambda_Lk(g, 2, 0, 1, 3, IsoFit{3, 1, true}).bound == 0.0);
  CHECK(!lower_bound_lambda_Lk(g, 2, 1, 1, 2, IsoFit{3, 1, true}).applicable());
}

TEST_CASE("token graph lower bound composes from the generic bound") {
  // n = 8, k = 2, j = 1, delta = delta_k = 3, c = a_k = 1, beta_1 = 4.
  Graph g = generators::cycle(8);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.emplace_back(0, 4);
  edges.emplace_back(2, 6);
  g = Graph(8, edges);
  REQUIRE(degree_profile(g).max_degree == 3);
  edges.emplace_back(0, 2);
  g = Graph(8, edges);
  REQUIRE(degree_profile(g).max_degree == 4);

  const std::size_t n = 8, k = 2, j = 1;
  const double delta = 3, beta1 = 4;
  const IsoFit fit{delta, 1, true};
  for (auto source : {EdgeCountSource::DegreeBound, EdgeCountSource::Exact}) {
    const auto rec = lower_bound_lambda_Lk(g, k, j, 1, delta, fit, source);
    REQUIRE(rec.applicable());
    const double b = std::pow(2.0, 1 - 1 / delta);
    const double c = std::pow(8.0, 1 - 1 / delta) / (n - k + 1);
    const double m = source == EdgeCountSource::Exact ? static_cast<double>(g.size() * binomial(n - 2, k - 1))
                                                      : k * beta1 * binomial(n, k) / 2.0;
    const auto generic = lower_bound_lambda_graph(b, k * beta1, c, delta, j, m);
    CHECK(*rec.bound == doctest::Approx(*generic.bound).epsilon(1e-12));
    CHECK(rec.b == doctest::Approx(b));
    CHECK(rec.beta == k * beta1);
    CHECK(rec.c == doctest::Approx(c));
    CHECK(rec.edges == m);
  }
  CHECK(*lower_bound_lambda_Lk(g, k, j, 1, delta, fit, EdgeCountSource::Exact).bound >
        *lower_bound_lambda_Lk(g, k, j, 1, delta, fit, EdgeCountSource::DegreeBound).bound);
}

TEST_CASE("generic lower bound never exceeds the Laplacian spectrum") {
  std::mt19937_64 rng(401);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_connected_graph(4 + trial % 9, 0.4, rng);
    const auto s = oracle::spectrum(laplacian_matrix(g));
    const auto degrees = degree_profile(g);
    const auto profile = eip_bruteforce(g);
    for (double delta : {2.5, 3.0, 4.0, kInfinity}) {
      const IsoFit fit = iso_fit(profile, delta);
      for (std::size_t j = 0; j < s.size(); ++j) {
        const auto rec = lower_bound_lambda_graph(static_cast<double>(degrees.min_degree),
                                                  static_cast<double>(degrees.max_degree), fit.c, delta, j,
                                                  static_cast<double>(g.size()));
        REQUIRE(rec.applicable());
        CHECK(*rec.bound <= s[j] + 1e-12);
      }
    }
  }
}

TEST_CASE("token graph lower bound never exceeds the L_k spectrum") {
  std::mt19937_64 rng(409);
  std::size_t applicable = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 4 + trial % 5;
    const Graph g = oracle::random_connected_graph(n, 0.6, rng);
    const auto profile = eip_bruteforce(g);
    for (std::size_t k = 1; k < n; ++k) {
      const auto s = oracle::spectrum(oracle::token_laplacian(g, k));
      for (double delta : {2.5, 3.0, 6.0, kInfinity}) {
        const IsoFit fit = iso_fit(profile, delta);
        const double a_k = family_constant(g, k, delta).a_k;
        for (auto source : {EdgeCountSource::Exact, EdgeCountSource::DegreeBound})
          for (std::size_t j = 0; j < s.size(); ++j) {
            const auto rec = lower_bound_lambda_Lk(g, k, j, a_k, delta, fit, source);
            if (!rec.applicable()) continue;
            ++applicable;
            CHECK(*rec.bound <= s[j] + 1e-12);
          }
      }
    }
  }
  CHECK(applicable > 0);
}

TEST_CASE("sandwich examples") {
  for (const Graph& g : {generators::cycle(6), generators::complete(4)}) {
    const auto report = sandwich_check(g);
    CHECK(report.holds);
    for (std::size_t j = 0; j < report.laplacian.size(); ++j)
      CHECK(report.laplacian[j] == doctest::Approx(report.b * report.normalized[j]));
  }
  const auto star = sandwich_check(generators::star(4));
  CHECK(star.holds);
  CHECK(star.b == 1);
  CHECK(star.beta == 3);
  CHECK(star.laplacian.size() == 4);
  CHECK(star.normalized.back() == doctest::Approx(2.0));
}

TEST_CASE("sandwich holds on random graphs without isolated vertices") {
  std::mt19937_64 rng(419);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_connected_graph(3 + trial % 8, 0.4, rng);
    const auto report = sandwich_check(g);
    CHECK(report.holds);
    CHECK(!report.failing_j);
  }
}
