#include <doctest.h>

#include <cmath>
#include <random>

#include "heisenspec/errors.hpp"
#include "heisenspec/isoperimetry.hpp"
#include "heisenspec/symmetric_product.hpp"
#include "../oracles.hpp"

using namespace heisenspec;

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

VertexSet set_of_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Vertex> members;
  for (Vertex v = 0; v < n; ++v)
    if ((mask >> v) & 1U) members.push_back(v);
  return VertexSet(members);
}

// rho_p(1_X) from its closed form: |X| = s of n, mean s/n.
double rho_indicator(std::size_t n, std::size_t s, double p) {
  const double mean = static_cast<double>(s) / static_cast<double>(n);
  return std::pow(static_cast<double>(s) * std::pow(1 - mean, p) + static_cast<double>(n - s) * std::pow(mean, p),
                  1 / p);
}

}  // namespace

TEST_CASE("EIP profile examples") {
  CHECK(eip_bruteforce(generators::cycle(6)).minima == std::vector<std::size_t>{2, 2, 2});
  CHECK(eip_bruteforce(generators::complete(4)).minima == std::vector<std::size_t>{3, 4});
  CHECK(eip_bruteforce(generators::star(4)).minima == std::vector<std::size_t>{1, 2});
  CHECK(eip_bruteforce(generators::path(1)).minima.empty());
}

TEST_CASE("EIP profile matches plain enumeration and ignores the thread count") {
  std::mt19937_64 rng(301);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 11;
    const Graph g = oracle::random_graph(n, 0.35, rng);
    const auto one = eip_bruteforce(g, 1);
    CHECK(one.minima == oracle::eip_profile(g));
    for (std::size_t s = 1; s <= one.minima.size(); ++s) {
      CHECK(one.witnesses[s - 1].size() == s);
      CHECK(boundary_size(g, one.witnesses[s - 1]) == one.e(s));
    }
    const auto many = eip_bruteforce(g, 3);
    CHECK(many.minima == one.minima);
    CHECK(many.witnesses == one.witnesses);
  }
}

TEST_CASE("EIP respects the vertex cap") {
  CHECK_THROWS_AS(eip_bruteforce(generators::path(25)), SizeCapError);
}

TEST_CASE("iso_fit examples") {
  const auto c6 = iso_fit(eip_bruteforce(generators::cycle(6)), kInfinity);
  CHECK(c6.c == doctest::Approx(2.0 / 3.0));
  CHECK(c6.certified);
  CHECK(iso_fit(eip_bruteforce(generators::complete(4)), kInfinity).c == doctest::Approx(2.0));
  const auto near_one = iso_fit(eip_bruteforce(generators::complete(4)), 1.0 + 1e-9);
  CHECK(near_one.c == doctest::Approx(3.0).epsilon(1e-6));
  CHECK_THROWS_AS(iso_fit(eip_bruteforce(generators::complete(4)), 1.0), ValidationError);
}

TEST_CASE("fitted constants hold on the profile") {
  std::mt19937_64 rng(307);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_graph(4 + trial % 8, 0.4, rng);
    const auto profile = eip_bruteforce(g);
    for (double delta : {1.5, 2.0, 3.0, kInfinity}) {
      IsoFit fit = iso_fit(profile, delta);
      CHECK(fit_holds(profile, fit));
      fit.c *= 1.01;
      if (fit.c > 0) CHECK(!fit_holds(profile, fit));
    }
  }
}

TEST_CASE("seminorm examples") {
  const Graph k4 = generators::complete(4);
  CHECK(sobolev_seminorm(k4, Eigen::VectorXd::Constant(4, 2.5)) == 0.0);
  CHECK(sobolev_seminorm(k4, indicator(4, {0})) == 3.0);
  Eigen::VectorXd f(3);
  f << 0, 1, 3;
  CHECK(sobolev_seminorm(generators::path(3), f) == 3.0);
}

TEST_CASE("seminorm of an indicator equals the boundary") {
  std::mt19937_64 rng(311);
  const Graph g = oracle::random_graph(9, 0.4, rng);
  for (std::uint64_t mask = 0; mask < (1U << 9); mask += 7) {
    const VertexSet x = set_of_mask(9, mask);
    CHECK(sobolev_seminorm(g, indicator(9, x)) == static_cast<double>(oracle::boundary_of_mask(g, mask)));
  }
}

TEST_CASE("g_p examples") {
  const Graph k4 = generators::complete(4);
  CHECK(functional_g_p(k4, {0}, 1) == doctest::Approx(1.5));
  CHECK(functional_g_p(k4, {0}, 2) == doctest::Approx(std::sqrt(1.5)));
  CHECK(functional_g_p(k4, {}, 2) == 0.0);
  CHECK(g_functional(indicator(4, {0}), 1) == doctest::Approx(1.5));
  CHECK(g_functional(Eigen::VectorXd::Constant(4, 1.0), 3) == 0.0);
}

TEST_CASE("g_p closed form agrees with the pair sum") {
  const Graph g = generators::path(7);
  for (std::uint64_t mask = 0; mask < (1U << 7); ++mask)
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      const VertexSet x = set_of_mask(7, mask);
      CHECK(functional_g_p(g, x, p) == doctest::Approx(g_functional(indicator(7, x), p)));
    }
}

TEST_CASE("rho_p examples") {
  const Graph k4 = generators::complete(4);
  CHECK(functional_rho_p(k4, Eigen::VectorXd::Constant(4, 7.0), 2) == doctest::Approx(0.0));
  CHECK(functional_rho_p(k4, indicator(4, {0}), 2) == doctest::Approx(std::sqrt(0.75)));
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    const VertexSet x = set_of_mask(4, mask);
    CHECK(functional_rho_p(k4, indicator(4, x), 1) == doctest::Approx(functional_g_p(k4, x, 1)));
  }
}

TEST_CASE("rho_p and g_p are invariant under complement") {
  const Graph g = generators::cycle(8);
  for (std::uint64_t mask = 0; mask < 256; ++mask)
    for (double p : {1.0, 1.5, 2.0, 4.0}) {
      const VertexSet x = set_of_mask(8, mask), y = set_of_mask(8, mask ^ 255U);
      CHECK(functional_rho_p(g, indicator(8, x), p) == doctest::Approx(functional_rho_p(g, indicator(8, y), p)));
      CHECK(functional_g_p(g, x, p) == doctest::Approx(functional_g_p(g, y, p)));
    }
}

TEST_CASE("rho_p versus g_p on indicators") {
  // The upper comparison rho_p <= g_p holds for every p >= 1. The lower
  // comparison with factor 2^(-(1 - 1/p)) holds for p = 1 and p >= 2 but
  // fails on (1, 2) for unbalanced sets; rho_lower_factor is the factor that
  // holds everywhere.
  for (std::size_t n = 2; n <= 12; ++n)
    for (std::size_t s = 1; s < n; ++s)
      for (double p : {1.0, 1.25, 1.5, 1.75, 2.0, 2.5, 3.0, 5.0}) {
        const double rho = rho_indicator(n, s, p);
        const double g = std::pow(2.0 * static_cast<double>(s * (n - s)) / static_cast<double>(n), 1 / p);
        CHECK(rho <= g * (1 + 1e-12));
        CHECK(rho >= rho_lower_factor(p) * g * (1 - 1e-12));
        if (p == 1.0 || p >= 2.0) CHECK(rho >= std::pow(2.0, -(1 - 1 / p)) * g * (1 - 1e-12));
      }

  const double rho = rho_indicator(4, 1, 1.5);
  const double g = std::pow(1.5, 1 / 1.5);
  CHECK(rho == doctest::Approx(1.0163).epsilon(1e-4));
  CHECK(std::pow(2.0, -(1 - 1 / 1.5)) * g == doctest::Approx(1.0400).epsilon(1e-4));
  CHECK(rho < std::pow(2.0, -(1 - 1 / 1.5)) * g);
  CHECK(functional_rho_p(generators::complete(4), indicator(4, {0}), 1.5) == doctest::Approx(rho));

  CHECK(rho_lower_factor(1) == 1.0);
  CHECK(rho_lower_factor(1.5) == doctest::Approx(std::pow(2.0, -1 / 1.5)));
  CHECK(rho_lower_factor(3) == doctest::Approx(std::pow(2.0, -2.0 / 3.0)));
}

TEST_CASE("check_isoperimetric examples") {
  const Graph k4 = generators::complete(4);
  const auto tight = check_isoperimetric(k4, 2, 1);
  CHECK(tight.holds);
  CHECK(tight.worst_ratio == doctest::Approx(2.0));
  const auto failing = check_isoperimetric(k4, 3, 1);
  CHECK(!failing.holds);
  CHECK(failing.witness.size() == 2);
  CHECK(check_isoperimetric(generators::random_connected(8, 0.3, 1), 1e-9, 2).holds);
  CHECK_THROWS_AS(check_isoperimetric(k4, 1, 0.5), ValidationError);
  CHECK_THROWS_AS(check_isoperimetric(generators::path(21), 1, 1), SizeCapError);
}

TEST_CASE("complete graphs have optimal constant n/2 at p = 1") {
  for (std::size_t n = 2; n <= 9; ++n)
    CHECK(optimal_isoperimetric_constant(generators::complete(n), 1) == doctest::Approx(n / 2.0));
}

TEST_CASE("complete graph boundaries are x(n - x)") {
  // The closed form min(x, n - x)(n - 1) overcounts; the exact count is the
  // number of crossing pairs.
  for (std::size_t n = 2; n <= 8; ++n) {
    const Graph g = generators::complete(n);
    for (std::size_t x = 0; x <= n; ++x) {
      std::vector<Vertex> members(x);
      std::iota(members.begin(), members.end(), 0);
      CHECK(boundary_size(g, VertexSet(members)) == x * (n - x));
    }
  }
  CHECK(boundary_size(generators::complete(4), {0, 1}) != 2 * 3);
}

TEST_CASE("optimal constant matches the enumerated minimum ratio") {
  std::mt19937_64 rng(313);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 3 + trial % 6;
    const Graph g = oracle::random_graph(n, 0.5, rng);
    for (double p : {1.0, 2.0}) {
      double best = kInfinity;
      for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        const auto s = static_cast<std::size_t>(__builtin_popcountll(mask));
        best = std::min(best, static_cast<double>(oracle::boundary_of_mask(g, mask)) / rho_indicator(n, s, p));
      }
      CHECK(optimal_isoperimetric_constant(g, p) == doctest::Approx(best));
    }
  }
}

TEST_CASE("subgraph family examples") {
  const SubgraphFamily k4(generators::complete(4), 2);
  CHECK(k4.size() == 4);
  CHECK(k4.exhaustive());
  for (const auto& member : k4) CHECK(member.graph.size() == 3);

  const SubgraphFamily p3(generators::path(3), 2);
  REQUIRE(p3.size() == 3);
  std::vector<std::size_t> edges;
  for (const auto& member : p3) edges.push_back(member.graph.size());
  std::sort(edges.begin(), edges.end());
  CHECK(edges == std::vector<std::size_t>{0, 1, 1});

  const SubgraphFamily single(generators::cycle(5), 1);
  CHECK(single.size() == 1);
  CHECK(single[0].graph.size() == 5);

  const SubgraphFamily sampled(generators::complete(30), 6, Sampling{50, 4});
  CHECK(!sampled.exhaustive());
  CHECK(sampled.size() == 50);
}

TEST_CASE("family constant examples") {
  const auto k4 = family_constant(generators::complete(4), 2, kInfinity);
  CHECK(k4.a_k == doctest::Approx(2.0));
  CHECK(k4.certified);
  CHECK(k4.members == 4);
  CHECK(family_constant(generators::path(3), 2, kInfinity).a_k == 0.0);
  const Graph c6 = generators::cycle(6);
  CHECK(family_constant(c6, 1, 3).a_k == doctest::Approx(iso_fit(eip_bruteforce(c6), 3).c));
  CHECK_THROWS_AS(family_constant(c6, 6, 3), ValidationError);
}

TEST_CASE("johnson boundary examples") {
  CHECK(johnson_boundary(4, 2, {{0, 1}}) == 4);
  CHECK(johnson_boundary(4, 2, enumerate_ksets(4, 2)) == 0);
  CHECK(johnson_boundary(4, 2, {{0, 1}, {2, 3}}) == 8);
  CHECK(johnson_boundary(4, 2, {}) == 0);
}

TEST_CASE("johnson boundary agrees with the explicit Johnson graph") {
  const auto product = build_symmetric_product(generators::complete(6), 3);
  std::mt19937_64 rng(317);
  std::bernoulli_distribution coin(0.3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<KSet> omega;
    std::vector<Vertex> members;
    for (Vertex r = 0; r < product.ksets.size(); ++r)
      if (coin(rng)) {
        omega.push_back(product.ksets[r]);
        members.push_back(r);
      }
    CHECK(johnson_boundary(6, 3, omega) == boundary_size(product.graph, VertexSet(members)));
  }
}

TEST_CASE("Johnson graph spectral gap is n") {
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t k = 1; k < n; ++k) {
      const auto s = eigenvalues(laplacian_lk(generators::complete(n), k)).eigenvalues;
      CHECK(s[1] == doctest::Approx(static_cast<double>(n)));
    }
}

TEST_CASE("symmetric product bound on complete graphs is tight at k = 1") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto report = verify_symprod_bound(generators::complete(n), 1, 1, n / 2.0);
    CHECK(report.holds);
    CHECK(report.exhaustive);
    CHECK(report.scanned == (std::size_t{1} << n));
    CHECK(report.nontrivial > 0);
    CHECK(report.tight == report.nontrivial);
    CHECK(report.tightest_ratio == doctest::Approx(1.0));
  }
}

TEST_CASE("symmetric product bound on P4 at k = 2, p = 2") {
  // Deleting an inner vertex of P4 disconnects it, so the certified constant
  // is 0 and the inequality is vacuous; positive constants are rejected.
  const Graph p4 = generators::path(4);
  double C = kInfinity;
  for (const auto& member : SubgraphFamily(p4, 2)) C = std::min(C, optimal_isoperimetric_constant(member.graph, 2));
  CHECK(C == 0.0);
  CHECK_THROWS_AS(verify_symprod_bound(p4, 2, 2, C), ValidationError);
  CHECK_THROWS_AS(verify_symprod_bound(p4, 2, 2, 0.1), ValidationError);
}

TEST_CASE("symmetric product bound on C5 at k = 2") {
  const Graph c5 = generators::cycle(5);
  for (double p : {1.0, 2.0}) {
    double C = kInfinity;
    for (const auto& member : SubgraphFamily(c5, 2)) C = std::min(C, optimal_isoperimetric_constant(member.graph, p));
    REQUIRE(C > 0);
    const auto report = verify_symprod_bound(c5, 2, p, C);
    CHECK(report.holds);
    CHECK(report.scanned == 1024);
    CHECK(report.nontrivial > 0);
    CHECK_THROWS_AS(verify_symprod_bound(c5, 2, p, 1.5 * C), ValidationError);
  }
}

TEST_CASE("symmetric product bound over random graphs") {
  std::mt19937_64 rng(331);
  std::size_t checked = 0;
  for (int trial = 0; trial < 40 && checked < 12; ++trial) {
    const std::size_t n = 4 + trial % 3;
    const Graph g = oracle::random_connected_graph(n, 0.6, rng);
    for (std::size_t k = 2; binomial(n, k) <= 15 && 2 * k <= n; ++k)
      for (double p : {1.0, 2.0}) {
        double C = kInfinity;
        for (const auto& member : SubgraphFamily(g, k)) C = std::min(C, optimal_isoperimetric_constant(member.graph, p));
        if (C <= 0) continue;
        CHECK(verify_symprod_bound(g, k, p, C).holds);
        ++checked;
      }
  }
  CHECK(checked > 0);
}

TEST_CASE("symmetric product bound samples large products") {
  const auto report = verify_symprod_bound(generators::complete(8), 3, 1, 3, Sampling{200, 9});
  CHECK(!report.exhaustive);
  CHECK(report.scanned == 200);
  CHECK(report.holds);
}

TEST_CASE("corollary constant examples") {
  CHECK(corollary_constant(2, 6, 2, 1) == doctest::Approx(2.4));
  CHECK(corollary_constant(3, 5, 1, 2) == doctest::Approx(3 * std::sqrt(5.0) / 5));
  CHECK(corollary_constant(2, 6, 2, 1e12) == doctest::Approx(2.0 / 5).epsilon(1e-9));
}
