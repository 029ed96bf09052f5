#include "heisenspec/diameter.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <thread>

#include "heisenspec/assignment.hpp"
#include "heisenspec/caps.hpp"
#include "heisenspec/errors.hpp"

namespace heisenspec {

std::vector<KSet> select_ksets(std::size_t j, std::size_t n, std::size_t k, std::mt19937_64& rng) {
  const std::uint64_t total = binomial(n, k);
  if (k > n || j + 1 > total)
    throw ValidationError("cannot select " + std::to_string(j + 1) + " distinct " + std::to_string(k) +
                          "-sets of " + std::to_string(n) + " vertices");
  std::vector<KSet> out;
  out.reserve(j + 1);
  std::set<KSet> seen;
  while (out.size() < j + 1) {
    KSet x = random_kset(n, k, rng);
    if (seen.insert(x).second) out.push_back(std::move(x));
  }
  return out;
}

std::vector<KSet> select_ksets(std::size_t j, std::size_t n, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return select_ksets(j, n, k, rng);
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(std::uint64_t{trial} >> 32)};
  return std::mt19937_64(seq);
}

namespace {

struct TrialResult {
  ExtendedInt d;
  std::vector<KSet> sets;
};

TrialResult run_trial(const DistanceMatrix& dist, std::size_t k, std::size_t j, std::uint64_t seed,
                      std::size_t trial) {
  auto rng = trial_engine(seed, trial);
  TrialResult result{ExtendedInt::infinity(), select_ksets(j, dist.order(), k, rng)};
  for (std::size_t a = 0; a < result.sets.size(); ++a)
    for (std::size_t b = a + 1; b < result.sets.size(); ++b)
      result.d = std::min(result.d, kset_distance(result.sets[a], result.sets[b], dist));
  return result;
}

}  // namespace

DiameterEstimate estimate_generalized_diameter(const Graph& g, std::size_t k, std::size_t j, std::size_t trials,
                                               std::uint64_t seed, unsigned threads) {
  return estimate_generalized_diameter(all_pairs_distances(g), k, j, trials, seed, threads);
}

DiameterEstimate estimate_generalized_diameter(const DistanceMatrix& d, std::size_t k, std::size_t j,
                                               std::size_t trials, std::uint64_t seed, unsigned threads) {
  if (trials < 1) throw ValidationError("at least one trial is required");
  if (j < 1) throw ValidationError("generalized diameter needs j >= 1");
  std::vector<TrialResult> results(trials);
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(trials)));
  if (workers == 1) {
    for (std::size_t t = 0; t < trials; ++t) results[t] = run_trial(d, k, j, seed, t);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < trials; t += workers) results[t] = run_trial(d, k, j, seed, t);
      });
  }
  DiameterEstimate est;
  est.j = j;
  est.k = k;
  est.trials = trials;
  est.seed = seed;
  for (std::size_t t = 0; t < trials; ++t) {
    if (t == 0 || results[t].d > est.d) {
      est.d = results[t].d;
      est.best_trial = t;
    }
  }
  est.witness = std::move(results[est.best_trial].sets);
  return est;
}

ExtendedInt exact_generalized_diameter(const Graph& g, std::size_t k, std::size_t j) {
  if (j < 1) throw ValidationError("generalized diameter needs j >= 1");
  const SymProduct sym = build_symmetric_product(g, k);
  const std::size_t N = sym.ksets.size();
  if (j + 1 > N) throw ValidationError("j + 1 exceeds the number of k-sets");
  if (binomial(N, j + 1) > caps().enumeration)
    throw SizeCapError("exact generalized diameter would enumerate C(" + std::to_string(N) + ", " +
                       std::to_string(j + 1) + ") subsets; use the randomized estimator");
  const DistanceMatrix dist = all_pairs_distances(sym.graph);

  // Depth-first over increasing vertex lists; prune once the running minimum
  // cannot beat the best complete selection.
  ExtendedInt best = 0;
  std::vector<Vertex> chosen;
  std::function<void(Vertex, ExtendedInt)> extend = [&](Vertex next, ExtendedInt current) {
    if (chosen.size() == j + 1) {
      best = std::max(best, current);
      return;
    }
    const std::size_t needed = j + 1 - chosen.size();
    for (Vertex v = next; v + needed <= N; ++v) {
      ExtendedInt m = current;
      for (Vertex u : chosen) m = std::min(m, dist(u, v));
      if (m <= best) continue;
      chosen.push_back(v);
      extend(v + 1, m);
      chosen.pop_back();
    }
  };
  extend(0, ExtendedInt::infinity());
  return best;
}

double diameter_bound(double mu, double N, ExtendedInt d, DiameterExponent exponent) {
  if (d.is_infinite()) return 0;
  if (d.value() <= 1) return std::numeric_limits<double>::infinity();
  const double hops = static_cast<double>(d.value());
  const double power = exponent == DiameterExponent::Certified ? 1 / (hops - 1) : 1 / hops;
  return mu * (1 - 2 / (1 + std::pow(N, power)));
}

UpperBoundRecord upper_bound_lambda(const Graph& g, std::size_t k, std::size_t j, const UpperBoundOptions& options) {
  return upper_bound_lambda(g, all_pairs_distances(g), k, j, options);
}

UpperBoundRecord upper_bound_lambda(const Graph& g, const DistanceMatrix& d, std::size_t k, std::size_t j,
                                    const UpperBoundOptions& options) {
  const std::size_t n = g.order();
  if (k < 1 || 2 * k > n) throw ValidationError("upper bound needs 1 <= k <= n/2");
  const std::uint64_t N = binomial(n, k);
  if (j < 1 || j + 1 > N) throw ValidationError("upper bound needs 1 <= j <= C(n,k) - 1");
  if (d.order() != n) throw ValidationError("distance matrix does not match the graph");

  const DegreeProfile degrees = degree_profile(g);
  UpperBoundRecord rec;
  rec.k = k;
  rec.j = j;
  rec.N = N;
  rec.mu = 2.0 * static_cast<double>(k) * static_cast<double>(degrees.max_degree);
  if (options.refined_mu && k == 1) {
    auto sorted = degrees.degrees;
    std::sort(sorted.rbegin(), sorted.rend());
    rec.mu = static_cast<double>(sorted[0] + (sorted.size() > 1 ? sorted[1] : 0));
  }
  rec.estimate = estimate_generalized_diameter(d, k, j, options.trials, options.seed, options.threads);
  rec.bound = diameter_bound(rec.mu, static_cast<double>(N), rec.estimate.d, options.exponent);
  rec.certified = options.exponent == DiameterExponent::Certified;
  if (rec.estimate.d.is_infinite()) rec.note = "infinite-diameter witness";
  return rec;
}

LambdaMaxBounds lambda_max_bounds(const Graph& g, std::size_t k, const IsoFit& fit) {
  const std::size_t n = g.order();
  if (k == 0) return {};
  if (2 * k > n) throw ValidationError("lambda_max bounds need k <= n/2");
  const double exponent = 1 - 1 / fit.delta;
  const double beta = static_cast<double>(degree_profile(g).max_degree);
  LambdaMaxBounds out;
  out.lower = fit.c * std::pow(static_cast<double>(k), exponent);
  out.upper = 2.0 * static_cast<double>(k) * beta;
  if (k == n / 2) {
    out.hamiltonian_lower = fit.c * std::pow(static_cast<double>(n / 2), exponent);
    out.hamiltonian_upper = static_cast<double>(n) * beta;
  }
  return out;
}

}  // namespace heisenspec
