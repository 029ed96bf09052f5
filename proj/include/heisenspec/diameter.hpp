#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "heisenspec/extended.hpp"
#include "heisenspec/graph.hpp"
#include "heisenspec/isoperimetry.hpp"
#include "heisenspec/symmetric_product.hpp"

namespace heisenspec {

/// j + 1 pairwise-distinct uniform k-subsets of {0..n-1}, drawn with
/// rejection of repeats.
std::vector<KSet> select_ksets(std::size_t j, std::size_t n, std::size_t k, std::mt19937_64& rng);
std::vector<KSet> select_ksets(std::size_t j, std::size_t n, std::size_t k, std::uint64_t seed);

/// Engine for trial `trial` of a run seeded with `seed`.
std::mt19937_64 trial_engine(std::uint64_t seed, std::size_t trial);

/// Randomized lower bound on the generalized j-diameter of G^{k}.
struct DiameterEstimate {
  std::size_t j = 0;
  std::size_t k = 0;
  ExtendedInt d;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  /// Trial that attained d (lowest index among ties) and its j + 1 k-sets.
  std::size_t best_trial = 0;
  std::vector<KSet> witness;
};

/// Each trial draws j + 1 k-sets and takes their minimum pairwise
/// kset_distance; the result is the maximum over trials.
DiameterEstimate estimate_generalized_diameter(const Graph& g, std::size_t k, std::size_t j, std::size_t trials,
                                               std::uint64_t seed, unsigned threads = 1);
/// Same, reusing base-graph distances computed by the caller.
DiameterEstimate estimate_generalized_diameter(const DistanceMatrix& d, std::size_t k, std::size_t j,
                                               std::size_t trials, std::uint64_t seed, unsigned threads = 1);

/// Exact d_j(G^{k}) from BFS distances on the explicit token graph, by
/// branch and bound over (j + 1)-subsets of its vertices.
ExtendedInt exact_generalized_diameter(const Graph& g, std::size_t k, std::size_t j);

enum class DiameterExponent {
  /// N^(1/(d-1)), the certified form.
  Certified,
  /// N^(1/d), the simplified form; not a certified bound.
  Pseudocode,
};

/// mu (1 - 2 / (1 + N^(1/(d-1)))) for d >= 2, +inf for d <= 1, 0 for d = inf.
double diameter_bound(double mu, double N, ExtendedInt d, DiameterExponent exponent = DiameterExponent::Certified);

struct UpperBoundOptions {
  std::size_t trials = 16;
  std::uint64_t seed = 0;
  DiameterExponent exponent = DiameterExponent::Certified;
  /// For k = 1 use largest plus second-largest degree instead of 2 beta.
  bool refined_mu = false;
  unsigned threads = 1;
};

struct UpperBoundRecord {
  std::size_t k = 0;
  std::size_t j = 0;
  double mu = 0;
  std::uint64_t N = 0;
  DiameterEstimate estimate;
  double bound = 0;
  bool certified = true;
  /// "infinite-diameter witness" when the bound was set to 0.
  std::string note;
};

UpperBoundRecord upper_bound_lambda(const Graph& g, std::size_t k, std::size_t j, const UpperBoundOptions& options = {});
UpperBoundRecord upper_bound_lambda(const Graph& g, const DistanceMatrix& d, std::size_t k, std::size_t j,
                                    const UpperBoundOptions& options = {});

struct LambdaMaxBounds {
  double lower = 0;
  double upper = 0;
  /// Envelope for the whole Hamiltonian, filled when k = floor(n/2).
  std::optional<double> hamiltonian_lower;
  std::optional<double> hamiltonian_upper;
};

/// (c k^(1 - 1/delta), 2 k beta) for lambda_max(L_k); k = 0 gives (0, 0).
LambdaMaxBounds lambda_max_bounds(const Graph& g, std::size_t k, const IsoFit& fit);

}  // namespace heisenspec
