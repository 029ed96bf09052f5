#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "heisenspec/graph.hpp"
#include "heisenspec/spectral.hpp"

namespace heisenspec {

/// A k-subset of vertices. Same representation as VertexSet; the size is
/// the token count.
using KSet = VertexSet;

/// C(n, k), saturating at UINT64_MAX. Zero when k > n.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Colexicographic rank/unrank of k-subsets of {0..n-1}:
/// rank(X) = sum_i C(x_i, i + 1) over the sorted members x_0 < ... < x_{k-1}.
class KSetIndex {
 public:
  KSetIndex(std::size_t n, std::size_t k);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::uint64_t size() const { return size_; }

  std::uint64_t rank(std::span<const Vertex> sorted_members) const;
  std::uint64_t rank(const KSet& set) const { return rank(set.members()); }
  KSet unrank(std::uint64_t r) const;

 private:
  std::uint64_t choose(std::size_t x, std::size_t i) const { return table_[x * (k_ + 1) + i]; }

  std::size_t n_;
  std::size_t k_;
  std::uint64_t size_;
  std::vector<std::uint64_t> table_;  // C(x, i) for x < n, i <= k
};

/// All k-subsets in colex order; list position equals KSetIndex::rank.
std::vector<KSet> enumerate_ksets(std::size_t n, std::size_t k);

/// Uniform random k-subset of {0..n-1} (Floyd's sampling).
KSet random_kset(std::size_t n, std::size_t k, std::mt19937_64& rng);

/// The token graph G^{k}: vertices are k-sets, adjacent when their symmetric
/// difference is an edge of the base graph.
struct SymProduct {
  Graph base;
  std::size_t k = 0;
  std::vector<KSet> ksets;  // colex order
  Graph graph;
};

SymProduct build_symmetric_product(const Graph& g, std::size_t k);

/// L_k: diagonal |boundary of X| and -1 where X and Y differ by an edge.
/// Row/column order is the colex order of enumerate_ksets.
template <typename Scalar = double>
DenseMatrix<Scalar> laplacian_lk(const Graph& g, std::size_t k);

/// Result of comparing L_{n-k} with U_k L_k U_k^T entrywise.
struct ComplementCheck {
  bool equal = false;
  double max_deviation = 0;
};

ComplementCheck complement_check(const Graph& g, std::size_t k);

/// H_1 = sum over edges of (1 - swap_{ij}) in the computational basis.
/// Basis index is the bitmask of up spins: bit v set iff vertex v is in X.
struct HamiltonianDense {
  std::size_t n = 0;
  SymmetricMatrix matrix;
};

HamiltonianDense build_heisenberg_dense(const Graph& g);

struct DecompositionReport {
  bool passed = false;
  /// Largest |H_1 entry| between states of different Hamming weight.
  double max_cross_sector = 0;
  /// Largest gap between sorted H_1 and block eigenvalues.
  double max_eigen_deviation = 0;
  std::vector<double> hamiltonian_spectrum;
  std::vector<double> block_spectrum;
  std::string detail;
};

/// Checks that spec(H_1) equals the union of spec(L_0) ... spec(L_n) within
/// `tol`, and that H_1 never couples different Hamming weights.
DecompositionReport verify_decomposition(const Graph& g, double tol = 1e-8);
/// Same check against a caller-supplied Hamiltonian.
DecompositionReport verify_decomposition(const Graph& g, const HamiltonianDense& h, double tol = 1e-8);

// ---------------------------------------------------------------------------

namespace detail {
/// Calls fn(rank_of_X, rank_of_Y) for every ordered pair X ~ Y in G^{k}.
template <typename Fn>
void for_each_token_move(const Graph& g, const KSetIndex& index, const std::vector<KSet>& ksets, Fn&& fn) {
  std::vector<bool> inside(g.order(), false);
  std::vector<Vertex> scratch;
  for (std::uint64_t r = 0; r < ksets.size(); ++r) {
    const KSet& x = ksets[r];
    for (Vertex v : x) inside[v] = true;
    for (std::size_t pos = 0; pos < x.size(); ++pos) {
      const Vertex out = x[pos];
      for (Vertex in : g.neighbors(out)) {
        if (inside[in]) continue;
        scratch.assign(x.begin(), x.end());
        scratch[pos] = in;
        std::sort(scratch.begin(), scratch.end());
        fn(r, index.rank(scratch));
      }
    }
    for (Vertex v : x) inside[v] = false;
  }
}
}  // namespace detail

template <typename Scalar>
DenseMatrix<Scalar> laplacian_lk(const Graph& g, std::size_t k) {
  if (k > g.order()) throw ValidationError("k exceeds the number of vertices");
  KSetIndex index(g.order(), k);
  require_within(index.size(), caps().dense_dim, "symmetric product");
  auto ksets = enumerate_ksets(g.order(), k);
  const auto dim = static_cast<Eigen::Index>(index.size());
  DenseMatrix<Scalar> l = DenseMatrix<Scalar>::Zero(dim, dim);
  detail::for_each_token_move(g, index, ksets, [&](std::uint64_t x, std::uint64_t y) {
    l(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = Scalar(-1);
    l(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) += Scalar(1);
  });
  return l;
}

}  // namespace heisenspec
