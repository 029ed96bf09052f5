#include "heisenspec/symmetric_product.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

namespace heisenspec {

__extension__ typedef unsigned __int128 WideUnsigned;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  WideUnsigned result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(result);
}

KSetIndex::KSetIndex(std::size_t n, std::size_t k) : n_(n), k_(k), size_(binomial(n, k)) {
  if (k > n) throw ValidationError("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  table_.resize(n * (k + 1));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i <= k; ++i) table_[x * (k + 1) + i] = binomial(x, i);
}

std::uint64_t KSetIndex::rank(std::span<const Vertex> sorted_members) const {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < sorted_members.size(); ++i) r += choose(sorted_members[i], i + 1);
  return r;
}

KSet KSetIndex::unrank(std::uint64_t r) const {
  if (r >= size_) throw ValidationError("rank out of range");
  std::vector<Vertex> members(k_);
  std::size_t x = n_;
  for (std::size_t i = k_; i >= 1; --i) {
    do {
      --x;
    } while (choose(x, i) > r);
    members[i - 1] = static_cast<Vertex>(x);
    r -= choose(x, i);
  }
  return KSet(std::move(members));
}

std::vector<KSet> enumerate_ksets(std::size_t n, std::size_t k) {
  if (k > n) throw ValidationError("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  std::vector<KSet> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(binomial(n, k), 1u << 20)));
  // Colex successor: bump the lowest member that can move, reset those below it.
  std::vector<Vertex> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = static_cast<Vertex>(i);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = 0;
    while (i < k && cur[i] + 1 == (i + 1 < k ? cur[i + 1] : static_cast<Vertex>(n))) ++i;
    if (i == k) break;
    ++cur[i];
    for (std::size_t j = 0; j < i; ++j) cur[j] = static_cast<Vertex>(j);
  }
  return out;
}

KSet random_kset(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  if (k > n) throw ValidationError("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  std::vector<Vertex> chosen;
  chosen.reserve(k);
  for (std::size_t j = n - k; j < n; ++j) {
    std::uniform_int_distribution<std::size_t> pick(0, j);
    const auto t = static_cast<Vertex>(pick(rng));
    if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) {
      chosen.push_back(t);
    } else {
      chosen.push_back(static_cast<Vertex>(j));
    }
  }
  return KSet(std::move(chosen));
}

SymProduct build_symmetric_product(const Graph& g, std::size_t k) {
  if (k < 1 || k > g.order()) throw ValidationError("symmetric product needs 1 <= k <= n");
  KSetIndex index(g.order(), k);
  require_within(index.size(), caps().dense_dim, "symmetric product");
  SymProduct sp;
  sp.base = g;
  sp.k = k;
  sp.ksets = enumerate_ksets(g.order(), k);
  std::vector<Edge> edges;
  detail::for_each_token_move(g, index, sp.ksets, [&](std::uint64_t x, std::uint64_t y) {
    if (x < y) edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
  });
  sp.graph = Graph(sp.ksets.size(), std::move(edges));
  return sp;
}

ComplementCheck complement_check(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  if (k > n) throw ValidationError("complement check needs k <= n");
  const SymmetricMatrix lk = laplacian_lk(g, k);
  const SymmetricMatrix lc = laplacian_lk(g, n - k);
  KSetIndex complement_index(n, n - k);
  auto ksets = enumerate_ksets(n, k);

  // perm[i] = colex rank of the complement of the i-th k-set.
  std::vector<Eigen::Index> perm(ksets.size());
  for (std::size_t i = 0; i < ksets.size(); ++i) {
    std::vector<Vertex> rest;
    rest.reserve(n - k);
    for (Vertex v = 0; v < n; ++v)
      if (!ksets[i].contains(v)) rest.push_back(v);
    perm[i] = static_cast<Eigen::Index>(complement_index.rank(rest));
  }
  ComplementCheck out;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = 0; j < perm.size(); ++j)
      out.max_deviation = std::max(
          out.max_deviation, std::abs(lc(perm[i], perm[j]) - lk(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))));
  out.equal = out.max_deviation == 0.0;
  return out;
}

HamiltonianDense build_heisenberg_dense(const Graph& g) {
  const std::size_t n = g.order();
  if (n >= 63) throw SizeCapError("Hamiltonian on " + std::to_string(n) + " spins");
  const std::uint64_t dim = std::uint64_t{1} << n;
  require_within(dim, caps().dense_dim, "Hamiltonian dimension 2^n");
  HamiltonianDense h;
  h.n = n;
  h.matrix = SymmetricMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  // Swap (i j) fixes |X> unless exactly one of i, j is up, in which case it
  // maps |X> to |X xor {i,j}>.
  for (std::uint64_t x = 0; x < dim; ++x) {
    for (const Edge& e : g.edges()) {
      const bool up_u = (x >> e.u) & 1U;
      const bool up_v = (x >> e.v) & 1U;
      if (up_u == up_v) continue;
      const std::uint64_t y = x ^ (std::uint64_t{1} << e.u) ^ (std::uint64_t{1} << e.v);
      h.matrix(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) += 1.0;
      h.matrix(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) -= 1.0;
    }
  }
  return h;
}

DecompositionReport verify_decomposition(const Graph& g, double tol) {
  return verify_decomposition(g, build_heisenberg_dense(g), tol);
}

DecompositionReport verify_decomposition(const Graph& g, const HamiltonianDense& h, double tol) {
  const std::size_t n = g.order();
  DecompositionReport report;
  const auto dim = h.matrix.rows();
  if (h.n != n || dim != (Eigen::Index{1} << n)) {
    report.detail = "Hamiltonian dimension does not match 2^n";
    return report;
  }
  for (Eigen::Index x = 0; x < dim; ++x)
    for (Eigen::Index y = 0; y < dim; ++y)
      if (std::popcount(static_cast<std::uint64_t>(x)) != std::popcount(static_cast<std::uint64_t>(y)))
        report.max_cross_sector = std::max(report.max_cross_sector, std::abs(h.matrix(y, x)));

  report.hamiltonian_spectrum = eigenvalues(h.matrix).eigenvalues;
  for (std::size_t k = 0; k <= n; ++k) {
    auto block = eigenvalues(laplacian_lk(g, k)).eigenvalues;
    report.block_spectrum.insert(report.block_spectrum.end(), block.begin(), block.end());
  }
  std::sort(report.block_spectrum.begin(), report.block_spectrum.end());
  for (std::size_t i = 0; i < report.block_spectrum.size(); ++i)
    report.max_eigen_deviation =
        std::max(report.max_eigen_deviation, std::abs(report.hamiltonian_spectrum[i] - report.block_spectrum[i]));

  report.passed = report.max_cross_sector == 0.0 && report.max_eigen_deviation <= tol;
  if (!report.passed) {
    std::ostringstream os;
    os.precision(12);
    if (report.max_cross_sector != 0.0) os << "H_1 couples different Hamming weights (max entry " << report.max_cross_sector << "); ";
    os << "max eigenvalue deviation " << report.max_eigen_deviation << "; mismatches:";
    for (std::size_t i = 0; i < report.block_spectrum.size(); ++i) {
      if (std::abs(report.hamiltonian_spectrum[i] - report.block_spectrum[i]) > tol)
        os << " [" << i << "] H=" << report.hamiltonian_spectrum[i] << " blocks=" << report.block_spectrum[i];
    }
    report.detail = os.str();
  }
  return report;
}

}  // namespace heisenspec
