#include "heisenspec/meanfield.hpp"

#include <bit>
#include <sstream>

#include "heisenspec/caps.hpp"
#include "heisenspec/errors.hpp"
#include "heisenspec/graph.hpp"
#include "heisenspec/symmetric_product.hpp"

namespace heisenspec {

namespace {

void require_scheme(std::size_t n, std::size_t k, std::size_t j) {
  if (j > k || 2 * k > n)
    throw ValidationError("Johnson scheme parameters need 0 <= j <= k <= n/2 (n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ", j=" + std::to_string(j) + ")");
}

std::uint64_t mask_of(const KSet& x) {
  std::uint64_t mask = 0;
  for (Vertex v : x) mask |= std::uint64_t{1} << v;
  return mask;
}

// Adds `weight * m` to the weight-k block of the bitmask basis, or to the
// weight-(n-k) block through complementation when `complemented`.
void embed(SymmetricMatrix& h, std::size_t n, const std::vector<KSet>& ksets, const SymmetricMatrix& m, double weight,
           bool complemented) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<Eigen::Index> at(ksets.size());
  for (std::size_t i = 0; i < ksets.size(); ++i)
    at[i] = static_cast<Eigen::Index>(complemented ? full ^ mask_of(ksets[i]) : mask_of(ksets[i]));
  for (std::size_t r = 0; r < ksets.size(); ++r)
    for (std::size_t c = 0; c < ksets.size(); ++c)
      h(at[r], at[c]) += weight * m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
}

}  // namespace

std::uint64_t multiplicity(std::size_t n, std::size_t j) {
  if (2 * j > n) throw ValidationError("multiplicity needs 0 <= j <= n/2");
  return binomial(n, j) - (j == 0 ? 0 : binomial(n, j - 1));
}

Rational hahn(std::size_t n, std::size_t k, std::size_t j, std::size_t z) {
  require_scheme(n, k, j);
  if (z > k) throw ValidationError("Hahn argument z must not exceed k");
  Rational sum = 0;
  for (std::size_t a = 0; a <= j; ++a) {
    Rational term(boost::multiprecision::cpp_int(binomial(j, a)) * binomial(n + 1 - j, a) * binomial(z, a),
                  boost::multiprecision::cpp_int(binomial(k, a)) * binomial(n - k, a));
    sum += (a % 2 == 0) ? term : -term;
  }
  return sum * multiplicity(n, j);
}

HahnTable hahn_table(std::size_t n, std::size_t k) {
  require_scheme(n, k, 0);
  HahnTable table;
  table.n = n;
  table.k = k;
  table.values.resize(k + 1);
  for (std::size_t j = 0; j <= k; ++j)
    for (std::size_t z = 0; z <= k; ++z) table.values[j].push_back(hahn(n, k, j, z));
  return table;
}

SymmetricMatrix generalized_adjacency(std::size_t n, std::size_t k, std::size_t z) {
  if (k > n || z > k) throw ValidationError("generalized adjacency needs 0 <= z <= k <= n");
  require_within(binomial(n, k), caps().dense_dim, "Johnson scheme dimension");
  const auto ksets = enumerate_ksets(n, k);
  std::vector<std::uint64_t> masks;
  for (const KSet& x : ksets) masks.push_back(mask_of(x));
  const auto dim = static_cast<Eigen::Index>(ksets.size());
  SymmetricMatrix a = SymmetricMatrix::Zero(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c)
      if (static_cast<std::size_t>(std::popcount(masks[r] ^ masks[c])) == 2 * z) a(r, c) = 1;
  return a;
}

SymmetricMatrix projector(std::size_t n, std::size_t k, std::size_t j) {
  require_scheme(n, k, j);
  const double count = static_cast<double>(binomial(n, k));
  const auto dim = static_cast<Eigen::Index>(binomial(n, k));
  require_within(binomial(n, k), caps().dense_dim, "Johnson scheme dimension");
  SymmetricMatrix p = SymmetricMatrix::Zero(dim, dim);
  for (std::size_t z = 0; z <= k; ++z)
    p += hahn(n, k, j, z).convert_to<double>() / count * generalized_adjacency(n, k, z);
  return p;
}

std::uint64_t MeanFieldSpectrum::total_multiplicity() const {
  std::uint64_t total = 0;
  for (const Level& level : levels) total += level.multiplicity;
  return total;
}

MeanFieldSpectrum meanfield_spectrum(std::size_t n) {
  if (n < 1) throw ValidationError("mean-field spectrum needs n >= 1");
  MeanFieldSpectrum out;
  out.n = n;
  out.levels.push_back({0, n + 1});
  for (std::size_t j = 1; 2 * j <= n; ++j) out.levels.push_back({j * (n + 1 - j), (n + 1 - 2 * j) * multiplicity(n, j)});
  return out;
}

ReconstructionReport reconstruct_lk(std::size_t n, std::size_t k, double tol) {
  require_scheme(n, k, 0);
  const SymmetricMatrix lk = laplacian_lk(generators::complete(n), k);
  SymmetricMatrix sum = SymmetricMatrix::Zero(lk.rows(), lk.cols());
  for (std::size_t j = 1; j <= k; ++j) sum += static_cast<double>(j * (n + 1 - j)) * projector(n, k, j);
  ReconstructionReport report;
  report.frobenius_error = (lk - sum).norm();
  report.passed = report.frobenius_error < tol;
  if (!report.passed) {
    std::ostringstream os;
    os << "L_" << k << "(K_" << n << ") differs from its projector expansion by " << report.frobenius_error;
    report.detail = os.str();
  }
  return report;
}

SymmetricMatrix meanfield_hamiltonian(std::size_t n) {
  if (n < 1 || n >= 63) throw ValidationError("mean-field Hamiltonian needs 1 <= n < 63");
  require_within(std::uint64_t{1} << n, caps().dense_dim, "Hamiltonian dimension 2^n");
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
  SymmetricMatrix h = SymmetricMatrix::Zero(dim, dim);
  const std::size_t half = n / 2;
  const bool even = n % 2 == 0;
  for (std::size_t j = 1; j <= half; ++j) {
    const double energy = static_cast<double>(j * (n + 1 - j));
    // Odd n: k runs to (n-1)/2 = half for both terms. Even n: the middle
    // weight n/2 is its own complement and appears once.
    for (std::size_t k = j; k <= half; ++k) {
      const auto ksets = enumerate_ksets(n, k);
      const SymmetricMatrix p = projector(n, k, j);
      embed(h, n, ksets, p, energy, false);
      if (!(even && k == half)) embed(h, n, ksets, p, energy, true);
    }
  }
  return h;
}

ReconstructionReport reconstruct_hamiltonian(std::size_t n, double tol) {
  const SymmetricMatrix swap_built = build_heisenberg_dense(generators::complete(n)).matrix;
  ReconstructionReport report;
  report.frobenius_error = (swap_built - meanfield_hamiltonian(n)).norm();
  report.passed = report.frobenius_error < tol;
  if (!report.passed) {
    std::ostringstream os;
    os << "Hamiltonian of K_" << n << " differs from the projector assembly by " << report.frobenius_error;
    report.detail = os.str();
  }
  return report;
}

}  // namespace heisenspec
