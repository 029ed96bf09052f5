#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "heisenspec/spectral.hpp"

namespace heisenspec {

using Rational = boost::multiprecision::cpp_rational;

/// m_j = C(n, j) - C(n, j - 1), for 0 <= j <= floor(n/2).
std::uint64_t multiplicity(std::size_t n, std::size_t j);

/// h_{k,j}(z) = m_j sum_a (-1)^a C(j,a) C(n+1-j,a) / (C(k,a) C(n-k,a)) C(z,a),
/// exact. Needs 0 <= j <= k <= floor(n/2) and 0 <= z <= k.
Rational hahn(std::size_t n, std::size_t k, std::size_t j, std::size_t z);

struct HahnTable {
  std::size_t n = 0;
  std::size_t k = 0;
  /// values[j][z] for j, z = 0..k.
  std::vector<std::vector<Rational>> values;

  const Rational& at(std::size_t j, std::size_t z) const { return values.at(j).at(z); }
};

HahnTable hahn_table(std::size_t n, std::size_t k);

/// A_{k,z}: entry (X, Y) is 1 iff |X sym-diff Y| = 2z. Colex k-set order.
SymmetricMatrix generalized_adjacency(std::size_t n, std::size_t k, std::size_t z);

/// P_{k,j} = (1 / C(n,k)) sum_z h_{k,j}(z) A_{k,z}.
SymmetricMatrix projector(std::size_t n, std::size_t k, std::size_t j);

/// Spectrum of the Hamiltonian on K_n: eigenvalue 0 with multiplicity n + 1
/// and j(n+1-j) with multiplicity (n+1-2j) m_j for j = 1..floor(n/2).
struct MeanFieldSpectrum {
  struct Level {
    std::uint64_t eigenvalue = 0;
    std::uint64_t multiplicity = 0;
    friend bool operator==(const Level&, const Level&) = default;
  };
  std::size_t n = 0;
  std::vector<Level> levels;

  std::uint64_t total_multiplicity() const;
};

MeanFieldSpectrum meanfield_spectrum(std::size_t n);

struct ReconstructionReport {
  bool passed = false;
  double frobenius_error = 0;
  std::string detail;
};

/// || L_k(K_n) - sum_{j=1..k} j(n+1-j) P_{k,j} ||_F against `tol`.
ReconstructionReport reconstruct_lk(std::size_t n, std::size_t k, double tol = 1e-9);

/// Hamiltonian on K_n assembled from projectors and their complement
/// conjugates, in the bitmask basis of build_heisenberg_dense.
SymmetricMatrix meanfield_hamiltonian(std::size_t n);

/// Compares meanfield_hamiltonian(n) with the swap-built Hamiltonian of K_n.
ReconstructionReport reconstruct_hamiltonian(std::size_t n, double tol = 1e-9);

}  // namespace heisenspec
