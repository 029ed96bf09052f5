#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "heisenspec/caps.hpp"
#include "heisenspec/errors.hpp"
#include "heisenspec/graph.hpp"

namespace heisenspec {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Dense symmetric matrices used throughout are plain Eigen matrices that are
/// assembled exactly symmetric.
using SymmetricMatrix = DenseMatrix<double>;

/// Combinatorial Laplacian D - A.
template <typename Scalar = double>
DenseMatrix<Scalar> laplacian_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  require_within(g.order(), caps().dense_dim, "Laplacian dimension");
  DenseMatrix<Scalar> l = DenseMatrix<Scalar>::Zero(n, n);
  for (const Edge& e : g.edges()) {
    l(e.u, e.v) = Scalar(-1);
    l(e.v, e.u) = Scalar(-1);
    l(e.u, e.u) += Scalar(1);
    l(e.v, e.v) += Scalar(1);
  }
  return l;
}

/// D^{-1/2} L D^{-1/2}. Throws ValidationError naming the first isolated vertex.
template <typename Scalar = double>
DenseMatrix<Scalar> normalized_laplacian(const Graph& g) {
  using std::sqrt;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> scale(static_cast<Eigen::Index>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      throw ValidationError("normalized Laplacian undefined: vertex " + std::to_string(v + 1) +
                            " is isolated");
    }
    scale(v) = Scalar(1) / sqrt(static_cast<Scalar>(g.degree(v)));
  }
  return scale.asDiagonal() * laplacian_matrix<Scalar>(g) * scale.asDiagonal();
}

/// Eigenvalues in ascending order.
template <typename Scalar>
struct Spectrum {
  std::vector<Scalar> eigenvalues;
  /// Off-diagonal Frobenius mass left when the sweeps stopped.
  Scalar residual = 0;
  std::size_t sweeps = 0;

  std::size_t size() const { return eigenvalues.size(); }
  Scalar operator[](std::size_t i) const { return eigenvalues[i]; }
  Scalar max() const { return eigenvalues.empty() ? Scalar(0) : eigenvalues.back(); }
};

namespace detail {

template <typename Scalar>
Scalar off_diagonal_norm(const DenseMatrix<Scalar>& a) {
  Scalar sum = 0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) sum += a(i, j) * a(i, j);
  using std::sqrt;
  return sqrt(sum);
}

}  // namespace detail

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps continue until the off-diagonal Frobenius mass drops below `tol`.
/// The target is floored at the round-off level N * eps * ||M||_F, below which
/// no rotation sequence can make progress. Accepts any Eigen expression.
template <typename Derived>
Spectrum<typename Derived::Scalar> eigenvalues(const Eigen::MatrixBase<Derived>& m,
                                               typename Derived::Scalar tol = typename Derived::Scalar(1e-10),
                                               std::size_t max_sweeps = 100) {
  using Scalar = typename Derived::Scalar;
  using std::abs;
  using std::sqrt;
  if (m.rows() != m.cols()) throw ValidationError("eigenvalues: matrix is not square");
  if (!(tol > Scalar(0))) throw ValidationError("eigenvalues: tolerance must be positive");
  require_within(static_cast<std::uint64_t>(m.rows()), caps().dense_dim, "dense eigenproblem");

  DenseMatrix<Scalar> a = m;
  const Eigen::Index n = a.rows();
  const Scalar norm = a.norm();
  const Scalar asymmetry = n > 0 ? Scalar((a - a.transpose()).cwiseAbs().maxCoeff()) : Scalar(0);
  if (asymmetry > Scalar(1e-12) * (Scalar(1) + norm)) {
    throw ValidationError("eigenvalues: matrix is not symmetric");
  }
  a = (a + a.transpose()) / Scalar(2);

  const Scalar floor = Scalar(n) * std::numeric_limits<Scalar>::epsilon() * norm;
  const Scalar target = std::max(tol, floor);

  Spectrum<Scalar> out;
  Scalar off = detail::off_diagonal_norm(a);
  while (off >= target) {
    if (out.sweeps == max_sweeps) {
      throw ConvergenceError("Jacobi eigensolver did not converge; residual " + std::to_string(double(off)),
                             static_cast<double>(off));
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
        Scalar t = Scalar(1) / (abs(theta) + sqrt(theta * theta + Scalar(1)));
        if (theta < Scalar(0)) t = -t;
        const Scalar c = Scalar(1) / sqrt(t * t + Scalar(1));
        const Scalar s = t * c;
        for (Eigen::Index r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const Scalar arp = a(r, p);
          const Scalar arq = a(r, q);
          a(r, p) = a(p, r) = c * arp - s * arq;
          a(r, q) = a(q, r) = s * arp + c * arq;
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = Scalar(0);
      }
    }
    ++out.sweeps;
    off = detail::off_diagonal_norm(a);
  }
  out.residual = off;
  out.eigenvalues.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out.eigenvalues[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

}  // namespace heisenspec
