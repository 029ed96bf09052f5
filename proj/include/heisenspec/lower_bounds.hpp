#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "heisenspec/graph.hpp"
#include "heisenspec/isoperimetry.hpp"

namespace heisenspec {

enum class EdgeCountSource {
  /// |E(G^{k})| = m C(n-2, k-1).
  Exact,
  /// k beta_1 C(n,k) / 2.
  DegreeBound,
};

/// A lower bound with the generic inputs it was evaluated with. For L_k the
/// inputs are the ones substituted for the token graph (b_k lower bound,
/// beta_k upper bound, isoperimetric number of G^{k}, delta_k).
struct LowerBoundRecord {
  std::size_t k = 0;  // 0 when the target is the graph itself
  std::size_t j = 0;
  double b = 0;
  double beta = 0;
  double c = 0;
  double delta = 0;
  double edges = 0;
  EdgeCountSource edge_source = EdgeCountSource::Exact;
  std::optional<double> bound;
  /// Why no bound was produced.
  std::string reason;

  bool applicable() const { return bound.has_value(); }
};

/// (b c^2 / (16 e beta^2)) ((delta-2)/(delta-1))^2 (j beta / (18 m))^(2/delta).
/// Not applicable for delta <= 2 or m = 0.
LowerBoundRecord lower_bound_lambda_graph(double b, double beta, double c, double delta, std::size_t j,
                                          double m_edges);

/// Volume-form isoperimetric constant c / beta^(1 - 1/delta).
double c_delta(double c, double beta, double delta);

/// Lower bound on lambda_j(L_k) from the family constant a_k (dimension
/// delta_k) and the fit of G itself. Not applicable for delta_k <= 2, a_k = 0
/// or an edgeless token graph.
LowerBoundRecord lower_bound_lambda_Lk(const Graph& g, std::size_t k, std::size_t j, double a_k, double delta_k,
                                       const IsoFit& fit, EdgeCountSource source = EdgeCountSource::Exact);

struct SandwichReport {
  bool holds = false;
  double b = 0;
  double beta = 0;
  std::vector<double> laplacian;
  std::vector<double> normalized;
  std::optional<std::size_t> failing_j;
  std::string detail;
};

/// b lambda_j(normalized L) <= lambda_j(L) <= beta lambda_j(normalized L) for
/// every j, within `tol`.
SandwichReport sandwich_check(const Graph& g, double tol = 1e-8);

}  // namespace heisenspec
