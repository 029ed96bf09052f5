#include "heisenspec/lower_bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "heisenspec/errors.hpp"
#include "heisenspec/spectral.hpp"
#include "heisenspec/symmetric_product.hpp"

namespace heisenspec {

namespace {

// ((delta-2)/(delta-1))^2, which tends to 1 as delta grows.
double dimension_factor(double delta) {
  if (std::isinf(delta)) return 1;
  const double r = (delta - 2) / (delta - 1);
  return r * r;
}

}  // namespace

LowerBoundRecord lower_bound_lambda_graph(double b, double beta, double c, double delta, std::size_t j,
                                          double m_edges) {
  LowerBoundRecord rec;
  rec.j = j;
  rec.b = b;
  rec.beta = beta;
  rec.c = c;
  rec.delta = delta;
  rec.edges = m_edges;
  if (!(delta > 2)) {
    rec.reason = "isoperimetric dimension <= 2";
    return rec;
  }
  if (!(m_edges > 0)) {
    rec.reason = "graph has no edges";
    return rec;
  }
  if (!(beta > 0)) throw ValidationError("maximum degree must be positive");
  // lambda_0 = 0; the j-power alone would give 0^0 = 1 at delta = inf.
  if (j == 0) {
    rec.bound = 0.0;
    return rec;
  }
  const double jd = static_cast<double>(j);
  rec.bound = b * c * c / (16 * std::numbers::e * beta * beta) * dimension_factor(delta) *
              std::pow(jd * beta / (18 * m_edges), 2 / delta);
  return rec;
}

double c_delta(double c, double beta, double delta) {
  if (!(beta >= 1)) throw ValidationError("maximum degree must be at least 1");
  if (!(delta > 1)) throw ValidationError("isoperimetric dimension must exceed 1");
  return c / std::pow(beta, 1 - 1 / delta);
}

LowerBoundRecord lower_bound_lambda_Lk(const Graph& g, std::size_t k, std::size_t j, double a_k, double delta_k,
                                       const IsoFit& fit, EdgeCountSource source) {
  const std::size_t n = g.order();
  if (k < 1 || k >= n) throw ValidationError("L_k lower bound needs 1 <= k <= n - 1");
  if (!(fit.delta > 1)) throw ValidationError("isoperimetric dimension must exceed 1");
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  const double beta1 = static_cast<double>(degree_profile(g).max_degree);
  const double count = static_cast<double>(binomial(n, k));
  const double degree_bound_edges = kd * beta1 * count / 2;
  const double exact_edges = static_cast<double>(g.size()) * static_cast<double>(binomial(n - 2, k - 1));

  LowerBoundRecord rec;
  rec.k = k;
  rec.j = j;
  rec.b = fit.c * std::pow(kd, 1 - 1 / fit.delta);
  rec.beta = kd * beta1;
  rec.c = a_k * std::pow(nd, 1 - 1 / delta_k) / (nd - kd + 1);
  rec.delta = delta_k;
  rec.edge_source = source;
  rec.edges = source == EdgeCountSource::Exact ? exact_edges : degree_bound_edges;
  if (!(delta_k > 2)) {
    rec.reason = "family dimension delta_k <= 2";
    return rec;
  }
  if (!(a_k > 0)) {
    rec.reason = "family constant a_k = 0 (some induced subgraph has an empty boundary)";
    return rec;
  }
  if (!(rec.edges > 0)) {
    rec.reason = "token graph has no edges";
    return rec;
  }

  if (j == 0) {
    rec.bound = 0.0;
    return rec;
  }
  const double scale = std::pow(nd, 1 - 1 / delta_k) / (nd - kd + 1);
  double bound = fit.c * std::pow(kd, -1 / fit.delta) * a_k * a_k / (16 * std::numbers::e * kd * beta1 * beta1) *
                 scale * scale * dimension_factor(delta_k) *
                 std::pow(static_cast<double>(j) / (9 * count), 2 / delta_k);
  // The display assumes the degree-bound edge count; fewer edges only raise it.
  if (source == EdgeCountSource::Exact) bound *= std::pow(degree_bound_edges / exact_edges, 2 / delta_k);
  rec.bound = bound;
  return rec;
}

SandwichReport sandwich_check(const Graph& g, double tol) {
  SandwichReport report;
  const DegreeProfile degrees = degree_profile(g);
  report.b = static_cast<double>(degrees.min_degree);
  report.beta = static_cast<double>(degrees.max_degree);
  report.laplacian = eigenvalues(laplacian_matrix(g)).eigenvalues;
  report.normalized = eigenvalues(normalized_laplacian(g)).eigenvalues;
  report.holds = true;
  for (std::size_t j = 0; j < report.laplacian.size(); ++j) {
    const double l = report.laplacian[j];
    const double ln = report.normalized[j];
    if (report.b * ln > l + tol || l > report.beta * ln + tol) {
      report.holds = false;
      report.failing_j = j;
      std::ostringstream os;
      os.precision(12);
      os << "j = " << j << ": b*normalized = " << report.b * ln << ", laplacian = " << l
         << ", beta*normalized = " << report.beta * ln;
      report.detail = os.str();
      break;
    }
  }
  return report;
}

}  // namespace heisenspec
