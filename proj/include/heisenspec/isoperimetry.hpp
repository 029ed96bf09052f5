#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "heisenspec/graph.hpp"
#include "heisenspec/symmetric_product.hpp"

namespace heisenspec {

/// Exact edge-isoperimetric profile: minima[s - 1] = min |boundary X| over
/// |X| = s, for s = 1..floor(n/2).
struct EIPProfile {
  std::size_t n = 0;
  std::vector<std::size_t> minima;
  std::vector<VertexSet> witnesses;

  std::size_t e(std::size_t s) const { return minima.at(s - 1); }
};

/// Gray-code scan over 2^(n-1) subsets with O(1) boundary updates (bitmask
/// adjacency). Workers own disjoint Gray segments; the result does not depend
/// on `threads`.
EIPProfile eip_bruteforce(const Graph& g, unsigned threads = 1);

/// Dimension/isoperimetric-number pair: |boundary X| >= c |X|^(1 - 1/delta)
/// for |X| <= n/2. delta may be +infinity.
struct IsoFit {
  double delta = 0;
  double c = 0;
  bool certified = false;
};

/// Largest c for the given delta: min_s e_s / s^(1 - 1/delta).
IsoFit iso_fit(const EIPProfile& profile, double delta);

/// True when every profile entry satisfies the fit (relative slack 1e-12).
bool fit_holds(const EIPProfile& profile, const IsoFit& fit);

/// f as an indicator of `set` on n vertices.
Eigen::VectorXd indicator(std::size_t n, const VertexSet& set);

/// Sum over edges of |f(u) - f(v)|.
template <typename Derived>
double sobolev_seminorm(const Graph& g, const Eigen::MatrixBase<Derived>& f) {
  if (static_cast<std::size_t>(f.size()) != g.order()) throw ValidationError("function length differs from n");
  double total = 0;
  for (const Edge& e : g.edges()) total += std::abs(double(f(e.u)) - double(f(e.v)));
  return total;
}

/// Closed form of g_p on an indicator: (2|X||V\X| / |V|)^(1/p).
double functional_g_p(const Graph& g, const VertexSet& set, double p);

/// g_p(f) = ((1/|V|) sum_{x,y} |f(x) - f(y)|^p)^(1/p), ordered pairs.
double g_functional(const Eigen::VectorXd& f, double p);

/// rho_p(f) = (sum_x |f(x) - mean(f)|^p)^(1/p).
double functional_rho_p(const Graph& g, const Eigen::VectorXd& f, double p);

/// Largest factor f(p) with rho_p(1_X) >= f(p) g_p(1_X) for every X:
/// 1 at p = 1, 2^(-1/p) on (1, 2], 2^(-(1 - 1/p)) for p >= 2. The factor
/// 2^(-(1 - 1/p)) alone fails on (1, 2) for unbalanced X.
double rho_lower_factor(double p);

enum class Functional { Rho, G };

struct IsoperimetricCheck {
  bool holds = false;
  /// min over nontrivial X of |boundary X| / functional(1_X); +inf when n < 2.
  double worst_ratio = 0;
  VertexSet witness;
};

/// Exhaustive test of |boundary X| >= C * functional_p(1_X) over every X.
/// Among equal worst ratios the most balanced X is reported.
IsoperimetricCheck check_isoperimetric(const Graph& g, double C, double p, Functional functional = Functional::Rho);

/// Largest C for which the graph is (C, functional_p)-isoperimetric.
double optimal_isoperimetric_constant(const Graph& g, double p, Functional functional = Functional::Rho);

/// Seeded uniform sampling of a family or subset space. Results drawn this
/// way are heuristic, never certified.
struct Sampling {
  std::size_t count = 0;
  std::uint64_t seed = 0;
};

/// V(G, k): vertex-induced subgraphs obtained by deleting k - 1 vertices.
class SubgraphFamily {
 public:
  SubgraphFamily(const Graph& g, std::size_t k, std::optional<Sampling> sampling = std::nullopt);

  std::size_t size() const { return deleted_.size(); }
  bool exhaustive() const { return exhaustive_; }
  const VertexSet& deleted(std::size_t i) const { return deleted_[i]; }
  InducedSubgraph operator[](std::size_t i) const { return induced_subgraph(graph_, deleted_[i]); }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = InducedSubgraph;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = InducedSubgraph;

    iterator(const SubgraphFamily* family, std::size_t pos) : family_(family), pos_(pos) {}
    InducedSubgraph operator*() const { return (*family_)[pos_]; }
    iterator& operator++() { ++pos_; return *this; }
    iterator operator++(int) { auto copy = *this; ++pos_; return copy; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.pos_ == b.pos_; }

   private:
    const SubgraphFamily* family_;
    std::size_t pos_;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, deleted_.size()}; }

 private:
  Graph graph_;
  std::vector<VertexSet> deleted_;
  bool exhaustive_ = true;
};

struct FamilyConstant {
  double a_k = 0;
  bool certified = false;  // exhaustive family
  std::size_t members = 0;
  VertexSet worst_deleted;
};

/// a_k = min over V(G,k) of iso_fit(eip(K), delta_k).c. Disconnected members
/// legitimately drive it to 0.
FamilyConstant family_constant(const Graph& g, std::size_t k, double delta_k,
                               std::optional<Sampling> sampling = std::nullopt, unsigned threads = 1);

/// Pairs (X in omega, Y not in omega) with |X sym-diff Y| = 2 in J(n, k).
std::size_t johnson_boundary(std::size_t n, std::size_t k, const std::vector<KSet>& omega);

struct SymProdBoundReport {
  bool holds = false;
  bool exhaustive = false;
  std::size_t scanned = 0;
  /// Subsets with a positive right-hand side, and how many of those are tight.
  std::size_t nontrivial = 0;
  std::size_t tight = 0;
  double tightest_ratio = 0;
  std::vector<KSet> witness;
};

/// Checks |boundary of Omega in G^{k}| >= C/(n-k+1) * (2 |boundary in J(n,k)|)^(1/p)
/// over every Omega when C(n,k) is within the scan cap, otherwise over
/// `sampling` random subsets. Throws ValidationError unless every member of
/// V(G,k) is (C, rho_p)-isoperimetric.
SymProdBoundReport verify_symprod_bound(const Graph& g, std::size_t k, double p, double C,
                                        std::optional<Sampling> sampling = std::nullopt);

/// C n^(1/p) / (n - k + 1).
double corollary_constant(double C, std::size_t n, std::size_t k, double p);

}  // namespace heisenspec
