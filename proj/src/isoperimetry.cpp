#include "heisenspec/isoperimetry.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "heisenspec/caps.hpp"
#include "heisenspec/errors.hpp"

namespace heisenspec {

namespace {

constexpr double kRelativeSlack = 1e-12;

struct BitAdjacency {
  std::vector<std::uint64_t> mask;
  std::vector<long> degree;
};

BitAdjacency bit_adjacency(const Graph& g) {
  BitAdjacency adj;
  adj.mask.assign(g.order(), 0);
  adj.degree.assign(g.order(), 0);
  for (const Edge& e : g.edges()) {
    adj.mask[e.u] |= std::uint64_t{1} << e.v;
    adj.mask[e.v] |= std::uint64_t{1} << e.u;
    ++adj.degree[e.u];
    ++adj.degree[e.v];
  }
  return adj;
}

// Visits the subsets with Gray indices first..last-1 as (mask, size, boundary,
// index). Consecutive Gray codes differ in bit ctz(i), so toggling vertex v
// changes the boundary by +-(deg v - 2 |N(v) and X\{v}|).
template <typename Visit>
void gray_segment(const BitAdjacency& adj, std::uint64_t first, std::uint64_t last, Visit&& visit) {
  if (first >= last) return;
  std::uint64_t set = first ^ (first >> 1);
  std::size_t size = static_cast<std::size_t>(std::popcount(set));
  long boundary = 0;
  for (std::uint64_t rest = set; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    boundary += std::popcount(adj.mask[v] & ~set);
  }
  visit(set, size, boundary, first);
  for (std::uint64_t i = first + 1; i < last; ++i) {
    const int v = std::countr_zero(i);
    const std::uint64_t bit = std::uint64_t{1} << v;
    const long inside = std::popcount(adj.mask[v] & set & ~bit);
    if (set & bit) {
      set ^= bit;
      --size;
      boundary -= adj.degree[v] - 2 * inside;
    } else {
      set |= bit;
      ++size;
      boundary += adj.degree[v] - 2 * inside;
    }
    visit(set, size, boundary, i);
  }
}

VertexSet set_from_mask(std::uint64_t mask) {
  std::vector<Vertex> members;
  for (; mask != 0; mask &= mask - 1) members.push_back(static_cast<Vertex>(std::countr_zero(mask)));
  return VertexSet(std::move(members));
}

void require_p(double p) {
  if (!(p >= 1) || std::isinf(p)) throw ValidationError("p must be a finite real >= 1");
}

double balance(std::size_t s, std::size_t n) { return static_cast<double>(std::min(s, n - s)); }

}  // namespace

EIPProfile eip_bruteforce(const Graph& g, unsigned threads) {
  const std::size_t n = g.order();
  require_within(n, caps().eip_vertices, "vertices for exhaustive EIP (use sampling for larger graphs)");
  EIPProfile profile;
  profile.n = n;
  const std::size_t half = n / 2;
  if (half == 0) return profile;

  // Vertex n-1 is never in the scanned set; sets containing it are reached as
  // complements. Candidates are ordered by (boundary, gray index, complement).
  struct Best {
    long boundary = std::numeric_limits<long>::max();
    std::uint64_t index = 0;
    int tag = 0;
    std::uint64_t mask = 0;
  };
  const BitAdjacency adj = bit_adjacency(g);
  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(count, 64))));

  std::vector<std::vector<Best>> local(workers, std::vector<Best>(half));
  auto offer = [](Best& best, long b, std::uint64_t index, int tag, std::uint64_t mask) {
    if (std::tie(b, index, tag) < std::tie(best.boundary, best.index, best.tag)) best = {b, index, tag, mask};
  };
  auto run = [&](unsigned w) {
    const std::uint64_t first = count * w / workers;
    const std::uint64_t last = count * (w + 1) / workers;
    auto& best = local[w];
    gray_segment(adj, first, last, [&](std::uint64_t set, std::size_t s, long b, std::uint64_t index) {
      if (s >= 1 && s <= half) offer(best[s - 1], b, index, 0, set);
      const std::size_t t = n - s;
      if (t >= 1 && t <= half) offer(best[t - 1], b, index, 1, full ^ set);
    });
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  std::vector<Best> merged(half);
  for (const auto& part : local)
    for (std::size_t s = 0; s < half; ++s)
      if (std::tie(part[s].boundary, part[s].index, part[s].tag) <
          std::tie(merged[s].boundary, merged[s].index, merged[s].tag))
        merged[s] = part[s];
  for (const Best& best : merged) {
    profile.minima.push_back(static_cast<std::size_t>(best.boundary));
    profile.witnesses.push_back(set_from_mask(best.mask));
  }
  return profile;
}

IsoFit iso_fit(const EIPProfile& profile, double delta) {
  if (!(delta > 1)) throw ValidationError("isoperimetric dimension must exceed 1");
  if (profile.minima.empty()) throw ValidationError("cannot fit an empty isoperimetric profile");
  const double exponent = 1.0 - 1.0 / delta;
  IsoFit fit{delta, std::numeric_limits<double>::infinity(), true};
  for (std::size_t s = 1; s <= profile.minima.size(); ++s)
    fit.c = std::min(fit.c, static_cast<double>(profile.e(s)) / std::pow(static_cast<double>(s), exponent));
  return fit;
}

bool fit_holds(const EIPProfile& profile, const IsoFit& fit) {
  const double exponent = 1.0 - 1.0 / fit.delta;
  for (std::size_t s = 1; s <= profile.minima.size(); ++s) {
    const double needed = fit.c * std::pow(static_cast<double>(s), exponent);
    if (static_cast<double>(profile.e(s)) < needed * (1 - kRelativeSlack)) return false;
  }
  return true;
}

Eigen::VectorXd indicator(std::size_t n, const VertexSet& set) {
  Eigen::VectorXd f = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  for (Vertex v : set) {
    if (v >= n) throw ValidationError("vertex " + std::to_string(v + 1) + " out of range");
    f(v) = 1.0;
  }
  return f;
}

double functional_g_p(const Graph& g, const VertexSet& set, double p) {
  require_p(p);
  const double n = static_cast<double>(g.order());
  const double s = static_cast<double>(set.size());
  if (n == 0 || s == 0 || s == n) return 0;
  return std::pow(2 * s * (n - s) / n, 1 / p);
}

double g_functional(const Eigen::VectorXd& f, double p) {
  require_p(p);
  const auto n = f.size();
  if (n == 0) return 0;
  double total = 0;
  for (Eigen::Index x = 0; x < n; ++x)
    for (Eigen::Index y = 0; y < n; ++y) total += std::pow(std::abs(f(x) - f(y)), p);
  return std::pow(total / static_cast<double>(n), 1 / p);
}

double functional_rho_p(const Graph& g, const Eigen::VectorXd& f, double p) {
  require_p(p);
  if (static_cast<std::size_t>(f.size()) != g.order()) throw ValidationError("function length differs from n");
  if (f.size() == 0) return 0;
  const double mean = f.mean();
  double total = 0;
  for (Eigen::Index x = 0; x < f.size(); ++x) total += std::pow(std::abs(f(x) - mean), p);
  return std::pow(total, 1 / p);
}

double rho_lower_factor(double p) {
  require_p(p);
  if (p == 1) return 1;
  // rho^p / g^p = ((1-t)^(p-1) + t^(p-1)) / 2 with t = |X|/n: concave in t
  // for p < 2 (infimum 1/2 at the ends), convex for p >= 2 (minimum at 1/2).
  return std::pow(2.0, -std::max(1 - 1 / p, 1 / p));
}

IsoperimetricCheck check_isoperimetric(const Graph& g, double C, double p, Functional functional) {
  require_p(p);
  const std::size_t n = g.order();
  require_within(n, caps().isoperimetric_vertices, "vertices for the exhaustive isoperimetric check");
  IsoperimetricCheck out;
  out.worst_ratio = std::numeric_limits<double>::infinity();
  if (n < 2) {
    out.holds = true;
    return out;
  }
  // Both functionals depend on the indicator only through |X|.
  std::vector<double> denominator(n + 1, 0);
  for (std::size_t s = 1; s < n; ++s) {
    std::vector<Vertex> first(s);
    for (std::size_t i = 0; i < s; ++i) first[i] = static_cast<Vertex>(i);
    const Eigen::VectorXd f = indicator(n, VertexSet(std::move(first)));
    denominator[s] = functional == Functional::Rho ? functional_rho_p(g, f, p) : g_functional(f, p);
  }

  std::size_t worst_size = 0;
  std::uint64_t worst_mask = 0;
  const BitAdjacency adj = bit_adjacency(g);
  gray_segment(adj, 0, std::uint64_t{1} << n, [&](std::uint64_t set, std::size_t s, long b, std::uint64_t) {
    if (s == 0 || s == n) return;
    const double ratio = static_cast<double>(b) / denominator[s];
    const bool lower = ratio < out.worst_ratio * (1 - kRelativeSlack);
    const bool tie = !lower && std::abs(ratio - out.worst_ratio) <= kRelativeSlack * out.worst_ratio;
    if (lower || worst_size == 0 || (tie && balance(s, n) > balance(worst_size, n))) {
      if (lower || worst_size == 0) out.worst_ratio = ratio;
      worst_size = s;
      worst_mask = set;
    }
  });
  out.witness = set_from_mask(worst_mask);
  out.holds = out.worst_ratio >= C * (1 - kRelativeSlack);
  return out;
}

double optimal_isoperimetric_constant(const Graph& g, double p, Functional functional) {
  return check_isoperimetric(g, 0, p, functional).worst_ratio;
}

SubgraphFamily::SubgraphFamily(const Graph& g, std::size_t k, std::optional<Sampling> sampling) : graph_(g) {
  const std::size_t n = g.order();
  if (k < 1 || k > n) throw ValidationError("subgraph family needs 1 <= k <= n");
  const std::uint64_t total = binomial(n, k - 1);
  if (!sampling || sampling->count >= total) {
    require_within(total, caps().family_members, "induced subgraph family (use sampling)");
    deleted_ = enumerate_ksets(n, k - 1);
    exhaustive_ = true;
    return;
  }
  exhaustive_ = false;
  std::mt19937_64 rng(sampling->seed);
  std::set<VertexSet> seen;
  while (deleted_.size() < sampling->count) {
    VertexSet w = random_kset(n, k - 1, rng);
    if (seen.insert(w).second) deleted_.push_back(std::move(w));
  }
}

FamilyConstant family_constant(const Graph& g, std::size_t k, double delta_k, std::optional<Sampling> sampling,
                               unsigned threads) {
  if (k >= g.order()) throw ValidationError("family members need at least 2 vertices (k < n)");
  SubgraphFamily family(g, k, sampling);
  FamilyConstant out;
  out.a_k = std::numeric_limits<double>::infinity();
  out.certified = family.exhaustive();
  out.members = family.size();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const InducedSubgraph member = family[i];
    const double c = iso_fit(eip_bruteforce(member.graph, threads), delta_k).c;
    if (c < out.a_k) {
      out.a_k = c;
      out.worst_deleted = family.deleted(i);
    }
  }
  return out;
}

std::size_t johnson_boundary(std::size_t n, std::size_t k, const std::vector<KSet>& omega) {
  KSetIndex index(n, k);
  std::unordered_set<std::uint64_t> inside;
  for (const KSet& x : omega) {
    if (x.size() != k) throw ValidationError("johnson_boundary: set of the wrong size");
    if (k > 0 && x[k - 1] >= n) throw ValidationError("johnson_boundary: vertex out of range");
    inside.insert(index.rank(x));
  }
  std::size_t count = 0;
  std::vector<Vertex> scratch;
  for (std::uint64_t r : inside) {
    const KSet x = index.unrank(r);
    for (std::size_t pos = 0; pos < k; ++pos) {
      for (Vertex in = 0; in < n; ++in) {
        if (x.contains(in)) continue;
        scratch.assign(x.begin(), x.end());
        scratch[pos] = in;
        std::sort(scratch.begin(), scratch.end());
        if (!inside.contains(index.rank(scratch))) ++count;
      }
    }
  }
  return count;
}

SymProdBoundReport verify_symprod_bound(const Graph& g, std::size_t k, double p, double C,
                                        std::optional<Sampling> sampling) {
  require_p(p);
  if (!(C > 0)) throw ValidationError("isoperimetric constant must be positive");
  const std::size_t n = g.order();
  if (k < 1 || k > n) throw ValidationError("symmetric product needs 1 <= k <= n");

  const SubgraphFamily family(g, k);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto check = check_isoperimetric(family[i].graph, C, p, Functional::Rho);
    if (!check.holds) {
      std::ostringstream os;
      os << "C = " << C << " is not certified: deleting " << to_string(family.deleted(i))
         << " leaves a subgraph with worst ratio " << check.worst_ratio;
      throw ValidationError(os.str());
    }
  }

  const SymProduct sym = build_symmetric_product(g, k);
  const SymProduct johnson = build_symmetric_product(generators::complete(n), k);
  const std::size_t dim = sym.ksets.size();
  const double scale = C / static_cast<double>(n - k + 1);

  SymProdBoundReport report;
  report.holds = true;
  report.tightest_ratio = std::numeric_limits<double>::infinity();
  std::vector<bool> member(dim, false);
  auto crossing = [&](const Graph& graph) {
    std::size_t count = 0;
    for (const Edge& e : graph.edges()) count += member[e.u] != member[e.v];
    return count;
  };
  auto evaluate = [&] {
    ++report.scanned;
    const double lhs = static_cast<double>(crossing(sym.graph));
    const double rhs = scale * std::pow(2.0 * static_cast<double>(crossing(johnson.graph)), 1 / p);
    if (lhs < rhs * (1 - kRelativeSlack)) report.holds = false;
    if (rhs <= 0) return;
    ++report.nontrivial;
    const double ratio = lhs / rhs;
    if (std::abs(ratio - 1) <= 1e-9) ++report.tight;
    if (ratio < report.tightest_ratio) {
      report.tightest_ratio = ratio;
      report.witness.clear();
      for (std::size_t i = 0; i < dim; ++i)
        if (member[i]) report.witness.push_back(sym.ksets[i]);
    }
  };

  if (dim <= caps().omega_scan_dim) {
    report.exhaustive = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
      for (std::size_t i = 0; i < dim; ++i) member[i] = (mask >> i) & 1U;
      evaluate();
    }
  } else {
    const Sampling plan = sampling.value_or(Sampling{4096, 0});
    std::mt19937_64 rng(plan.seed);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t t = 0; t < plan.count; ++t) {
      for (std::size_t i = 0; i < dim; ++i) member[i] = coin(rng);
      evaluate();
    }
  }
  return report;
}

double corollary_constant(double C, std::size_t n, std::size_t k, double p) {
  if (!(C > 0)) throw ValidationError("isoperimetric constant must be positive");
  if (!(p >= 1)) throw ValidationError("p must be >= 1");
  if (k < 1 || k > n) throw ValidationError("corollary constant needs 1 <= k <= n");
  return C * std::pow(static_cast<double>(n), 1 / p) / static_cast<double>(n - k + 1);
}

}  // namespace heisenspec
