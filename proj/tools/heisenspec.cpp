// Command-line front end: spectra, upper and lower bound reports, and the
// validation suites.

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heisenspec/diameter.hpp"
#include "heisenspec/errors.hpp"
#include "heisenspec/graph.hpp"
#include "heisenspec/isoperimetry.hpp"
#include "heisenspec/lower_bounds.hpp"
#include "heisenspec/meanfield.hpp"
#include "heisenspec/report.hpp"
#include "heisenspec/spectral.hpp"
#include "heisenspec/symmetric_product.hpp"

using namespace heisenspec;

namespace {

enum Exit : int { kOk = 0, kValidationFailure = 1, kInputError = 2, kSizeCap = 3 };

struct Common {
  std::string graph_path;
  std::string format;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

double snap(double x) { return std::abs(x) < 1e-9 ? 0.0 : x; }

std::vector<double> lk_spectrum(const Graph& g, std::size_t k) { return eigenvalues(laplacian_lk(g, k)).eigenvalues; }

void print_report(const BoundReport& report, const std::string& format) {
  if (format == "csv") {
    std::cout << to_csv(report);
  } else {
    std::cout << nlohmann::json(report).dump(2) << '\n';
  }
}

std::vector<std::size_t> all_j(std::uint64_t count) {
  if (count > caps().dense_dim)
    throw ValidationError("C(n,k) = " + std::to_string(count) + " is too large to list every j; pass --j");
  std::vector<std::size_t> js;
  for (std::size_t j = 1; j + 1 <= count; ++j) js.push_back(j);
  return js;
}

double parse_delta(const std::string& text) {
  if (text == "inf" || text == "infinity") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(value > 1)) throw ValidationError("invalid delta \"" + text + "\" (need a real > 1 or inf)");
  return value;
}

std::string delta_text(double delta) {
  if (std::isinf(delta)) return "inf";
  std::ostringstream os;
  os << delta;
  return os.str();
}

int cmd_spectrum(const Common& common, std::size_t k) {
  const Graph g = read_graph_file(common.graph_path);
  const auto values = lk_spectrum(g, k);
  if (common.format == "json") {
    nlohmann::json out = {{"k", k}, {"eigenvalues", nlohmann::json::array()}};
    for (double x : values) out["eigenvalues"].push_back(snap(x));
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << std::setprecision(12);
    for (std::size_t i = 0; i < values.size(); ++i) std::cout << (i ? " " : "") << snap(values[i]);
    std::cout << '\n';
  }
  return kOk;
}

struct UpperArgs {
  std::size_t k = 1;
  std::vector<std::size_t> js;
  std::size_t trials = 16;
  std::uint64_t seed = 0;
  bool pseudocode = false;
  bool refined_mu = false;
  bool oracle = false;
};

int cmd_upper(const Common& common, const UpperArgs& args) {
  const Graph g = read_graph_file(common.graph_path);
  const std::uint64_t count = binomial(g.order(), args.k);
  const auto js = args.js.empty() ? all_j(count) : args.js;
  const DistanceMatrix dist = all_pairs_distances(g);
  UpperBoundOptions options;
  options.trials = args.trials;
  options.seed = args.seed;
  options.exponent = args.pseudocode ? DiameterExponent::Pseudocode : DiameterExponent::Certified;
  options.refined_mu = args.refined_mu;
  options.threads = common.threads;

  std::vector<double> exact;
  if (args.oracle) exact = lk_spectrum(g, args.k);

  BoundReport report;
  report.graph = graph_meta(g);
  for (std::size_t j : js) {
    const UpperBoundRecord rec = upper_bound_lambda(g, dist, args.k, j, options);
    BoundRow row;
    row.k = args.k;
    row.j = j;
    row.upper = rec.bound;
    row.upper_note = rec.note;
    row.lower_reason = "not computed";
    if (args.oracle) row.exact = snap(exact[j]);
    row.diameter = DiameterInfo{rec.estimate.d, rec.estimate.trials, rec.estimate.seed, rec.estimate.witness};
    std::ostringstream prov;
    prov << "mu=" << rec.mu << "; N=" << rec.N << "; exponent="
         << (rec.certified ? "1/(d-1)" : "1/d (non-certified)");
    row.provenance = prov.str();
    report.rows.push_back(std::move(row));
  }
  print_report(report, common.format);
  return kOk;
}

struct LowerArgs {
  std::size_t k = 1;
  std::vector<std::size_t> js;
  std::vector<std::string> delta_grid{"2.5", "3", "4", "6", "inf"};
  std::optional<std::size_t> sample;
  std::uint64_t seed = 0;
  bool oracle = false;
};

int cmd_lower(const Common& common, const LowerArgs& args) {
  const Graph g = read_graph_file(common.graph_path);
  const std::uint64_t count = binomial(g.order(), args.k);
  const auto js = args.js.empty() ? all_j(count) : args.js;
  std::vector<double> grid;
  for (const auto& text : args.delta_grid) grid.push_back(parse_delta(text));

  std::optional<Sampling> sampling;
  if (args.sample) sampling = Sampling{*args.sample, args.seed};
  const EIPProfile profile = eip_bruteforce(g, common.threads);
  std::vector<double> exact;
  if (args.oracle) exact = lk_spectrum(g, args.k);

  BoundReport report;
  report.graph = graph_meta(g);
  for (double delta : grid) {
    const IsoFit fit = iso_fit(profile, delta);
    const FamilyConstant family = family_constant(g, args.k, delta, sampling, common.threads);
    for (std::size_t j : js) {
      const LowerBoundRecord rec = lower_bound_lambda_Lk(g, args.k, j, family.a_k, delta, fit);
      BoundRow row;
      row.k = args.k;
      row.j = j;
      row.lower = rec.bound;
      row.lower_reason = rec.reason;
      row.upper_note = "not computed";
      if (args.oracle) row.exact = snap(exact[j]);
      row.fit = FitInfo{fit.delta, fit.c, fit.certified};
      row.family = FamilyInfo{delta, family.a_k, family.certified, family.members};
      row.provenance = std::string("delta=delta_k=") + delta_text(delta) + "; edges=" +
                       (rec.edge_source == EdgeCountSource::Exact ? "exact" : "degree-bound") +
                       (family.certified ? "" : "; family sampled (heuristic)");
      report.rows.push_back(std::move(row));
    }
  }
  print_report(report, common.format);
  return kOk;
}

// Each suite prints one line and reports whether it passed.
class SuiteRunner {
 public:
  void record(const std::string& name, bool passed, const std::string& detail = "") {
    std::cout << (passed ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << '\n';
    all_passed_ = all_passed_ && passed;
  }
  void skip(const std::string& name, const std::string& why) { std::cout << "SKIP " << name << ": " << why << '\n'; }
  bool all_passed() const { return all_passed_; }

 private:
  bool all_passed_ = true;
};

struct ValidateArgs {
  std::size_t max_n = 8;
  bool inject_fault = false;
};

int cmd_validate(const Common& common, const ValidateArgs& args) {
  const Graph g = read_graph_file(common.graph_path);
  const std::size_t n = g.order();
  if (n > args.max_n)
    throw SizeCapError("validate runs on n <= " + std::to_string(args.max_n) + " (graph has " + std::to_string(n) + ")");
  SuiteRunner suites;

  HamiltonianDense h = build_heisenberg_dense(g);
  if (args.inject_fault && h.matrix.rows() > 1) {
    h.matrix(0, 1) += 0.5;
    h.matrix(1, 0) += 0.5;
  }
  const DecompositionReport decomposition = verify_decomposition(g, h);
  suites.record("decomposition", decomposition.passed, decomposition.detail);

  bool complements = true;
  for (std::size_t k = 0; k <= n; ++k) complements = complements && complement_check(g, k).equal;
  suites.record("complement", complements);

  if (is_connected(g) && n >= 2) {
    const double gap = lk_spectrum(g, 1)[1];
    double worst = 0;
    for (std::size_t k = 2; k + 1 <= n; ++k) worst = std::max(worst, std::abs(lk_spectrum(g, k)[1] - gap));
    std::ostringstream os;
    os << "max deviation " << worst;
    suites.record("aldous-gap", worst <= 1e-9, worst <= 1e-9 ? "" : os.str());
  } else {
    suites.skip("aldous-gap", "graph is not connected");
  }

  bool isolated = false;
  for (Vertex v = 0; v < n; ++v) isolated = isolated || g.degree(v) == 0;
  if (!isolated && n > 0) {
    const SandwichReport sandwich = sandwich_check(g);
    suites.record("sandwich", sandwich.holds, sandwich.detail);
  } else {
    suites.skip("sandwich", "graph has an isolated vertex");
  }

  bool bounds_hold = true;
  std::string bounds_detail;
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<Vertex> members;
      for (Vertex v = 0; v < n; ++v)
        if ((mask >> v) & 1U) members.push_back(v);
      const VertexSet x(std::move(members));
      const Eigen::VectorXd f = indicator(n, x);
      const double gp = functional_g_p(g, x, p);
      const double rho = functional_rho_p(g, f, p);
      const bool ok = rho_lower_factor(p) * gp <= rho + 1e-12 && rho <= gp + 1e-12 &&
                      sobolev_seminorm(g, f) == static_cast<double>(boundary_size(g, x));
      if (!ok && bounds_hold) bounds_detail = "p = " + std::to_string(p) + ", X = " + to_string(x);
      bounds_hold = bounds_hold && ok;
    }
  }
  suites.record("functional-bounds", bounds_hold, bounds_detail);

  std::optional<std::size_t> scan_k;
  for (std::size_t k = 2; k < n && !scan_k; ++k)
    if (binomial(n, k) <= caps().omega_scan_dim) scan_k = k;
  if (scan_k) {
    for (double p : {1.0, 2.0}) {
      const SubgraphFamily family(g, *scan_k);
      double C = std::numeric_limits<double>::infinity();
      for (const InducedSubgraph& member : family)
        C = std::min(C, optimal_isoperimetric_constant(member.graph, p));
      const std::string name = "symprod-bound p=" + std::to_string(static_cast<int>(p));
      if (!(C > 0)) {
        suites.skip(name, "some induced subgraph has isoperimetric constant 0");
        continue;
      }
      const SymProdBoundReport bound = verify_symprod_bound(g, *scan_k, p, C);
      suites.record(name, bound.holds);
    }
  } else {
    suites.skip("symprod-bound", "no k with C(n,k) <= " + std::to_string(caps().omega_scan_dim));
  }

  if (n >= 1) {
    const MeanFieldSpectrum mf = meanfield_spectrum(n);
    const auto values = eigenvalues(build_heisenberg_dense(generators::complete(n)).matrix).eigenvalues;
    bool levels = mf.total_multiplicity() == values.size();
    std::size_t at = 0;
    for (const auto& level : mf.levels)
      for (std::uint64_t i = 0; i < level.multiplicity && levels; ++i, ++at)
        levels = at < values.size() && std::abs(values[at] - static_cast<double>(level.eigenvalue)) <= 1e-8;
    bool projectors = true;
    for (std::size_t k = 1; 2 * k <= n; ++k) projectors = projectors && reconstruct_lk(n, k).passed;
    const ReconstructionReport assembled = reconstruct_hamiltonian(n);
    suites.record("mean-field", levels && projectors && assembled.passed, assembled.detail);
  }

  return suites.all_passed() ? kOk : kValidationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenvalue bounds for ferromagnetic Heisenberg Hamiltonians on graphs"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads, "Worker threads")->check(CLI::PositiveNumber);

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", common.graph_path, "Edge-list file: \"n m\" then m lines \"u v\"")->required();
  };

  std::size_t spectrum_k = 1;
  auto* spectrum = app.add_subcommand("spectrum", "Sorted eigenvalues of L_k");
  add_graph(spectrum);
  spectrum->add_option("-k,--k", spectrum_k, "Token count")->required();
  spectrum->add_option("--format", common.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  UpperArgs upper_args;
  auto* upper = app.add_subcommand("upper", "Upper bounds on lambda_j(L_k) from generalized diameters");
  add_graph(upper);
  upper->add_option("-k,--k", upper_args.k, "Token count")->required();
  upper->add_option("-j,--j", upper_args.js, "Eigenvalue indices (default: all)")->delimiter(',');
  upper->add_option("--trials", upper_args.trials, "Random restarts")->check(CLI::PositiveNumber);
  upper->add_option("--seed", upper_args.seed, "Seed for every random choice");
  upper->add_flag("--pseudocode-exponent", upper_args.pseudocode, "Use N^(1/d); not a certified bound");
  upper->add_flag("--refined-mu", upper_args.refined_mu, "k = 1: largest plus second-largest degree");
  upper->add_flag("--oracle", upper_args.oracle, "Add exact eigenvalues from the dense solver");
  upper->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  LowerArgs lower_args;
  auto* lower = app.add_subcommand("lower", "Isoperimetric lower bounds on lambda_j(L_k)");
  add_graph(lower);
  lower->add_option("-k,--k", lower_args.k, "Token count")->required();
  lower->add_option("-j,--j", lower_args.js, "Eigenvalue indices (default: all)")->delimiter(',');
  lower->add_option("--delta-grid", lower_args.delta_grid, "Dimensions to fit, e.g. 3,4,inf")->delimiter(',');
  lower->add_option("--sample", lower_args.sample, "Sample this many induced subgraphs");
  lower->add_option("--seed", lower_args.seed, "Seed for sampling");
  lower->add_flag("--oracle", lower_args.oracle, "Add exact eigenvalues from the dense solver");
  lower->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  ValidateArgs validate_args;
  auto* validate = app.add_subcommand("validate", "Run every property suite against the dense oracle");
  add_graph(validate);
  validate->add_option("--max-n", validate_args.max_n, "Largest accepted n");
  validate->add_flag("--inject-fault", validate_args.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (spectrum->parsed()) {
      if (common.format.empty()) common.format = "text";
      return cmd_spectrum(common, spectrum_k);
    }
    if (common.format.empty()) common.format = "json";
    if (upper->parsed()) return cmd_upper(common, upper_args);
    if (lower->parsed()) return cmd_lower(common, lower_args);
    if (validate->parsed()) return cmd_validate(common, validate_args);
  } catch (const SizeCapError& e) {
    std::cerr << "size cap: " << e.what() << '\n';
    return kSizeCap;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
