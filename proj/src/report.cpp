#include "heisenspec/report.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "heisenspec/errors.hpp"

namespace heisenspec {

using nlohmann::json;

GraphMeta graph_meta(const Graph& g) {
  const DegreeProfile degrees = degree_profile(g);
  return {g.order(), g.size(), degrees.min_degree, degrees.max_degree, connected_components(g).size()};
}

json number_to_json(double x) {
  if (std::isinf(x)) return x > 0 ? json("inf") : json("-inf");
  return x;
}

double number_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw ValidationError("expected a number or \"inf\", got \"" + s + "\"");
  }
  return j.get<double>();
}

namespace {

json extended_to_json(ExtendedInt x) { return x.is_finite() ? json(x.value()) : json("inf"); }

ExtendedInt extended_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") throw ValidationError("expected an integer or \"inf\"");
    return ExtendedInt::infinity();
  }
  return ExtendedInt(j.get<std::uint64_t>());
}

json optional_number(const std::optional<double>& x) { return x ? number_to_json(*x) : json(nullptr); }

std::optional<double> optional_number_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return number_from_json(j);
}

json row_to_json(const BoundRow& row) {
  json j = {{"k", row.k},
            {"j", row.j},
            {"lower", optional_number(row.lower)},
            {"lower_reason", row.lower_reason.empty() ? json(nullptr) : json(row.lower_reason)},
            {"upper", optional_number(row.upper)},
            {"upper_note", row.upper_note.empty() ? json(nullptr) : json(row.upper_note)},
            {"exact", optional_number(row.exact)},
            {"provenance", row.provenance}};
  if (row.diameter) {
    json witness = json::array();
    for (const KSet& x : row.diameter->witness) witness.push_back(x.labels());
    j["diameter"] = {{"d", extended_to_json(row.diameter->d)},
                     {"trials", row.diameter->trials},
                     {"seed", row.diameter->seed},
                     {"witness", witness}};
  } else {
    j["diameter"] = nullptr;
  }
  j["fit"] = row.fit ? json{{"delta", number_to_json(row.fit->delta)},
                            {"c", row.fit->c},
                            {"certified", row.fit->certified}}
                     : json(nullptr);
  j["family"] = row.family ? json{{"delta_k", number_to_json(row.family->delta_k)},
                                  {"a_k", row.family->a_k},
                                  {"certified", row.family->certified},
                                  {"members", row.family->members}}
                           : json(nullptr);
  return j;
}

BoundRow row_from_json(const json& j, std::size_t n) {
  BoundRow row;
  row.k = j.at("k").get<std::size_t>();
  row.j = j.at("j").get<std::size_t>();
  row.lower = optional_number_from(j.at("lower"));
  if (!j.at("lower_reason").is_null()) row.lower_reason = j.at("lower_reason").get<std::string>();
  row.upper = optional_number_from(j.at("upper"));
  if (!j.at("upper_note").is_null()) row.upper_note = j.at("upper_note").get<std::string>();
  row.exact = optional_number_from(j.at("exact"));
  row.provenance = j.at("provenance").get<std::string>();
  if (const json& d = j.at("diameter"); !d.is_null()) {
    DiameterInfo info;
    info.d = extended_from_json(d.at("d"));
    info.trials = d.at("trials").get<std::size_t>();
    info.seed = d.at("seed").get<std::uint64_t>();
    for (const json& set : d.at("witness")) {
      const auto labels = set.get<std::vector<long long>>();
      info.witness.push_back(VertexSet::from_labels(labels, n));
    }
    row.diameter = std::move(info);
  }
  if (const json& f = j.at("fit"); !f.is_null())
    row.fit = FitInfo{number_from_json(f.at("delta")), f.at("c").get<double>(), f.at("certified").get<bool>()};
  if (const json& f = j.at("family"); !f.is_null())
    row.family = FamilyInfo{number_from_json(f.at("delta_k")), f.at("a_k").get<double>(),
                            f.at("certified").get<bool>(), f.at("members").get<std::size_t>()};
  return row;
}

std::string csv_number(const std::optional<double>& x) {
  if (!x) return "";
  if (std::isinf(*x)) return *x > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.precision(17);
  os << *x;
  return os.str();
}

std::string csv_text(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

void to_json(json& j, const BoundReport& report) {
  j = json{{"graph",
            {{"n", report.graph.n},
             {"m", report.graph.m},
             {"b", report.graph.b},
             {"beta", report.graph.beta},
             {"components", report.graph.components}}}};
  json rows = json::array();
  for (const BoundRow& row : report.rows) rows.push_back(row_to_json(row));
  j["rows"] = std::move(rows);
}

void from_json(const json& j, BoundReport& report) {
  const json& g = j.at("graph");
  report.graph = {g.at("n").get<std::size_t>(), g.at("m").get<std::size_t>(), g.at("b").get<std::size_t>(),
                  g.at("beta").get<std::size_t>(), g.at("components").get<std::size_t>()};
  report.rows.clear();
  for (const json& row : j.at("rows")) report.rows.push_back(row_from_json(row, report.graph.n));
}

std::string to_csv(const BoundReport& report) {
  std::ostringstream os;
  os << "k,j,lower,lower_reason,upper,upper_note,exact,d,trials,seed,delta,c,fit_certified,delta_k,a_k,"
        "family_certified,provenance\n";
  for (const BoundRow& row : report.rows) {
    os << row.k << ',' << row.j << ',' << csv_number(row.lower) << ',' << csv_text(row.lower_reason) << ','
       << csv_number(row.upper) << ',' << csv_text(row.upper_note) << ',' << csv_number(row.exact) << ',';
    if (row.diameter)
      os << row.diameter->d << ',' << row.diameter->trials << ',' << row.diameter->seed << ',';
    else
      os << ",,,";
    if (row.fit)
      os << csv_number(row.fit->delta) << ',' << csv_number(row.fit->c) << ',' << (row.fit->certified ? "true" : "false")
         << ',';
    else
      os << ",,,";
    if (row.family)
      os << csv_number(row.family->delta_k) << ',' << csv_number(row.family->a_k) << ','
         << (row.family->certified ? "true" : "false") << ',';
    else
      os << ",,,";
    os << csv_text(row.provenance) << '\n';
  }
  return os.str();
}

}  // namespace heisenspec
