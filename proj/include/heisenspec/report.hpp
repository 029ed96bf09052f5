#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "heisenspec/extended.hpp"
#include "heisenspec/graph.hpp"
#include "heisenspec/symmetric_product.hpp"

namespace heisenspec {

struct GraphMeta {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t b = 0;
  std::size_t beta = 0;
  std::size_t components = 0;
  friend bool operator==(const GraphMeta&, const GraphMeta&) = default;
};

GraphMeta graph_meta(const Graph& g);

struct FitInfo {
  double delta = 0;
  double c = 0;
  bool certified = false;
  friend bool operator==(const FitInfo&, const FitInfo&) = default;
};

struct FamilyInfo {
  double delta_k = 0;
  double a_k = 0;
  bool certified = false;
  std::size_t members = 0;
  friend bool operator==(const FamilyInfo&, const FamilyInfo&) = default;
};

struct DiameterInfo {
  ExtendedInt d;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<KSet> witness;
  friend bool operator==(const DiameterInfo&, const DiameterInfo&) = default;
};

/// One (k, j) row. A missing lower bound carries a reason; the upper bound
/// may be +inf or 0 with a note.
struct BoundRow {
  std::size_t k = 0;
  std::size_t j = 0;
  std::optional<double> lower;
  std::string lower_reason;
  std::optional<double> upper;
  std::string upper_note;
  std::optional<double> exact;
  std::optional<DiameterInfo> diameter;
  std::optional<FitInfo> fit;
  std::optional<FamilyInfo> family;
  /// Free-form provenance such as the edge-count source or exponent form.
  std::string provenance;
  friend bool operator==(const BoundRow&, const BoundRow&) = default;
};

struct BoundReport {
  GraphMeta graph;
  std::vector<BoundRow> rows;
  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// Infinite reals serialize as "inf".
nlohmann::json number_to_json(double x);
double number_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const BoundReport& report);
void from_json(const nlohmann::json& j, BoundReport& report);

/// One header line and one line per row.
std::string to_csv(const BoundReport& report);

}  // namespace heisenspec
