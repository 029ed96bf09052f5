#include "heisenspec/assignment.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>

#include "heisenspec/errors.hpp"

namespace heisenspec {

CostMatrix::CostMatrix(std::size_t dim, std::vector<ExtendedInt> row_major)
    : dim_(dim), entries_(std::move(row_major)) {
  if (entries_.size() != dim * dim) throw ValidationError("cost matrix is not square");
}

namespace {

// Kuhn's augmenting-path matching restricted to finite entries.
bool try_augment(const CostMatrix& c, std::size_t row, std::vector<bool>& used,
                 std::vector<std::optional<std::size_t>>& owner) {
  for (std::size_t col = 0; col < c.dim(); ++col) {
    if (used[col] || c(row, col).is_infinite()) continue;
    used[col] = true;
    if (!owner[col] || try_augment(c, *owner[col], used, owner)) {
      owner[col] = row;
      return true;
    }
  }
  return false;
}

bool has_finite_perfect_matching(const CostMatrix& c) {
  std::vector<std::optional<std::size_t>> owner(c.dim());
  for (std::size_t row = 0; row < c.dim(); ++row) {
    std::vector<bool> used(c.dim(), false);
    if (!try_augment(c, row, used, owner)) return false;
  }
  return true;
}

// Shortest-augmenting-path Hungarian method with row/column potentials.
// Infinite entries are never relaxed; feasibility has been checked, so every
// phase reaches a free column through finite entries (Hall's condition).
std::vector<std::size_t> hungarian(const CostMatrix& c) {
  using Cost = long long;
  constexpr Cost kUnset = std::numeric_limits<Cost>::max();
  const std::size_t a = c.dim();
  std::vector<Cost> u(a + 1, 0), v(a + 1, 0);
  std::vector<std::size_t> match(a + 1, 0);  // match[col] = row, 1-based, 0 = free
  std::vector<std::size_t> way(a + 1, 0);
  for (std::size_t row = 1; row <= a; ++row) {
    match[0] = row;
    std::size_t col0 = 0;
    std::vector<Cost> minv(a + 1, kUnset);
    std::vector<bool> used(a + 1, false);
    do {
      used[col0] = true;
      const std::size_t r0 = match[col0];
      Cost delta = kUnset;
      std::size_t col1 = 0;
      for (std::size_t col = 1; col <= a; ++col) {
        if (used[col]) continue;
        const ExtendedInt entry = c(r0 - 1, col - 1);
        if (entry.is_finite()) {
          const Cost reduced = static_cast<Cost>(entry.value()) - u[r0] - v[col];
          if (reduced < minv[col]) {
            minv[col] = reduced;
            way[col] = col0;
          }
        }
        if (minv[col] != kUnset && minv[col] < delta) {
          delta = minv[col];
          col1 = col;
        }
      }
      for (std::size_t col = 0; col <= a; ++col) {
        if (used[col]) {
          u[match[col]] += delta;
          v[col] -= delta;
        } else if (minv[col] != kUnset) {
          minv[col] -= delta;
        }
      }
      col0 = col1;
    } while (match[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      match[col0] = match[col1];
      col0 = col1;
    } while (col0 != 0);
  }
  std::vector<std::size_t> perm(a);
  for (std::size_t col = 1; col <= a; ++col) perm[match[col] - 1] = col - 1;
  return perm;
}

ExtendedInt cost_of(const CostMatrix& c, const std::vector<std::size_t>& perm) {
  ExtendedInt total = 0;
  for (std::size_t row = 0; row < perm.size(); ++row) total += c(row, perm[row]);
  return total;
}

CostMatrix minor_without(const CostMatrix& c, std::size_t drop_rows, const std::vector<bool>& col_taken) {
  std::vector<std::size_t> cols;
  for (std::size_t col = 0; col < c.dim(); ++col)
    if (!col_taken[col]) cols.push_back(col);
  CostMatrix m(cols.size());
  for (std::size_t r = 0; r < cols.size(); ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) m(r, j) = c(drop_rows + r, cols[j]);
  return m;
}

}  // namespace

ExtendedInt min_assignment_value(const CostMatrix& cost) {
  if (cost.dim() == 0) return 0;
  if (!has_finite_perfect_matching(cost)) return ExtendedInt::infinity();
  return cost_of(cost, hungarian(cost));
}

Assignment min_assignment(const CostMatrix& cost) {
  Assignment out;
  out.value = min_assignment_value(cost);
  if (out.value.is_infinite()) return out;

  // Fix rows in order, each to the smallest column that keeps the optimum.
  const std::size_t a = cost.dim();
  std::vector<bool> taken(a, false);
  ExtendedInt spent = 0;
  for (std::size_t row = 0; row < a; ++row) {
    for (std::size_t col = 0; col < a; ++col) {
      if (taken[col] || cost(row, col).is_infinite()) continue;
      taken[col] = true;
      const ExtendedInt rest = min_assignment_value(minor_without(cost, row + 1, taken));
      if (spent + cost(row, col) + rest == out.value) {
        out.permutation.push_back(col);
        spent += cost(row, col);
        break;
      }
      taken[col] = false;
    }
  }
  return out;
}

ExtendedInt kset_distance(const KSet& x, const KSet& y, const DistanceMatrix& d) {
  if (x.size() != y.size()) throw ValidationError("kset_distance: sets have different sizes");
  std::vector<Vertex> only_x, only_y;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(only_x));
  std::set_difference(y.begin(), y.end(), x.begin(), x.end(), std::back_inserter(only_y));
  if (only_x.empty()) return 0;
  CostMatrix c(only_x.size());
  for (std::size_t r = 0; r < only_x.size(); ++r)
    for (std::size_t s = 0; s < only_y.size(); ++s) c(r, s) = d(only_x[r], only_y[s]);
  return min_assignment_value(c);
}

}  // namespace heisenspec
