#pragma once

#include <cstdint>
#include <string_view>

namespace heisenspec {

/// Desk-scale size guards. `dense_dim` bounds every dense matrix and every
/// explicitly built symmetric product; the HEISENSPEC_CAP environment
/// variable replaces it at the caller's risk.
struct SizeCaps {
  std::uint64_t dense_dim = 4096;
  unsigned eip_vertices = 24;          // 2^(n-1) subset scan
  unsigned isoperimetric_vertices = 20;  // 2^n subset scan
  std::uint64_t enumeration = 50'000'000;  // exhaustive combination scans
  std::uint64_t omega_scan_dim = 15;   // 2^N subsets of a symmetric product
  std::uint64_t family_members = 4096;  // members of V(G,k)
};

const SizeCaps& caps();

/// Throws SizeCapError naming `what` when `value > limit`.
void require_within(std::uint64_t value, std::uint64_t limit, std::string_view what);

}  // namespace heisenspec
