#pragma once

#include <string>
#include <vector>

namespace shortdiff {

struct CatalogEntry {
  int n = 0;                     // the group is Z_n
  std::vector<int> multipliers;  // Φ = { x ↦ u·x : u ∈ multipliers }
  std::string method;            // "ferrero" or "ferrero-zero"
  int v = 0;
  int k = 0;
  long long lambda = 0;
};

/// Ferrero and Ferrero-with-zero designs for every nontrivial fixed-point-free
/// subgroup of the units acting on Z_n, 2 <= n <= max_order.
std::vector<CatalogEntry> build_catalog(int max_order, int cap = 64);

/// Distinct "v k lambda" lines, numerically sorted.
std::string render_catalog(const std::vector<CatalogEntry>& entries);

/// Every subgroup of the unit group of Z_n, as sorted multiplier lists.
std::vector<std::vector<int>> unit_subgroups(int n);

}  // namespace shortdiff
