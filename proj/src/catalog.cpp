#include "shortdiff/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "shortdiff/constructions.hpp"

namespace shortdiff {

namespace {

std::vector<int> generated(int n, std::vector<int> gens) {
  std::set<int> members{1 % n};
  std::vector<int> queue{1 % n};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int g : gens) {
      const int y = static_cast<int>(static_cast<long long>(queue[i]) * g % n);
      if (members.insert(y).second) queue.push_back(y);
    }
  return {members.begin(), members.end()};
}

}  // namespace

std::vector<std::vector<int>> unit_subgroups(int n) {
  std::vector<int> units;
  for (int u = 1; u < n; ++u)
    if (std::gcd(u, n) == 1) units.push_back(u);
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> found;
  for (int u : units) {
    auto h = generated(n, {u});
    if (seen.insert(h).second) found.push_back(h);
  }
  for (std::size_t i = 0; i < found.size(); ++i)
    for (int u : units) {
      if (std::binary_search(found[i].begin(), found[i].end(), u)) continue;
      std::vector<int> gens = found[i];
      gens.push_back(u);
      auto h = generated(n, gens);
      if (seen.insert(h).second) found.push_back(h);
    }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return found;
}

std::vector<CatalogEntry> build_catalog(int max_order, int cap) {
  if (max_order > cap)
    throw Error(ErrorKind::InvalidParameter, "max-order", json{{"max_order", max_order}, {"cap", cap}},
                "max order exceeds the configured cap");
  std::vector<CatalogEntry> out;
  for (int n = 2; n <= max_order; ++n) {
    const FiniteGroup g = FiniteGroup::cyclic(n);
    for (const auto& h : unit_subgroups(n)) {
      if (h.size() < 2) continue;
      std::vector<Endomorphism> maps;
      for (int u : h) maps.push_back(scalar_endo(g, u));
      const AutomorphismGroup phi = closure(g, maps);
      if (!is_fpf(phi).fpf) continue;
      const DesignConstruction f = ferrero(g, phi);
      out.push_back(CatalogEntry{n, h, "ferrero", f.design.v, f.design.k, f.design.lambda});
      try {
        const FerreroWithZero z = ferrero_with_zero(g, phi);
        out.push_back(CatalogEntry{n, h, "ferrero-zero", z.design.v, z.design.k, z.design.lambda});
      } catch (const Error& e) {
        // mixed subgroup case without uniform stabilizers: no sdf to report
        if (e.kind() != ErrorKind::Hypothesis) throw;
      }
    }
  }
  return out;
}

std::string render_catalog(const std::vector<CatalogEntry>& entries) {
  std::set<std::tuple<int, int, long long>> triples;
  for (const auto& e : entries) triples.emplace(e.v, e.k, e.lambda);
  std::ostringstream ss;
  for (const auto& [v, k, l] : triples) ss << v << ' ' << k << ' ' << l << '\n';
  return ss.str();
}

}  // namespace shortdiff
