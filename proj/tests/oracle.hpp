#pragma once

// Brute-force reference computations straight from the definitions. This
// header deliberately uses nothing from the library: groups are raw
// addition functions, blocks are std::set<int>.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Add = std::function<int(int, int)>;
using Set = std::set<int>;

struct Group {
  int v;
  Add add;
  int neg(int a) const {
    for (int b = 0; b < v; ++b)
      if (add(a, b) == 0) return b;
    return -1;
  }
  int sub(int a, int b) const { return add(a, neg(b)); }
};

inline Group cyclic(int n) {
  return {n, [n](int a, int b) { return (a + b) % n; }};
}

/// Z_p^k with index = sum digit_i p^i.
inline Group elementary(int p, int k) {
  int v = 1;
  for (int i = 0; i < k; ++i) v *= p;
  return {v, [p, k](int a, int b) {
            int r = 0, place = 1;
            for (int i = 0; i < k; ++i) {
              r += ((a % p + b % p) % p) * place;
              a /= p;
              b /= p;
              place *= p;
            }
            return r;
          }};
}

inline Set shift(const Group& g, const Set& b, int s) {
  Set out;
  for (int x : b) out.insert(g.add(x, s));
  return out;
}

struct SdfParams {
  std::set<int> k, mu, nu;
  std::set<std::int64_t> lambda_prime;
  bool uniform() const { return k.size() == 1 && mu.size() == 1 && nu.size() == 1 && lambda_prime.size() == 1; }
};

/// Literal scan of the sdf conditions over a labeled list of blocks.
inline SdfParams sdf_params(const Group& g, const std::vector<Set>& family) {
  SdfParams p;
  for (const Set& b : family) {
    p.k.insert(static_cast<int>(b.size()));
    int mu = 0;
    for (int s = 0; s < g.v; ++s)
      if (shift(g, b, s) == b) ++mu;
    p.mu.insert(mu);
    int nu = 0;
    for (const Set& c : family) {
      bool related = false;
      for (int s = 0; s < g.v && !related; ++s) related = shift(g, c, s) == b;
      if (related) ++nu;
    }
    p.nu.insert(nu);
  }
  for (int d = 1; d < g.v; ++d) {
    std::int64_t n = 0;
    for (const Set& b : family)
      for (int a : b)
        for (int c : b)
          if (g.sub(a, c) == d) ++n;
    p.lambda_prime.insert(n);
  }
  return p;
}

inline std::set<Set> development(const Group& g, const std::vector<Set>& family) {
  std::set<Set> out;
  for (const Set& b : family)
    for (int s = 0; s < g.v; ++s) out.insert(shift(g, b, s));
  return out;
}

/// Set of pair-coverage counts over all unordered pairs, and the block sizes.
struct PairCounts {
  std::set<int> k;
  std::set<std::int64_t> lambda;
};

inline PairCounts pair_counts(int v, const std::set<Set>& blocks) {
  PairCounts pc;
  for (const Set& b : blocks) pc.k.insert(static_cast<int>(b.size()));
  for (int a = 0; a < v; ++a)
    for (int c = a + 1; c < v; ++c) {
      std::int64_t n = 0;
      for (const Set& b : blocks) n += b.count(a) && b.count(c);
      pc.lambda.insert(n);
    }
  return pc;
}

/// {S(x) : x != 0} with S given as plain functions.
inline std::vector<Set> orbit_family(const Group& g, const std::vector<std::function<int(int)>>& maps) {
  std::vector<Set> out;
  for (int x = 1; x < g.v; ++x) {
    Set b;
    for (const auto& m : maps) b.insert(m(x));
    out.push_back(b);
  }
  return out;
}

inline std::vector<std::function<int(int)>> multipliers(int n, std::vector<int> cs) {
  std::vector<std::function<int(int)>> out;
  for (int c : cs) out.push_back([n, c](int x) { return (c * x) % n; });
  return out;
}

}  // namespace oracle
