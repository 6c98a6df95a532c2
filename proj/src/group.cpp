#include "shortdiff/group.hpp"

#include <algorithm>
#include <set>

#include "shortdiff/error.hpp"

namespace shortdiff {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

void check_order(long long v) {
  if (v < 2)
    throw Error(ErrorKind::InvalidOrder, "order", json{{"order", v}}, "group order must be at least 2");
  if (v > FiniteGroup::kMaxOrder)
    throw Error(ErrorKind::InvalidOrder, "order", json{{"order", v}, {"max", FiniteGroup::kMaxOrder}},
                "group order exceeds the supported maximum");
}

}  // namespace

FiniteGroup FiniteGroup::finish(Data data) {
  const int v = data.order;
  data.commutative = true;
  for (int a = 0; a < v && data.commutative; ++a)
    for (int b = a + 1; b < v; ++b)
      if (data.add[static_cast<std::size_t>(a) * v + b] != data.add[static_cast<std::size_t>(b) * v + a]) {
        data.commutative = false;
        break;
      }
  return FiniteGroup(std::make_shared<const Data>(std::move(data)));
}

FiniteGroup FiniteGroup::cyclic(int n) {
  check_order(n);
  Data d;
  d.order = n;
  d.add.resize(static_cast<std::size_t>(n) * n);
  d.neg.resize(n);
  for (int a = 0; a < n; ++a) {
    d.neg[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) d.add[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  if (is_prime(n)) d.elementary = PrimePower{n, 1};
  return finish(std::move(d));
}

FiniteGroup FiniteGroup::elementary_abelian(int p, int k) {
  if (!is_prime(p))
    throw Error(ErrorKind::InvalidParameter, "prime", json{{"p", p}}, "p must be prime");
  if (k < 1)
    throw Error(ErrorKind::InvalidParameter, "exponent", json{{"k", k}}, "k must be positive");
  long long v = 1;
  for (int i = 0; i < k; ++i) {
    v *= p;
    if (v > kMaxOrder) break;
  }
  check_order(v);
  std::vector<FiniteGroup> factors(k, cyclic(p));
  FiniteGroup g = direct_product(factors);
  Data d = *g.data_;
  d.elementary = PrimePower{p, k};
  d.names.resize(v);
  for (int x = 0; x < v; ++x) {
    std::string s = "(";
    int r = x;
    for (int i = 0; i < k; ++i) {
      if (i) s += ",";
      s += std::to_string(r % p);
      r /= p;
    }
    d.names[x] = s + ")";
  }
  return finish(std::move(d));
}

FiniteGroup FiniteGroup::direct_product(std::span<const FiniteGroup> factors) {
  if (factors.empty())
    throw Error(ErrorKind::InvalidParameter, "factors", json::array(), "direct product needs at least one factor");
  long long v = 1;
  for (const auto& f : factors) {
    v *= f.order();
    if (v > kMaxOrder) break;
  }
  check_order(v);
  const int n = static_cast<int>(v);
  // Mixed radix, first factor least significant.
  std::vector<std::vector<int>> digits(n, std::vector<int>(factors.size()));
  for (int x = 0; x < n; ++x) {
    int r = x;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      digits[x][i] = r % factors[i].order();
      r /= factors[i].order();
    }
  }
  auto encode = [&](const std::vector<int>& dig) {
    int idx = 0;
    for (std::size_t i = factors.size(); i-- > 0;) idx = idx * factors[i].order() + dig[i];
    return idx;
  };
  Data d;
  d.order = n;
  d.add.resize(static_cast<std::size_t>(n) * n);
  d.neg.resize(n);
  std::vector<int> tmp(factors.size());
  for (int a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < factors.size(); ++i) tmp[i] = factors[i].neg(digits[a][i]);
    d.neg[a] = encode(tmp);
    for (int b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < factors.size(); ++i) tmp[i] = factors[i].add(digits[a][i], digits[b][i]);
      d.add[static_cast<std::size_t>(a) * n + b] = encode(tmp);
    }
  }
  if (factors.size() == 1) d.elementary = factors[0].elementary_abelian_type();
  return finish(std::move(d));
}

FiniteGroup FiniteGroup::from_cayley(const std::vector<std::vector<int>>& table, int order_cap) {
  const long long v = static_cast<long long>(table.size());
  if (v < 2)
    throw Error(ErrorKind::InvalidOrder, "order", json{{"order", v}}, "group order must be at least 2");
  if (v > order_cap)
    throw Error(ErrorKind::InvalidOrder, "order", json{{"order", v}, {"cap", order_cap}},
                "Cayley table exceeds the order cap");
  const int n = static_cast<int>(v);
  Data d;
  d.order = n;
  d.add.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw Error(ErrorKind::InvalidParameter, "shape", json{{"row", a}, {"length", table[a].size()}},
                  "Cayley table must be square");
    for (int b = 0; b < n; ++b) {
      const int c = table[a][b];
      if (c < 0 || c >= n)
        throw Error(ErrorKind::InvalidParameter, "range", json{{"row", a}, {"column", b}, {"value", c}},
                    "Cayley table entry out of range");
      d.add[static_cast<std::size_t>(a) * n + b] = c;
    }
  }
  auto at = [&](int a, int b) { return d.add[static_cast<std::size_t>(a) * n + b]; };
  for (int x = 0; x < n; ++x)
    if (at(0, x) != x || at(x, 0) != x)
      throw Error(ErrorKind::GroupAxiom, "identity", json{{"x", x}, {"0+x", at(0, x)}, {"x+0", at(x, 0)}},
                  "index 0 is not a two-sided identity");
  d.neg.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (at(x, y) == 0 && at(y, x) == 0) {
        d.neg[x] = y;
        break;
      }
    if (d.neg[x] < 0)
      throw Error(ErrorKind::GroupAxiom, "inverse", json{{"x", x}}, "element has no two-sided inverse");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = at(x, y);
      for (int z = 0; z < n; ++z)
        if (at(xy, z) != at(x, at(y, z)))
          throw Error(ErrorKind::GroupAxiom, "associativity", json{{"x", x}, {"y", y}, {"z", z}},
                      "(x+y)+z != x+(y+z)");
    }
  return finish(std::move(d));
}

Element FiniteGroup::multiple(Element x, long long c) const {
  Element acc = 0;
  Element base = x;
  // double-and-add; powers of one element commute so order is irrelevant
  while (c > 0) {
    if (c & 1) acc = add(acc, base);
    base = add(base, base);
    c >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(Element x) const {
  int n = 1;
  for (Element y = x; y != 0; y = add(y, x)) ++n;
  return n;
}

std::vector<std::vector<int>> FiniteGroup::cayley_table() const {
  const int n = order();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = add(a, b);
  return t;
}

std::string FiniteGroup::name(Element x) const {
  if (!data_->names.empty()) return data_->names[x];
  return std::to_string(x);
}

bool FiniteGroup::operator==(const FiniteGroup& other) const {
  return data_ == other.data_ || (data_->order == other.data_->order && data_->add == other.data_->add);
}

Block::Block(std::vector<Element> elems) : elements(std::move(elems)) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
}

bool Block::contains(Element x) const { return std::binary_search(elements.begin(), elements.end(), x); }

bool Subgroup::contains(Element x) const { return std::binary_search(elements.begin(), elements.end(), x); }

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> members{0};
  in[0] = 1;
  // Closure under adding a generator on the right reaches every word,
  // since inverses are positive multiples in a finite group.
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Element s : gens) {
      const Element y = g.add(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members)};
}

bool is_subgroup(const FiniteGroup& g, std::span<const Element> set) {
  if (set.empty()) return false;
  std::vector<char> in(g.order(), 0);
  for (Element x : set) in[x] = 1;
  for (Element x : set) {
    if (!in[g.neg(x)]) return false;
    for (Element y : set)
      if (!in[g.add(x, y)]) return false;
  }
  return true;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<Element>> seen;
  std::vector<Subgroup> found;
  auto offer = [&](Subgroup h) {
    if (seen.insert(h.elements).second) found.push_back(std::move(h));
  };
  for (Element x = 0; x < g.order(); ++x) {
    const Element gen[] = {x};
    offer(subgroup_generated(g, gen));
  }
  for (std::size_t i = 0; i < found.size(); ++i)
    for (Element x = 0; x < g.order(); ++x) {
      if (found[i].contains(x)) continue;
      std::vector<Element> gens = found[i].elements;
      gens.push_back(x);
      offer(subgroup_generated(g, gens));
    }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.elements < b.elements;
  });
  return found;
}

std::vector<Element> generating_set(const FiniteGroup& g) {
  std::vector<Element> gens;
  Subgroup h{{0}};
  for (Element x = 1; x < g.order() && static_cast<int>(h.size()) < g.order(); ++x) {
    if (h.contains(x)) continue;
    gens.push_back(x);
    h = subgroup_generated(g, gens);
  }
  return gens;
}

}  // namespace shortdiff
