#include "shortdiff/endo.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "shortdiff/error.hpp"

namespace shortdiff {

namespace {

bool table_is_bijective(const std::vector<Element>& t) {
  std::vector<char> hit(t.size(), 0);
  for (Element y : t) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

bool table_is_endomorphism(const FiniteGroup& g, const std::vector<Element>& t) {
  const int v = g.order();
  for (Element x = 0; x < v; ++x)
    for (Element y = 0; y < v; ++y)
      if (t[g.add(x, y)] != g.add(t[x], t[y])) return false;
  return true;
}

void require_same_group(const FiniteGroup& a, const FiniteGroup& b) {
  if (!(a == b))
    throw Error(ErrorKind::InvalidParameter, "group", json::object(), "maps act on different groups");
}

void require_closed(std::span<const Endomorphism> h) {
  std::set<std::vector<Element>> tables;
  for (const auto& e : h) tables.insert(e.table());
  for (const auto& a : h)
    for (const auto& b : h)
      if (!tables.count(compose(a, b).table()))
        throw Error(ErrorKind::InvalidParameter, "closure", json{{"left", a.table()}, {"right", b.table()}},
                    "subgroup is not closed under composition");
}

}  // namespace

Endomorphism Endomorphism::make(const FiniteGroup& g, std::vector<Element> table) {
  const int v = g.order();
  if (static_cast<int>(table.size()) != v)
    throw Error(ErrorKind::InvalidParameter, "length", json{{"length", table.size()}, {"order", v}},
                "map table length must equal the group order");
  for (Element y : table)
    if (y < 0 || y >= v)
      throw Error(ErrorKind::InvalidParameter, "range", json{{"value", y}}, "map value out of range");
  for (Element x = 0; x < v; ++x)
    for (Element y = 0; y < v; ++y)
      if (table[g.add(x, y)] != g.add(table[x], table[y]))
        throw Error(ErrorKind::Homomorphism, "homomorphism", json{{"x", x}, {"y", y}},
                    "map(x+y) != map(x)+map(y)");
  return Endomorphism(g, std::move(table));
}

Endomorphism Endomorphism::identity(const FiniteGroup& g) {
  std::vector<Element> t(g.order());
  std::iota(t.begin(), t.end(), 0);
  return Endomorphism(g, std::move(t));
}

Endomorphism Endomorphism::zero(const FiniteGroup& g) { return Endomorphism(g, std::vector<Element>(g.order(), 0)); }

bool Endomorphism::is_bijective() const { return table_is_bijective(table_); }

bool Endomorphism::is_zero() const {
  return std::all_of(table_.begin(), table_.end(), [](Element y) { return y == 0; });
}

bool Endomorphism::is_identity() const {
  for (std::size_t x = 0; x < table_.size(); ++x)
    if (table_[x] != static_cast<Element>(x)) return false;
  return true;
}

Endomorphism Endomorphism::inverse() const {
  if (!is_bijective())
    throw Error(ErrorKind::InvalidParameter, "bijective", json{{"map", table_}}, "map is not invertible");
  std::vector<Element> inv(table_.size());
  for (std::size_t x = 0; x < table_.size(); ++x) inv[table_[x]] = static_cast<Element>(x);
  return Endomorphism(group_, std::move(inv));
}

int Endomorphism::order() const {
  if (!is_bijective())
    throw Error(ErrorKind::InvalidParameter, "bijective", json{{"map", table_}}, "order needs an automorphism");
  int k = 1;
  for (Endomorphism p = *this; !p.is_identity(); p = compose(p, *this)) ++k;
  return k;
}

Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner) {
  std::vector<Element> t(inner.table_.size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = outer.table_[inner.table_[x]];
  return Endomorphism(inner.group_, std::move(t));
}

Endomorphism scalar_endo(const FiniteGroup& g, long long c) {
  if (!g.commutative())
    throw Error(ErrorKind::Unsupported, "commutative", json::object(),
                "scalar maps are endomorphisms only on commutative groups");
  if (c < 0)
    throw Error(ErrorKind::InvalidParameter, "scalar", json{{"c", c}}, "scalar must be nonnegative");
  std::vector<Element> t(g.order());
  for (Element x = 0; x < g.order(); ++x) t[x] = g.multiple(x, c);
  return Endomorphism::make(g, std::move(t));
}

Endomorphism matrix_endo(const FiniteGroup& g, const std::vector<std::vector<int>>& matrix) {
  const auto type = g.elementary_abelian_type();
  if (!type)
    throw Error(ErrorKind::InvalidParameter, "elementary-abelian", json::object(),
                "matrix maps need an elementary abelian group");
  const int p = type->p;
  const int k = type->k;
  if (static_cast<int>(matrix.size()) != k)
    throw Error(ErrorKind::InvalidParameter, "dimension", json{{"rows", matrix.size()}, {"k", k}},
                "matrix must be k x k");
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != k)
      throw Error(ErrorKind::InvalidParameter, "dimension", json{{"columns", row.size()}, {"k", k}},
                  "matrix must be k x k");
  std::vector<Element> t(g.order());
  std::vector<int> digits(k), image(k);
  for (Element x = 0; x < g.order(); ++x) {
    int r = x;
    for (int i = 0; i < k; ++i) {
      digits[i] = r % p;
      r /= p;
    }
    Element y = 0;
    for (int i = k; i-- > 0;) {
      long long s = 0;
      for (int j = 0; j < k; ++j) s += static_cast<long long>(matrix[i][j]) * digits[j];
      y = y * p + static_cast<int>(((s % p) + p) % p);
    }
    t[x] = y;
  }
  return Endomorphism::make(g, std::move(t));
}

Endomorphism field_mult_endo(const FiniteField& f, const FieldElement& a) {
  std::vector<Element> t(f.order());
  for (int x = 0; x < f.order(); ++x) t[x] = f.index_of(f.mul(a, f.from_index(x)));
  return Endomorphism::make(f.additive_group(), std::move(t));
}

PointwiseMap difference(const Endomorphism& alpha, const Endomorphism& beta) {
  require_same_group(alpha.group(), beta.group());
  const FiniteGroup& g = alpha.group();
  PointwiseMap m;
  m.table.resize(g.order());
  for (Element x = 0; x < g.order(); ++x) m.table[x] = g.sub(alpha(x), beta(x));
  m.is_bijective = table_is_bijective(m.table);
  m.is_endomorphism = table_is_endomorphism(g, m.table);
  return m;
}

PointwiseMap one_minus(const Endomorphism& alpha) {
  return difference(Endomorphism::identity(alpha.group()), alpha);
}

EndoSet::EndoSet(std::span<const Endomorphism> maps) {
  for (const auto& e : maps) insert(e);
}

bool EndoSet::insert(const Endomorphism& e) {
  if (!members_.empty()) require_same_group(members_.front().group(), e.group());
  if (contains(e)) return false;
  members_.push_back(e);
  return true;
}

bool EndoSet::contains(const Endomorphism& e) const { return contains_table(e.table()); }

bool EndoSet::contains_table(const std::vector<Element>& table) const {
  return std::any_of(members_.begin(), members_.end(), [&](const Endomorphism& m) { return m.table() == table; });
}

bool AutomorphismGroup::contains(const Endomorphism& e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

AutomorphismGroup closure(const FiniteGroup& g, std::span<const Endomorphism> gens) {
  EndoSet unique_gens;
  for (const auto& s : gens) {
    require_same_group(g, s.group());
    if (!s.is_bijective())
      throw Error(ErrorKind::InvalidParameter, "bijective", json{{"map", s.table()}},
                  "closure generators must be automorphisms");
    unique_gens.insert(s);
  }
  std::set<Endomorphism> seen{Endomorphism::identity(g)};
  std::vector<Endomorphism> frontier{Endomorphism::identity(g)};
  while (!frontier.empty()) {
    std::vector<Endomorphism> next;
    for (const auto& a : frontier)
      for (const auto& s : unique_gens) {
        Endomorphism c = compose(a, s);
        if (seen.insert(c).second) next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
  return AutomorphismGroup(g, std::vector<Endomorphism>(seen.begin(), seen.end()), unique_gens.members());
}

FpfReport is_fpf(std::span<const Endomorphism> maps) {
  FpfReport r;
  if (maps.empty()) return r;
  const FiniteGroup& g = maps.front().group();
  for (Element x = 1; x < g.order(); ++x)
    if (orbit(maps, x).size() != maps.size()) {
      r.fpf = false;
      r.witness = x;
      return r;
    }
  return r;
}

Block orbit(std::span<const Endomorphism> maps, Element x) {
  std::vector<Element> out;
  out.reserve(maps.size());
  for (const auto& m : maps) out.push_back(m(x));
  return Block(std::move(out));
}

AutomorphismGroup center(const AutomorphismGroup& phi) {
  std::vector<Endomorphism> z;
  for (const auto& a : phi.elements())
    if (std::all_of(phi.elements().begin(), phi.elements().end(),
                    [&](const Endomorphism& b) { return compose(a, b) == compose(b, a); }))
      z.push_back(a);
  return closure(phi.group(), z);
}

bool normalizes(const Endomorphism& alpha, std::span<const Endomorphism> h) {
  require_closed(h);
  if (!alpha.is_bijective())
    throw Error(ErrorKind::InvalidParameter, "bijective", json{{"map", alpha.table()}},
                "only automorphisms can normalize");
  const Endomorphism inv = alpha.inverse();
  std::set<std::vector<Element>> tables;
  for (const auto& e : h) tables.insert(e.table());
  return std::all_of(h.begin(), h.end(),
                     [&](const Endomorphism& e) { return tables.count(compose(compose(alpha, e), inv).table()) > 0; });
}

bool centralizes(const Endomorphism& alpha, std::span<const Endomorphism> h) {
  require_closed(h);
  return std::all_of(h.begin(), h.end(),
                     [&](const Endomorphism& e) { return compose(alpha, e) == compose(e, alpha); });
}

bool is_cyclic(const AutomorphismGroup& phi) {
  const int n = static_cast<int>(phi.order());
  return std::any_of(phi.elements().begin(), phi.elements().end(),
                     [n](const Endomorphism& a) { return a.order() == n; });
}

ClassificationReport classification_check(const AutomorphismGroup& phi) {
  ClassificationReport r;
  r.group_order = phi.order();
  r.center_order = center(phi).order();
  r.quotient_order = r.group_order / r.center_order;
  constexpr std::size_t admissible[] = {1, 12, 24, 60, 120};
  r.quotient_order_admissible = std::find(std::begin(admissible), std::end(admissible), r.quotient_order) !=
                                std::end(admissible);
  return r;
}

Endomorphism halving_endo(const FiniteGroup& g) {
  if (!g.commutative())
    throw Error(ErrorKind::Unsupported, "commutative", json::object(), "halving needs a commutative group");
  const Endomorphism doubling = scalar_endo(g, 2);
  if (!doubling.is_bijective())
    throw Error(ErrorKind::NoHalving, "doubling-bijective", json{{"order", g.order()}},
                "x -> x+x is not bijective, so it has no inverse");
  return doubling.inverse();
}

EndoSet order6_segment_set(const AutomorphismGroup& phi) {
  if (phi.order() % 6 != 0)
    throw Error(ErrorKind::Hypothesis, "6 divides |Φ|", json{{"order", phi.order()}},
                "the automorphism group order is not divisible by 6");
  const FpfReport fpf = is_fpf(phi);
  if (!fpf.fpf)
    throw Error(ErrorKind::Hypothesis, "Φ fpf", json{{"x", *fpf.witness}}, "automorphism group is not fixed-point-free");
  const FiniteGroup& g = phi.group();
  EndoSet s;
  s.insert(Endomorphism::zero(g));
  s.insert(Endomorphism::identity(g));
  for (const auto& a : phi.elements())
    if (a.order() == 6) s.insert(a);
  for (const auto& a : s) {
    const PointwiseMap m = one_minus(a);
    if (!s.contains_table(m.table))
      throw Error(ErrorKind::Hypothesis, "S = 1 − S", json{{"alpha", a.table()}, {"one_minus_alpha", m.table}},
                  "1 − α is not in S");
  }
  return s;
}

}  // namespace shortdiff
