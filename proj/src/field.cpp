#include "shortdiff/field.hpp"

#include <algorithm>

#include "shortdiff/error.hpp"

namespace shortdiff {

namespace {

int modp(long long a, int p) { return static_cast<int>(((a % p) + p) % p); }

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int inverse_mod(int a, int p) {
  // p is prime and small
  for (int x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  return 0;
}

// Remainder of f by monic-or-not g (g nonzero, trimmed).
Poly poly_rem(Poly f, const Poly& g, int p) {
  trim(f);
  const int lead_inv = inverse_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const int c = (f.back() * lead_inv) % p;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] = modp(f[shift + i] - c * g[i], p);
    trim(f);
  }
  return f;
}

Poly poly_div(Poly f, const Poly& g, int p) {
  trim(f);
  if (f.size() < g.size()) return {};
  Poly q(f.size() - g.size() + 1, 0);
  const int lead_inv = inverse_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const int c = (f.back() * lead_inv) % p;
    const std::size_t shift = f.size() - g.size();
    q[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] = modp(f[shift + i] - c * g[i], p);
    trim(f);
  }
  return q;
}

// Monic polynomial of degree `deg` whose lower coefficients are the base-p digits of `index`.
Poly monic_from_index(long long index, int deg, int p) {
  Poly f(deg + 1, 0);
  for (int i = 0; i < deg; ++i) {
    f[i] = static_cast<int>(index % p);
    index /= p;
  }
  f[deg] = 1;
  return f;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

json poly_json(const Poly& f) { return json(f); }

}  // namespace

std::optional<Poly> find_factor(const Poly& f, int p) {
  Poly g = f;
  trim(g);
  const int deg = static_cast<int>(g.size()) - 1;
  for (int d = 1; d <= deg / 2; ++d) {
    const long long count = ipow(p, d);
    for (long long idx = 0; idx < count; ++idx) {
      Poly h = monic_from_index(idx, d, p);
      if (poly_rem(g, h, p).empty()) return h;
    }
  }
  return std::nullopt;
}

FiniteField FiniteField::build(int p, int n, std::optional<Poly> modulus) {
  if (!is_prime(p))
    throw Error(ErrorKind::InvalidParameter, "prime", json{{"p", p}}, "characteristic must be prime");
  if (n < 1)
    throw Error(ErrorKind::InvalidParameter, "degree", json{{"n", n}}, "degree must be positive");
  const long long q = ipow(p, n);
  if (q > FiniteGroup::kMaxOrder)
    throw Error(ErrorKind::InvalidOrder, "order", json{{"order", q}}, "field order exceeds the supported maximum");

  Poly m;
  if (modulus) {
    m = *modulus;
    if (static_cast<int>(m.size()) != n + 1 || m.back() != 1)
      throw Error(ErrorKind::InvalidParameter, "modulus", json{{"modulus", poly_json(m)}, {"degree", n}},
                  "modulus must be monic of degree n (n+1 coefficients, low-to-high)");
    for (int c : m)
      if (c < 0 || c >= p)
        throw Error(ErrorKind::InvalidParameter, "modulus", json{{"modulus", poly_json(m)}},
                    "modulus coefficients must lie in [0,p)");
    if (auto factor = find_factor(m, p)) {
      throw Error(ErrorKind::Irreducible, "irreducibility",
                  json{{"modulus", poly_json(m)}, {"factor", poly_json(*factor)},
                       {"cofactor", poly_json(poly_div(m, *factor, p))}},
                  "modulus is reducible over Z_p");
    }
  } else {
    for (long long idx = 0; idx < q; ++idx) {
      Poly cand = monic_from_index(idx, n, p);
      if (!find_factor(cand, p)) {
        m = std::move(cand);
        break;
      }
    }
  }

  auto d = std::make_shared<Data>(Data{p, n, static_cast<int>(q), std::move(m),
                                       FiniteGroup::elementary_abelian(p, n)});
  return FiniteField(std::move(d));
}

FieldElement FiniteField::zero() const { return FieldElement{std::vector<int>(degree(), 0)}; }

FieldElement FiniteField::one() const {
  FieldElement e = zero();
  e.coeffs[0] = 1;
  return e;
}

FieldElement FiniteField::element(std::vector<int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > degree())
    throw Error(ErrorKind::InvalidParameter, "field-element", json{{"coeffs", coeffs}, {"degree", degree()}},
                "too many coefficients for this field");
  for (int c : coeffs)
    if (c < 0 || c >= characteristic())
      throw Error(ErrorKind::InvalidParameter, "field-element", json{{"coeffs", coeffs}},
                  "coefficient out of range [0,p)");
  coeffs.resize(degree(), 0);
  return FieldElement{std::move(coeffs)};
}

FieldElement FiniteField::from_index(int index) const {
  if (index < 0 || index >= order())
    throw Error(ErrorKind::InvalidParameter, "field-element", json{{"index", index}}, "index out of range");
  FieldElement e = zero();
  for (int i = 0; i < degree(); ++i) {
    e.coeffs[i] = index % characteristic();
    index /= characteristic();
  }
  return e;
}

int FiniteField::index_of(const FieldElement& a) const {
  int idx = 0;
  for (int i = degree(); i-- > 0;) idx = idx * characteristic() + a.coeffs[i];
  return idx;
}

FieldElement FiniteField::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement r = zero();
  for (int i = 0; i < degree(); ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % characteristic();
  return r;
}

FieldElement FiniteField::neg(const FieldElement& a) const {
  FieldElement r = zero();
  for (int i = 0; i < degree(); ++i) r.coeffs[i] = modp(-a.coeffs[i], characteristic());
  return r;
}

FieldElement FiniteField::sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }

FieldElement FiniteField::mul(const FieldElement& a, const FieldElement& b) const {
  const int p = characteristic();
  const int n = degree();
  Poly prod(2 * n - 1, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + a.coeffs[i] * b.coeffs[j]) % p;
  Poly r = poly_rem(std::move(prod), modulus(), p);
  r.resize(n, 0);
  return FieldElement{std::move(r)};
}

FieldElement FiniteField::pow(const FieldElement& a, long long e) const {
  FieldElement result = one();
  FieldElement base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElement FiniteField::inv(const FieldElement& a) const {
  if (a == zero())
    throw Error(ErrorKind::DivisionByZero, "inverse", json{{"element", a.coeffs}}, "zero has no inverse");
  return pow(a, order() - 2);
}

int FiniteField::multiplicative_order(const FieldElement& a) const {
  if (a == zero())
    throw Error(ErrorKind::DivisionByZero, "order", json{{"element", a.coeffs}}, "zero has no multiplicative order");
  int k = 1;
  const FieldElement e = one();
  for (FieldElement x = a; x != e; x = mul(x, a)) ++k;
  return k;
}

FieldElement FiniteField::primitive_element() const {
  for (int idx = 1; idx < order(); ++idx) {
    FieldElement a = from_index(idx);
    if (multiplicative_order(a) == order() - 1) return a;
  }
  return one();  // unreachable for a field: GF(q)* is cyclic
}

std::vector<FieldElement> FiniteField::unit_subgroup_elements(int d) const {
  const int units = order() - 1;
  if (d < 1 || units % d != 0)
    throw Error(ErrorKind::InvalidParameter, "index", json{{"d", d}, {"units", units}},
                "d must divide p^n - 1");
  const FieldElement g = primitive_element();
  const FieldElement step = pow(g, d);
  std::vector<FieldElement> out;
  FieldElement x = one();
  for (int i = 0; i < units / d; ++i) {
    out.push_back(x);
    x = mul(x, step);
  }
  std::sort(out.begin(), out.end(),
            [this](const FieldElement& a, const FieldElement& b) { return index_of(a) < index_of(b); });
  return out;
}

bool FiniteField::operator==(const FiniteField& other) const {
  return data_ == other.data_ || (data_->p == other.data_->p && data_->modulus == other.data_->modulus);
}

}  // namespace shortdiff
