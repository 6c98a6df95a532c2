#include <gtest/gtest.h>

#include <set>

#include "shortdiff/error.hpp"
#include "shortdiff/field.hpp"

using namespace shortdiff;

namespace {

// Monic polynomials of degree n over Z_p, low-to-high coefficients.
std::vector<Poly> monic(int p, int n) {
  std::vector<Poly> out;
  int count = 1;
  for (int i = 0; i < n; ++i) count *= p;
  for (int idx = 0; idx < count; ++idx) {
    Poly f(n + 1);
    int r = idx;
    for (int i = 0; i < n; ++i) {
      f[i] = r % p;
      r /= p;
    }
    f[n] = 1;
    out.push_back(f);
  }
  return out;
}

struct Sample {
  int p, n;
};

const std::vector<Sample> kFields{{2, 1}, {3, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}};

}  // namespace

TEST(FindFactor, IrreducibleCountsMatchNecklaceFormula) {
  // Number of monic irreducibles of degree n over F_p: (1/n) sum_{d|n} mu(d) p^{n/d}.
  const std::vector<std::tuple<int, int, int>> expected{{2, 2, 1}, {2, 3, 2}, {2, 4, 3}, {3, 2, 3},
                                                        {3, 3, 8}, {5, 2, 10}, {2, 5, 6}};
  for (const auto& [p, n, count] : expected) {
    int irreducible = 0;
    for (const Poly& f : monic(p, n)) irreducible += !find_factor(f, p).has_value();
    EXPECT_EQ(irreducible, count) << "p=" << p << " n=" << n;
  }
}

TEST(FiniteField, DefaultModuli) {
  EXPECT_EQ(FiniteField::build(3, 2).modulus(), (Poly{1, 0, 1}));
  EXPECT_EQ(FiniteField::build(2, 4).modulus(), (Poly{1, 1, 0, 0, 1}));
  EXPECT_EQ(FiniteField::build(2, 3).modulus(), (Poly{1, 1, 0, 1}));
}

TEST(FiniteField, Gf9Arithmetic) {
  const FiniteField f = FiniteField::build(3, 2, Poly{1, 0, 1});
  const FieldElement x = f.element({0, 1});
  EXPECT_EQ(f.mul(x, x), f.element({2}));
  EXPECT_EQ(f.multiplicative_order(x), 4);
  EXPECT_EQ(f.multiplicative_order(f.primitive_element()), 8);
  // index 2 gives the subgroup of order 4, index 1 all units
  EXPECT_EQ(f.unit_subgroup_elements(2).size(), 4u);
  EXPECT_EQ(f.unit_subgroup_elements(1).size(), 8u);
  EXPECT_EQ(f.order(), 9);
  EXPECT_EQ(f.additive_group().order(), 9);
}

TEST(FiniteField, Gf16AndGf8) {
  const FiniteField f16 = FiniteField::build(2, 4, Poly{1, 1, 0, 0, 1});
  EXPECT_EQ(f16.multiplicative_order(f16.element({0, 1})), 15);
  const FiniteField f8 = FiniteField::build(2, 3, Poly{1, 1, 0, 1});
  const FieldElement x = f8.element({0, 1});
  // x^3 = x + 1
  EXPECT_EQ(f8.pow(x, 3), f8.element({1, 1}));
  EXPECT_EQ(f8.pow(x, 7), f8.one());
}

TEST(FiniteField, Errors) {
  try {
    FiniteField::build(2, 2, Poly{1, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Irreducible);
    EXPECT_EQ(e.witness()["factor"], (std::vector<int>{1, 1}));
  }
  EXPECT_THROW(FiniteField::build(4, 1), Error);
  EXPECT_THROW(FiniteField::build(3, 0), Error);
  const FiniteField f = FiniteField::build(3, 2);
  try {
    f.inv(f.zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
  try {
    f.unit_subgroup_elements(3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidParameter);
  }
  // modulus of the wrong degree or not monic
  EXPECT_THROW(FiniteField::build(3, 2, Poly{1, 1}), Error);
  EXPECT_THROW(FiniteField::build(3, 2, Poly{1, 0, 2}), Error);
}

TEST(FiniteField, AxiomsExhaustively) {
  for (const auto& [p, n] : kFields) {
    const FiniteField f = FiniteField::build(p, n);
    const int q = f.order();
    for (int a = 0; a < q; ++a) {
      const FieldElement ea = f.from_index(a);
      ASSERT_EQ(f.index_of(ea), a);
      ASSERT_EQ(f.add(ea, f.neg(ea)), f.zero());
      if (a != 0) ASSERT_EQ(f.mul(ea, f.inv(ea)), f.one());
      for (int b = 0; b < q; ++b) {
        const FieldElement eb = f.from_index(b);
        ASSERT_EQ(f.mul(ea, eb), f.mul(eb, ea));
        // the additive group's table agrees with field addition
        ASSERT_EQ(f.additive_group().add(a, b), f.index_of(f.add(ea, eb)));
        if (q <= 27)
          for (int c = 0; c < q; ++c) {
            const FieldElement ec = f.from_index(c);
            ASSERT_EQ(f.mul(ea, f.add(eb, ec)), f.add(f.mul(ea, eb), f.mul(ea, ec)));
            ASSERT_EQ(f.mul(f.mul(ea, eb), ec), f.mul(ea, f.mul(eb, ec)));
          }
      }
    }
  }
}

TEST(FiniteField, UnitSubgroups) {
  for (const auto& [p, n] : kFields) {
    const FiniteField f = FiniteField::build(p, n);
    const int m = f.order() - 1;
    for (int d = 1; d <= m; ++d) {
      if (m % d != 0) continue;
      const auto h = f.unit_subgroup_elements(d);
      ASSERT_EQ(static_cast<int>(h.size()), m / d);
      std::set<FieldElement> set(h.begin(), h.end());
      EXPECT_EQ(set.size(), h.size());
      for (const FieldElement& a : h) {
        EXPECT_EQ(f.pow(a, m / d), f.one());
        for (const FieldElement& b : h) EXPECT_TRUE(set.count(f.mul(a, b)));
      }
    }
  }
}

TEST(FiniteField, SquaresModSeven) {
  const FiniteField f = FiniteField::build(7, 1);
  const auto h = f.unit_subgroup_elements(2);
  ASSERT_EQ(h.size(), 3u);
  EXPECT_EQ(f.index_of(h[0]), 1);
  EXPECT_EQ(f.index_of(h[1]), 2);
  EXPECT_EQ(f.index_of(h[2]), 4);
}

TEST(FiniteField, EveryIrreducibleModulusWorks) {
  for (const Poly& g : monic(3, 2)) {
    if (find_factor(g, 3)) {
      EXPECT_THROW(FiniteField::build(3, 2, g), Error);
      continue;
    }
    const FiniteField f = FiniteField::build(3, 2, g);
    EXPECT_EQ(f.multiplicative_order(f.primitive_element()), 8);
  }
}
