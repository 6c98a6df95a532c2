#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <vector>

#include "shortdiff/group.hpp"

namespace shortdiff {

/// Polynomial over Z_p, coefficients low-to-high.
using Poly = std::vector<int>;

/// Residue modulo the field's modulus: exactly `degree` coefficients, low-to-high.
struct FieldElement {
  std::vector<int> coeffs;
  auto operator<=>(const FieldElement&) const = default;
};

/// GF(p^n) as Z_p[x] / (modulus). Element k corresponds to the coefficient
/// vector of its base-p digits, the same encoding `FiniteGroup::elementary_abelian` uses.
class FiniteField {
 public:
  /// Without a modulus the smallest (by element index of the lower
  /// coefficients) monic irreducible polynomial of degree n is chosen.
  static FiniteField build(int p, int n, std::optional<Poly> modulus = std::nullopt);

  int characteristic() const noexcept { return data_->p; }
  int degree() const noexcept { return data_->n; }
  int order() const noexcept { return data_->q; }
  const Poly& modulus() const noexcept { return data_->modulus; }

  FieldElement zero() const;
  FieldElement one() const;
  /// Validates length and coefficient range; accepts shorter lists (zero padded).
  FieldElement element(std::vector<int> coeffs) const;
  FieldElement from_index(int index) const;
  int index_of(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, long long e) const;

  int multiplicative_order(const FieldElement& a) const;
  /// Smallest element (index order) of multiplicative order p^n - 1.
  FieldElement primitive_element() const;
  /// The multiplicative subgroup of index d, sorted by element index.
  std::vector<FieldElement> unit_subgroup_elements(int d) const;

  /// (F,+); shared by every endomorphism built from this field.
  const FiniteGroup& additive_group() const noexcept { return data_->additive; }

  bool operator==(const FiniteField& other) const;

 private:
  struct Data {
    int p = 0;
    int n = 0;
    int q = 0;
    Poly modulus;
    FiniteGroup additive;
  };
  explicit FiniteField(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

/// Monic divisor of `f` of degree in [1, deg f / 2], if any.
std::optional<Poly> find_factor(const Poly& f, int p);

}  // namespace shortdiff
