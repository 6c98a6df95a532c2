#pragma once

#include <optional>
#include <span>
#include <vector>

#include "shortdiff/field.hpp"
#include "shortdiff/group.hpp"

namespace shortdiff {

/// A group endomorphism stored as its full map table.
class Endomorphism {
 public:
  /// Validates the homomorphism law exhaustively; throws with a witness pair.
  static Endomorphism make(const FiniteGroup& g, std::vector<Element> table);
  static Endomorphism identity(const FiniteGroup& g);
  static Endomorphism zero(const FiniteGroup& g);

  const FiniteGroup& group() const noexcept { return group_; }
  Element operator()(Element x) const { return table_[x]; }
  const std::vector<Element>& table() const noexcept { return table_; }

  bool is_bijective() const;
  bool is_zero() const;
  bool is_identity() const;

  /// Requires a bijective map.
  Endomorphism inverse() const;
  /// Order in the automorphism group; requires a bijective map.
  int order() const;

  bool operator==(const Endomorphism& other) const { return table_ == other.table_; }
  bool operator<(const Endomorphism& other) const { return table_ < other.table_; }

 private:
  Endomorphism(FiniteGroup g, std::vector<Element> table) : group_(std::move(g)), table_(std::move(table)) {}
  friend Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner);

  FiniteGroup group_;
  std::vector<Element> table_;
};

/// outer ∘ inner.
Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner);

/// x ↦ c·x; only defined on commutative groups.
Endomorphism scalar_endo(const FiniteGroup& g, long long c);
/// Digit vector x ↦ M·x mod p on an elementary abelian group (row-major M).
Endomorphism matrix_endo(const FiniteGroup& g, const std::vector<std::vector<int>>& matrix);
/// λ_a : x ↦ a·x on the additive group of F.
Endomorphism field_mult_endo(const FiniteField& f, const FieldElement& a);

/// A total self-map that may or may not be an endomorphism.
struct PointwiseMap {
  std::vector<Element> table;
  bool is_endomorphism = false;
  bool is_bijective = false;
};

/// x ↦ x − α(x).
PointwiseMap one_minus(const Endomorphism& alpha);
/// x ↦ α(x) − β(x).
PointwiseMap difference(const Endomorphism& alpha, const Endomorphism& beta);

/// Insertion-ordered, deduplicated by map table.
class EndoSet {
 public:
  EndoSet() = default;
  explicit EndoSet(std::span<const Endomorphism> maps);

  /// Returns false when an equal map is already present.
  bool insert(const Endomorphism& e);
  bool contains(const Endomorphism& e) const;
  bool contains_table(const std::vector<Element>& table) const;

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<Endomorphism>& members() const noexcept { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const Endomorphism& operator[](std::size_t i) const { return members_[i]; }

 private:
  std::vector<Endomorphism> members_;
};

/// A group of automorphisms, elements sorted by map table.
class AutomorphismGroup {
 public:
  const FiniteGroup& group() const noexcept { return group_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Endomorphism>& elements() const noexcept { return elements_; }
  /// The maps the group was generated from (deduplicated, in input order).
  const std::vector<Endomorphism>& generators() const noexcept { return generators_; }
  bool contains(const Endomorphism& e) const;

 private:
  AutomorphismGroup(FiniteGroup g, std::vector<Endomorphism> elems, std::vector<Endomorphism> gens)
      : group_(std::move(g)), elements_(std::move(elems)), generators_(std::move(gens)) {}
  friend AutomorphismGroup closure(const FiniteGroup& g, std::span<const Endomorphism> gens);

  FiniteGroup group_;
  std::vector<Endomorphism> elements_;
  std::vector<Endomorphism> generators_;
};

/// Composition closure of bijective generators (always contains the identity).
AutomorphismGroup closure(const FiniteGroup& g, std::span<const Endomorphism> gens);

struct FpfReport {
  bool fpf = true;
  std::optional<Element> witness;  // smallest x ≠ 0 with |Φ(x)| < |Φ|
};

/// The literal test |Φ(x)| = |Φ| for all x ≠ 0.
FpfReport is_fpf(std::span<const Endomorphism> maps);
inline FpfReport is_fpf(const AutomorphismGroup& phi) { return is_fpf(phi.elements()); }

/// S(x) = { α(x) : α ∈ S }.
Block orbit(std::span<const Endomorphism> maps, Element x);

AutomorphismGroup center(const AutomorphismGroup& phi);
/// α H α⁻¹ = H. `h` must be closed under composition.
bool normalizes(const Endomorphism& alpha, std::span<const Endomorphism> h);
/// α commutes with every member of `h`. `h` must be closed under composition.
bool centralizes(const Endomorphism& alpha, std::span<const Endomorphism> h);
bool is_cyclic(const AutomorphismGroup& phi);

struct ClassificationReport {
  std::size_t group_order = 0;
  std::size_t center_order = 0;
  std::size_t quotient_order = 0;
  bool quotient_order_admissible = false;  // |Φ/Z(Φ)| ∈ {1, 12, 24, 60, 120}
};

/// Order-level check only; no isomorphism with A4, S4, A5, S5 is claimed.
ClassificationReport classification_check(const AutomorphismGroup& phi);

/// Inverse of x ↦ x + x. Throws NoHalving when doubling is not bijective.
Endomorphism halving_endo(const FiniteGroup& g);

/// {0, 1} ∪ { α ∈ Φ : ord α = 6 }, checked for S = 1 − S.
EndoSet order6_segment_set(const AutomorphismGroup& phi);

}  // namespace shortdiff
