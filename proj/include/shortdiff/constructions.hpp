#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "shortdiff/endo.hpp"
#include "shortdiff/family.hpp"
#include "shortdiff/field.hpp"

namespace shortdiff {

struct OrbitFamily {
  LabeledFamily family;
  SdfCertificate certificate;
};

struct DesignConstruction {
  LabeledFamily family;
  SdfCertificate certificate;
  Design design;
};

/// {S(x) : x ∈ G*} for S ⊆ Φ ∪ {0}, Φ fixed-point-free.
///
/// Checks that the nonzero members are automorphisms, that every pairwise
/// difference α − β is a bijection and that |S(x)| = |S| on G*; then that
/// stabilizer orders and ∼-class sizes are uniform over G*. The resulting
/// certificate must have λ′ = |S|(|S| − 1); anything else is reported as a
/// theorem violation.
OrbitFamily orbit_family(const FiniteGroup& g, std::span<const Endomorphism> s);

/// dev{Φ(x) : x ∈ G*}, asserted to be a (|G|, |Φ|, |Φ| − 1)-design.
DesignConstruction ferrero(const FiniteGroup& g, const AutomorphismGroup& phi);

enum class SubgroupCase { AllSubgroups, NoSubgroups, Mixed };
std::string_view to_string(SubgroupCase c);

struct FerreroWithZero : DesignConstruction {
  SubgroupCase subgroup_case = SubgroupCase::Mixed;
};

/// S = Φ ∪ {0}. Asserts (|G|, |Φ|+1, 1) when every block is a subgroup and
/// (|G|, |Φ|+1, |Φ|+1) when none is; the mixed case reports whatever verifies.
FerreroWithZero ferrero_with_zero(const FiniteGroup& g, const AutomorphismGroup& phi);

struct TransnormalResult : DesignConstruction {
  std::vector<Permutation> automorphisms;  // x ↦ ψ(x) + g for generators ψ and all g
  bool all_automorphisms = false;
  std::size_t pair_orbit_size = 0;
  bool doubly_transitive = false;
};

/// Ψ must normalize S (ψ S ψ⁻¹ = S) and be transitive on G*.
TransnormalResult transnormal(const FiniteGroup& g, std::span<const Endomorphism> s, const AutomorphismGroup& psi);

/// {T·x : x ∈ F*} in a commutative field.
OrbitFamily nearfield_family(const FiniteField& f, std::span<const FieldElement> t);

/// Segments: 0, 1 ∈ S, |S| > 2, S = 1 − S, ⟨S*⟩ fixed-point-free, |G| and
/// |⟨S*⟩| odd. Asserts μ = 1, ν = 2 and ∼-classes {S(a), S(−a)}.
OrbitFamily segments(const FiniteGroup& g, std::span<const Endomorphism> s);

/// Segments from S = {0, 1} ∪ {order-6 elements of Φ}; asserts μ = 1, ν = 2.
OrbitFamily segments_order6(const FiniteGroup& g, const AutomorphismGroup& phi);

struct Example1Report {
  bool containment = false;  // {0, a} ⊆ G_{S(a)} for all a ∈ G*
  bool equality = false;     // G_{S(a)} = {0, a} for all a ∈ G*
  std::optional<OrbitFamily> family;
};

/// Elementary abelian 2-groups with 0, 1 ∈ S = 1 − S. When equality holds the
/// family is asserted to have ν = 1.
Example1Report example1_check(const FiniteGroup& g, std::span<const Endomorphism> s);

}  // namespace shortdiff
