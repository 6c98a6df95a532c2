#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace shortdiff {

/// Dense element index in [0, v). Index 0 is always the identity.
using Element = int;

struct PrimePower {
  int p = 0;
  int k = 0;
  bool operator==(const PrimePower&) const = default;
};

bool is_prime(long long n);

/// A finite group written additively, stored as a validated Cayley table.
///
/// Copies are cheap: the tables live in shared immutable storage, so a
/// FiniteGroup behaves like a value and can be handed to other threads.
/// Addition need not be commutative; `sub(a, b)` is `a + (-b)`.
class FiniteGroup {
 public:
  /// Upper bound on the order accepted by `from_cayley` (associativity is O(v^3)).
  static constexpr int kDefaultOrderCap = 512;
  /// Upper bound for the table-backed builders.
  static constexpr int kMaxOrder = 4096;

  static FiniteGroup cyclic(int n);
  static FiniteGroup elementary_abelian(int p, int k);
  static FiniteGroup direct_product(std::span<const FiniteGroup> factors);
  static FiniteGroup from_cayley(const std::vector<std::vector<int>>& table,
                                 int order_cap = kDefaultOrderCap);

  int order() const noexcept { return data_->order; }
  Element add(Element a, Element b) const { return data_->add[static_cast<std::size_t>(a) * data_->order + b]; }
  Element neg(Element a) const { return data_->neg[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  /// c-fold sum x + x + ... + x (0 for c = 0).
  Element multiple(Element x, long long c) const;
  int element_order(Element x) const;
  bool commutative() const noexcept { return data_->commutative; }

  /// Set when the group came from `elementary_abelian` (or a field's additive group).
  std::optional<PrimePower> elementary_abelian_type() const { return data_->elementary; }

  std::vector<std::vector<int>> cayley_table() const;
  std::string name(Element x) const;

  /// Same table (identity of the underlying storage is not required).
  bool operator==(const FiniteGroup& other) const;

 private:
  struct Data {
    int order = 0;
    std::vector<Element> add;
    std::vector<Element> neg;
    bool commutative = false;
    std::optional<PrimePower> elementary;
    std::vector<std::string> names;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static FiniteGroup finish(Data data);

  std::shared_ptr<const Data> data_;
};

/// A subset of a group, kept sorted and duplicate free.
struct Block {
  std::vector<Element> elements;

  Block() = default;
  explicit Block(std::vector<Element> elems);

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(Element x) const;
  auto operator<=>(const Block&) const = default;
};

struct Subgroup {
  std::vector<Element> elements;  // sorted, contains 0

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(Element x) const;
  bool operator==(const Subgroup&) const = default;
};

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> gens);
bool is_subgroup(const FiniteGroup& g, std::span<const Element> set);

/// Every subgroup of g, sorted by (size, elements). Joins cyclic subgroups
/// until nothing new appears, so only meant for small groups.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

/// Greedy generating set: scans elements in index order, keeping those
/// outside the subgroup generated so far.
std::vector<Element> generating_set(const FiniteGroup& g);

}  // namespace shortdiff
