#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "shortdiff/error.hpp"
#include "shortdiff/group.hpp"

namespace shortdiff {

using Label = std::int64_t;

struct Entry {
  Label label = 0;
  Block block;
  bool operator==(const Entry&) const = default;
};

/// Ordered (label, block) pairs. Labels are distinct; blocks may repeat,
/// and the repetition counts towards ν and λ′.
class LabeledFamily {
 public:
  LabeledFamily() = default;
  explicit LabeledFamily(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  std::vector<Entry> entries_;
};

/// The set version: first entry of every distinct block.
LabeledFamily deduplicate(const LabeledFamily& family);

Block translate(const FiniteGroup& g, const Block& b, Element shift);
/// G_B = { g : B + g = B }.
Subgroup stabilizer(const FiniteGroup& g, const Block& b);
/// Smallest g with B = C + g.
std::optional<Element> are_translates(const FiniteGroup& g, const Block& b, const Block& c);
/// Labels grouped by translate equivalence, classes in order of first appearance.
std::vector<std::vector<Label>> equivalence_classes(const FiniteGroup& g, const LabeledFamily& family);
/// All translates B + g, deduplicated and sorted.
std::vector<Block> development(const FiniteGroup& g, const LabeledFamily& family);

struct SdfCertificate {
  int v = 0;
  int k = 0;
  int mu = 0;
  int nu = 0;
  std::int64_t lambda_prime = 0;
  std::int64_t lambda = 0;
  // witnesses: the first entry, its stabilizer and its ∼-class
  Label reference_label = 0;
  std::vector<Element> reference_stabilizer;
  std::vector<Label> reference_class;

  bool same_parameters(const SdfCertificate& o) const {
    return v == o.v && k == o.k && mu == o.mu && nu == o.nu && lambda_prime == o.lambda_prime && lambda == o.lambda;
  }
};

/// Condition numbers in failures: 1 block size, 2 stabilizer order,
/// 3 class size, 4 difference count, 5 divisibility of λ′ by μν.
Verdict<SdfCertificate> verify_sdf(const FiniteGroup& g, const LabeledFamily& family);

struct Design {
  int v = 0;
  int k = 0;
  std::int64_t lambda = 0;
  std::vector<Block> blocks;  // sorted, no repeats
};

/// Exhaustive pair count. Condition numbers in failures: 1 point range,
/// 2 repeated block, 3 block size, 4 pair coverage.
Verdict<Design> verify_bibd(int v, std::vector<Block> blocks);

using Permutation = std::vector<Element>;

bool is_permutation(const Permutation& pi);
bool is_design_automorphism(const Permutation& pi, const Design& design);
/// Size of the orbit of the ordered pair (0, 1) under the generated group.
std::size_t ordered_pair_orbit_size(std::span<const Permutation> gens, int v);
bool is_doubly_transitive(std::span<const Permutation> gens, int v);

}  // namespace shortdiff
