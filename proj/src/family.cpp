#include "shortdiff/family.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace shortdiff {

namespace {

json block_json(const Block& b) { return json(b.elements); }

}  // namespace

LabeledFamily::LabeledFamily(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::set<Label> labels;
  for (const auto& e : entries_) {
    if (!labels.insert(e.label).second)
      throw Error(ErrorKind::InvalidParameter, "distinct-labels", json{{"label", e.label}}, "duplicate label");
    if (e.block.size() == 0)
      throw Error(ErrorKind::InvalidParameter, "nonempty-block", json{{"label", e.label}}, "blocks must be nonempty");
  }
}

LabeledFamily deduplicate(const LabeledFamily& family) {
  std::set<Block> seen;
  std::vector<Entry> out;
  for (const auto& e : family.entries())
    if (seen.insert(e.block).second) out.push_back(e);
  return LabeledFamily(std::move(out));
}

Block translate(const FiniteGroup& g, const Block& b, Element shift) {
  std::vector<Element> out;
  out.reserve(b.size());
  for (Element x : b.elements) out.push_back(g.add(x, shift));
  return Block(std::move(out));
}

Subgroup stabilizer(const FiniteGroup& g, const Block& b) {
  std::vector<Element> st;
  for (Element s = 0; s < g.order(); ++s)
    if (translate(g, b, s) == b) st.push_back(s);
  return Subgroup{std::move(st)};
}

std::optional<Element> are_translates(const FiniteGroup& g, const Block& b, const Block& c) {
  if (b.size() != c.size()) return std::nullopt;
  for (Element s = 0; s < g.order(); ++s)
    if (translate(g, c, s) == b) return s;
  return std::nullopt;
}

std::vector<std::vector<Label>> equivalence_classes(const FiniteGroup& g, const LabeledFamily& family) {
  // Canonical key of a ∼-class: the smallest translate.
  std::map<Block, std::size_t> class_of;
  std::vector<std::vector<Label>> classes;
  for (const auto& e : family.entries()) {
    Block key = e.block;
    for (Element s = 1; s < g.order(); ++s) key = std::min(key, translate(g, e.block, s));
    auto [it, fresh] = class_of.try_emplace(std::move(key), classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(e.label);
  }
  return classes;
}

std::vector<Block> development(const FiniteGroup& g, const LabeledFamily& family) {
  std::set<Block> out;
  for (const auto& e : family.entries())
    for (Element s = 0; s < g.order(); ++s) out.insert(translate(g, e.block, s));
  return {out.begin(), out.end()};
}

Verdict<SdfCertificate> verify_sdf(const FiniteGroup& g, const LabeledFamily& family) {
  if (family.empty())
    throw Error(ErrorKind::InvalidParameter, "nonempty-family", json::object(), "family has no entries");
  const int v = g.order();
  const auto& entries = family.entries();
  for (const auto& e : entries)
    for (Element x : e.block.elements)
      if (x < 0 || x >= v)
        throw Error(ErrorKind::InvalidParameter, "range", json{{"label", e.label}, {"element", x}},
                    "block element outside the group");

  const Entry& first = entries.front();
  for (const auto& e : entries)
    if (e.block.size() != first.block.size())
      return Failure{1, "|B| = k", json{{"labels", {first.label, e.label}}, {"sizes", {first.block.size(), e.block.size()}}},
                     "blocks have different sizes"};

  const Subgroup first_stab = stabilizer(g, first.block);
  for (const auto& e : entries) {
    const std::size_t mu = stabilizer(g, e.block).size();
    if (mu != first_stab.size())
      return Failure{2, "|G_B| = μ", json{{"labels", {first.label, e.label}}, {"stabilizer_orders", {first_stab.size(), mu}}},
                     "stabilizers have different orders"};
  }

  const auto classes = equivalence_classes(g, family);
  std::map<Label, std::size_t> class_size;
  for (const auto& cls : classes)
    for (Label l : cls) class_size[l] = cls.size();
  const std::vector<Label>* first_class = nullptr;
  for (const auto& cls : classes) {
    if (cls.front() == first.label) first_class = &cls;
    if (cls.size() != classes.front().size())
      return Failure{3, "|B/∼| = ν",
                     json{{"labels", {classes.front().front(), cls.front()}},
                          {"class_sizes", {classes.front().size(), cls.size()}}},
                     "translate classes have different sizes"};
  }

  // λ′(d) = Σ_B |{(a,b) ∈ B×B : a − b = d}| = Σ_B |B ∩ (B + d)|.
  std::vector<std::int64_t> count(v, 0);
  for (const auto& e : entries)
    for (Element a : e.block.elements)
      for (Element b : e.block.elements) ++count[g.sub(a, b)];
  for (Element d = 2; d < v; ++d)
    if (count[d] != count[1])
      return Failure{4, "λ′ constant", json{{"d", {1, d}}, {"counts", {count[1], count[d]}}},
                     "difference counts differ between nonzero elements"};

  SdfCertificate cert;
  cert.v = v;
  cert.k = static_cast<int>(first.block.size());
  cert.mu = static_cast<int>(first_stab.size());
  cert.nu = static_cast<int>(classes.front().size());
  cert.lambda_prime = count[1];
  const std::int64_t mn = static_cast<std::int64_t>(cert.mu) * cert.nu;
  if (cert.lambda_prime == 0 || cert.lambda_prime % mn != 0)
    return Failure{5, "μν divides λ′", json{{"lambda_prime", cert.lambda_prime}, {"mu", cert.mu}, {"nu", cert.nu}},
                   "λ′ is not a positive multiple of μν"};
  cert.lambda = cert.lambda_prime / mn;
  cert.reference_label = first.label;
  cert.reference_stabilizer = first_stab.elements;
  cert.reference_class = *first_class;
  return cert;
}

Verdict<Design> verify_bibd(int v, std::vector<Block> blocks) {
  if (v < 2) throw Error(ErrorKind::InvalidParameter, "points", json{{"v", v}}, "a design needs at least 2 points");
  if (blocks.empty()) throw Error(ErrorKind::InvalidParameter, "blocks", json::object(), "a design needs blocks");
  for (const auto& b : blocks)
    for (Element x : b.elements)
      if (x < 0 || x >= v)
        return Failure{1, "points in range", json{{"block", block_json(b)}, {"point", x}}, "point outside [0, v)"};
  {
    std::set<Block> seen;
    for (const auto& b : blocks)
      if (!seen.insert(b).second)
        return Failure{2, "repeated block", json{{"block", block_json(b)}}, "the block occurs more than once"};
  }
  const std::size_t k = blocks.front().size();
  for (const auto& b : blocks)
    if (b.size() != k)
      return Failure{3, "|B| = k", json{{"blocks", {block_json(blocks.front()), block_json(b)}}},
                     "blocks have different sizes"};

  std::vector<std::int64_t> pairs(static_cast<std::size_t>(v) * v, 0);
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) ++pairs[static_cast<std::size_t>(b.elements[i]) * v + b.elements[j]];
  const std::int64_t lambda = pairs[1];
  for (int a = 0; a < v; ++a)
    for (int c = a + 1; c < v; ++c) {
      const std::int64_t n = pairs[static_cast<std::size_t>(a) * v + c];
      if (n != lambda || n == 0)
        return Failure{4, "pair coverage", json{{"pair", {a, c}}, {"count", n}, {"expected", lambda}},
                       n == 0 ? "a point pair lies in no block" : "point pairs lie in different numbers of blocks"};
    }

  std::sort(blocks.begin(), blocks.end());
  return Design{v, static_cast<int>(k), lambda, std::move(blocks)};
}

bool is_permutation(const Permutation& pi) {
  std::vector<char> hit(pi.size(), 0);
  for (Element y : pi) {
    if (y < 0 || y >= static_cast<Element>(pi.size()) || hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

bool is_design_automorphism(const Permutation& pi, const Design& design) {
  if (static_cast<int>(pi.size()) != design.v || !is_permutation(pi))
    throw Error(ErrorKind::InvalidParameter, "bijection", json{{"permutation", pi}},
                "not a bijection of the point set");
  std::vector<Block> image;
  image.reserve(design.blocks.size());
  for (const auto& b : design.blocks) {
    std::vector<Element> e;
    for (Element x : b.elements) e.push_back(pi[x]);
    image.emplace_back(std::move(e));
  }
  std::sort(image.begin(), image.end());
  return image == design.blocks;
}

std::size_t ordered_pair_orbit_size(std::span<const Permutation> gens, int v) {
  if (v < 2) return 0;
  for (const auto& p : gens)
    if (static_cast<int>(p.size()) != v || !is_permutation(p))
      throw Error(ErrorKind::InvalidParameter, "bijection", json{{"permutation", p}},
                  "generator is not a bijection of [0, v)");
  std::vector<char> seen(static_cast<std::size_t>(v) * v, 0);
  std::vector<std::pair<Element, Element>> queue{{0, 1}};
  seen[1] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto [a, b] = queue[i];
    for (const auto& p : gens) {
      const std::size_t key = static_cast<std::size_t>(p[a]) * v + p[b];
      if (!seen[key]) {
        seen[key] = 1;
        queue.emplace_back(p[a], p[b]);
      }
    }
  }
  return queue.size();
}

bool is_doubly_transitive(std::span<const Permutation> gens, int v) {
  return ordered_pair_orbit_size(gens, v) == static_cast<std::size_t>(v) * (v - 1);
}

}  // namespace shortdiff
