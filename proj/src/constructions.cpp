#include "shortdiff/constructions.hpp"

#include <algorithm>
#include <map>

namespace shortdiff {

namespace {

[[noreturn]] void hypothesis(std::string condition, json witness, const std::string& message) {
  throw Error(ErrorKind::Hypothesis, std::move(condition), std::move(witness), message);
}

[[noreturn]] void violation(std::string condition, json witness, const std::string& message) {
  throw Error(ErrorKind::TheoremViolation, std::move(condition), std::move(witness), message);
}

void check_group(const FiniteGroup& g, std::span<const Endomorphism> maps) {
  for (const auto& m : maps)
    if (!(m.group() == g))
      throw Error(ErrorKind::InvalidParameter, "group", json::object(), "map acts on a different group");
}

void check_fpf_subset(const FiniteGroup& g, std::span<const Endomorphism> s) {
  check_group(g, s);
  if (s.size() < 2) hypothesis("|S| > 1", json{{"size", s.size()}}, "S needs at least two maps");
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j]) throw Error(ErrorKind::InvalidParameter, "distinct-maps", json{{"indices", {i, j}}}, "S repeats a map");
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!s[i].is_zero() && !s[i].is_bijective())
      hypothesis("S ⊆ Φ ∪ {0}", json{{"index", i}, {"map", s[i].table()}}, "nonzero member is not an automorphism");
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (i == j) continue;
      if (!difference(s[i], s[j]).is_bijective)
        hypothesis("α − β bijective", json{{"indices", {i, j}}}, "a pairwise difference of members is not bijective");
    }
  const FpfReport r = is_fpf(s);
  if (!r.fpf) hypothesis("|S(x)| = |S|", json{{"x", *r.witness}}, "two members agree on a nonzero element");
}

std::vector<Endomorphism> with_zero(const AutomorphismGroup& phi) {
  std::vector<Endomorphism> s = phi.elements();
  s.push_back(Endomorphism::zero(phi.group()));
  return s;
}

Design develop_and_verify(const FiniteGroup& g, const LabeledFamily& family, const SdfCertificate& cert) {
  Verdict<Design> d = verify_bibd(g.order(), development(g, family));
  if (!d) violation("dev B is a design", d.failure().to_json(), "the development of an sdf failed the design check");
  if (d.value().k != cert.k || d.value().lambda != cert.lambda)
    violation("dev B is a (v,k,λ)-design", json{{"design", {d.value().v, d.value().k, d.value().lambda}}, {"lambda", cert.lambda}},
              "design parameters differ from the sdf certificate");
  return d.value();
}

void expect_design(const Design& d, int v, int k, std::int64_t lambda, const char* formula) {
  if (d.v != v || d.k != k || d.lambda != lambda)
    violation(formula, json{{"expected", {v, k, lambda}}, {"found", {d.v, d.k, d.lambda}}},
              "design parameters differ from the corollary");
}

// Classes must be exactly {a, −a} for every label a.
void expect_segment_classes(const FiniteGroup& g, const OrbitFamily& r) {
  for (const auto& cls : equivalence_classes(g, r.family)) {
    if (cls.size() != 2 || g.neg(static_cast<Element>(cls[0])) != cls[1])
      violation("S(a)/∼ = {S(a), S(−a)}", json{{"class", cls}}, "translate class is not {a, −a}");
  }
}

void expect_mu_nu(const OrbitFamily& r, int mu, int nu, const char* what) {
  if (r.certificate.mu != mu || r.certificate.nu != nu)
    violation(what, json{{"mu", r.certificate.mu}, {"nu", r.certificate.nu}}, "unexpected stabilizer or class size");
}

}  // namespace

std::string_view to_string(SubgroupCase c) {
  switch (c) {
    case SubgroupCase::AllSubgroups: return "subgroup-case";
    case SubgroupCase::NoSubgroups: return "non-subgroup-case";
    case SubgroupCase::Mixed: return "mixed";
  }
  return "mixed";
}

OrbitFamily orbit_family(const FiniteGroup& g, std::span<const Endomorphism> s) {
  check_fpf_subset(g, s);
  std::vector<Entry> entries;
  for (Element x = 1; x < g.order(); ++x) entries.push_back(Entry{x, orbit(s, x)});
  LabeledFamily family(std::move(entries));

  const auto& es = family.entries();
  const std::size_t mu0 = stabilizer(g, es.front().block).size();
  for (const auto& e : es) {
    const std::size_t mu = stabilizer(g, e.block).size();
    if (mu != mu0)
      hypothesis("|G_{S(a)}| = μ", json{{"a", {es.front().label, e.label}}, {"mu", {mu0, mu}}},
                 "stabilizer orders are not uniform over G*");
  }
  std::map<Label, std::size_t> nu_of;
  for (const auto& cls : equivalence_classes(g, family))
    for (Label l : cls) nu_of[l] = cls.size();
  for (const auto& e : es)
    if (nu_of[e.label] != nu_of[es.front().label])
      hypothesis("|S(a)/∼| = ν", json{{"a", {es.front().label, e.label}}, {"nu", {nu_of[es.front().label], nu_of[e.label]}}},
                 "translate class sizes are not uniform over G*");

  Verdict<SdfCertificate> cert = verify_sdf(g, family);
  if (!cert) violation("sdf", cert.failure().to_json(), "uniform orbit family failed the sdf check");
  const auto n = static_cast<std::int64_t>(s.size());
  if (cert.value().lambda_prime != n * (n - 1))
    violation("λ′ = |S|(|S|−1)", json{{"lambda_prime", cert.value().lambda_prime}, {"expected", n * (n - 1)}},
              "difference count differs from |S|(|S|−1)");
  return OrbitFamily{std::move(family), cert.value()};
}

DesignConstruction ferrero(const FiniteGroup& g, const AutomorphismGroup& phi) {
  if (phi.order() < 2) hypothesis("|Φ| > 1", json{{"order", phi.order()}}, "Φ must be nontrivial");
  const FpfReport fpf = is_fpf(phi);
  if (!fpf.fpf) hypothesis("Φ fpf", json{{"x", *fpf.witness}}, "Φ is not fixed-point-free");
  OrbitFamily r = orbit_family(g, phi.elements());
  Design d = develop_and_verify(g, r.family, r.certificate);
  const int n = static_cast<int>(phi.order());
  expect_design(d, g.order(), n, n - 1, "(|G|,|Φ|,|Φ|−1)-design");
  return DesignConstruction{std::move(r.family), r.certificate, std::move(d)};
}

FerreroWithZero ferrero_with_zero(const FiniteGroup& g, const AutomorphismGroup& phi) {
  if (phi.order() < 2) hypothesis("|Φ| > 1", json{{"order", phi.order()}}, "Φ must be nontrivial");
  const FpfReport fpf = is_fpf(phi);
  if (!fpf.fpf) hypothesis("Φ fpf", json{{"x", *fpf.witness}}, "Φ is not fixed-point-free");
  const std::vector<Endomorphism> s = with_zero(phi);

  std::size_t subgroups = 0;
  for (Element x = 1; x < g.order(); ++x)
    if (is_subgroup(g, orbit(s, x).elements)) ++subgroups;
  FerreroWithZero out;
  const auto nonzero = static_cast<std::size_t>(g.order() - 1);
  out.subgroup_case = subgroups == nonzero ? SubgroupCase::AllSubgroups
                      : subgroups == 0     ? SubgroupCase::NoSubgroups
                                           : SubgroupCase::Mixed;

  OrbitFamily r = orbit_family(g, s);
  Design d = develop_and_verify(g, r.family, r.certificate);
  const int n = static_cast<int>(phi.order());
  if (out.subgroup_case == SubgroupCase::AllSubgroups) expect_design(d, g.order(), n + 1, 1, "(|G|,|Φ|+1,1)-design");
  if (out.subgroup_case == SubgroupCase::NoSubgroups) expect_design(d, g.order(), n + 1, n + 1, "(|G|,|Φ|+1,|Φ|+1)-design");
  out.family = std::move(r.family);
  out.certificate = r.certificate;
  out.design = std::move(d);
  return out;
}

TransnormalResult transnormal(const FiniteGroup& g, std::span<const Endomorphism> s, const AutomorphismGroup& psi) {
  check_fpf_subset(g, s);
  const EndoSet sset(s);
  for (const auto& p : psi.elements()) {
    const Endomorphism inv = p.inverse();
    for (std::size_t i = 0; i < s.size(); ++i)
      if (!sset.contains(compose(compose(p, s[i]), inv)))
        hypothesis("Ψ normalizes S", json{{"psi", p.table()}, {"sigma", s[i].table()}}, "ψ σ ψ⁻¹ is not in S");
  }
  std::vector<Element> psi_orbit;
  for (const auto& p : psi.elements()) psi_orbit.push_back(p(1));
  const Block orb(psi_orbit);
  if (static_cast<int>(orb.size()) != g.order() - 1)
    hypothesis("Ψ transitive on G*", json{{"orbit", orb.elements}}, "Ψ-orbit of 1 is not all of G*");

  OrbitFamily r = orbit_family(g, s);
  TransnormalResult out;
  out.design = develop_and_verify(g, r.family, r.certificate);
  out.family = std::move(r.family);
  out.certificate = r.certificate;

  std::vector<Endomorphism> gens = psi.generators();
  if (gens.empty()) gens.push_back(Endomorphism::identity(g));
  for (const auto& p : gens)
    for (Element shift = 0; shift < g.order(); ++shift) {
      Permutation pi(g.order());
      for (Element x = 0; x < g.order(); ++x) pi[x] = g.add(p(x), shift);
      out.automorphisms.push_back(std::move(pi));
    }
  out.all_automorphisms = std::all_of(out.automorphisms.begin(), out.automorphisms.end(),
                                      [&](const Permutation& pi) { return is_design_automorphism(pi, out.design); });

  std::vector<Permutation> action;
  for (Element t : generating_set(g)) {
    Permutation pi(g.order());
    for (Element x = 0; x < g.order(); ++x) pi[x] = g.add(x, t);
    action.push_back(std::move(pi));
  }
  for (const auto& p : psi.generators()) action.push_back(p.table());
  out.pair_orbit_size = ordered_pair_orbit_size(action, g.order());
  out.doubly_transitive = is_doubly_transitive(action, g.order());
  if (!out.all_automorphisms || !out.doubly_transitive)
    violation("G⋊Ψ doubly transitive on dev B",
              json{{"all_automorphisms", out.all_automorphisms}, {"pair_orbit_size", out.pair_orbit_size}},
              "the affine action failed on the development");
  return out;
}

OrbitFamily nearfield_family(const FiniteField& f, std::span<const FieldElement> t) {
  if (t.size() < 2) hypothesis("|T| > 1", json{{"size", t.size()}}, "T needs at least two elements");
  std::vector<Endomorphism> s;
  for (const auto& a : t) s.push_back(field_mult_endo(f, a));
  return orbit_family(f.additive_group(), s);
}

OrbitFamily segments(const FiniteGroup& g, std::span<const Endomorphism> s) {
  check_group(g, s);
  const EndoSet sset(s);
  const Endomorphism zero = Endomorphism::zero(g);
  const Endomorphism one = Endomorphism::identity(g);
  if (!sset.contains(zero) || !sset.contains(one) || sset.size() <= 2)
    hypothesis("0,1 ∈ S and |S| > 2", json{{"size", sset.size()}, {"has_zero", sset.contains(zero)}, {"has_one", sset.contains(one)}},
               "S must contain 0 and 1 and have more than two members");
  for (const auto& a : sset) {
    const PointwiseMap m = one_minus(a);
    if (!sset.contains_table(m.table))
      hypothesis("S = 1 − S", json{{"alpha", a.table()}, {"one_minus_alpha", m.table}}, "1 − α is not in S");
  }
  std::vector<Endomorphism> nonzero;
  for (const auto& a : sset) {
    if (a.is_zero()) continue;
    if (!a.is_bijective())
      hypothesis("⟨S*⟩ fpf automorphism group", json{{"alpha", a.table()}}, "member of S* is not an automorphism");
    nonzero.push_back(a);
  }
  const AutomorphismGroup generated = closure(g, nonzero);
  const FpfReport fpf = is_fpf(generated);
  if (!fpf.fpf) hypothesis("⟨S*⟩ fpf automorphism group", json{{"x", *fpf.witness}}, "⟨S*⟩ is not fixed-point-free");
  if (g.order() % 2 == 0) hypothesis("|G| odd", json{{"order", g.order()}}, "group order is even");
  if (generated.order() % 2 == 0)
    hypothesis("|⟨S*⟩| odd", json{{"order", generated.order()}}, "the group generated by S* has even order");
  if (!g.commutative()) violation("(G,+) abelian", json::object(), "α and 1 − α are automorphisms but G is not abelian");

  OrbitFamily r = orbit_family(g, sset.members());
  expect_mu_nu(r, 1, 2, "|G_{S(a)}| = 1 and |S(a)/∼| = 2");
  const auto n = static_cast<std::int64_t>(sset.size());
  if (r.certificate.lambda != n * (n - 1) / 2)
    violation("λ = |S|(|S|−1)/2", json{{"lambda", r.certificate.lambda}}, "unexpected λ");
  expect_segment_classes(g, r);
  return r;
}

OrbitFamily segments_order6(const FiniteGroup& g, const AutomorphismGroup& phi) {
  const EndoSet s = order6_segment_set(phi);
  OrbitFamily r = orbit_family(g, s.members());
  expect_mu_nu(r, 1, 2, "G_{S(a)} = {0} and S(a)/∼ = {S(a),−S(a)}");
  const auto n = static_cast<std::int64_t>(s.size());
  if (r.certificate.lambda != n * (n - 1) / 2)
    violation("λ = |S|(|S|−1)/2", json{{"lambda", r.certificate.lambda}}, "unexpected λ");
  expect_segment_classes(g, r);
  return r;
}

Example1Report example1_check(const FiniteGroup& g, std::span<const Endomorphism> s) {
  check_group(g, s);
  for (Element x = 1; x < g.order(); ++x)
    if (g.add(x, x) != 0) hypothesis("elementary abelian 2-group", json{{"x", x}}, "x + x != 0");
  const EndoSet sset(s);
  if (!sset.contains(Endomorphism::zero(g)) || !sset.contains(Endomorphism::identity(g)))
    hypothesis("0,1 ∈ S", json::object(), "S must contain 0 and 1");
  for (const auto& a : sset)
    if (!sset.contains_table(one_minus(a).table))
      hypothesis("S = 1 − S", json{{"alpha", a.table()}}, "1 − α is not in S");

  Example1Report rep;
  rep.containment = true;
  rep.equality = true;
  for (Element a = 1; a < g.order(); ++a) {
    const Subgroup st = stabilizer(g, orbit(sset.members(), a));
    if (!st.contains(0) || !st.contains(a)) {
      rep.containment = false;
      violation("{0,a} ⊆ G_{S(a)}", json{{"a", a}, {"stabilizer", st.elements}}, "containment failed");
    }
    if (st.size() != 2) rep.equality = false;
  }
  try {
    rep.family = orbit_family(g, sset.members());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Hypothesis) throw;
  }
  if (rep.equality) {
    if (!rep.family) violation("sdf under equality", json::object(), "orbit family failed although G_{S(a)} = {0,a}");
    if (rep.family->certificate.nu != 1)
      violation("|S(a)/∼| = 1", json{{"nu", rep.family->certificate.nu}}, "class size is not 1");
  }
  return rep;
}

}  // namespace shortdiff
