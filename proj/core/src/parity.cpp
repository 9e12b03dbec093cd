#include "fakequad/parity.hpp"

#include <algorithm>
#include <memory>

#include "fakequad/chartab.hpp"

namespace fakequad {

std::int64_t ramification_coefficient(const Signature& sig) {
  const auto d = static_cast<std::int64_t>(sig.lcm());
  std::int64_t a = -2 * d;
  for (auto m : sig.multiplicities()) {
    const auto mm = static_cast<std::int64_t>(m);
    if (d % mm != 0) throw std::domain_error("lcm is not a multiple of a multiplicity");
    a += d - d / mm;
  }
  return a;
}

NumClass canonical_num_class(const UnmixedPair& pair) {
  SurfaceInvariants inv;
  try {
    inv = surface_invariants(pair);
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(e.what());
  }
  if (inv.chi != 1) throw std::invalid_argument("canonical class needs chi = 1, got " + std::to_string(inv.chi));
  NumClass n;
  n.d1 = pair.gv1.signature().lcm();
  n.d2 = pair.gv2.signature().lcm();
  n.a1 = ramification_coefficient(pair.gv1.signature());
  n.a2 = ramification_coefficient(pair.gv2.signature());
  return n;
}

bool torsion_gate(const AbelianInvariants& h1) {
  if (h1.free_rank != 0) throw std::domain_error("torsion gate needs free rank 0, got " + std::to_string(h1.free_rank));
  return h1.torsion_order() % 2 == 1;
}

const char* to_string(EvidenceKind k) {
  return k == EvidenceKind::machine_verified ? "machine-verified" : "cited-assumption";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::even: return "EVEN";
    case Verdict::odd: return "ODD";
    case Verdict::undetermined: return "UNDETERMINED";
  }
  return "UNDETERMINED";
}

ObstructionFailure::ObstructionFailure(int check, const std::string& anchor, const std::string& what)
    : std::runtime_error("obstruction check " + std::to_string(check) + " (" + anchor + ") failed: " + what),
      check_(check),
      anchor_(anchor) {}

namespace {

struct CitedStep {
  std::string id;
  std::string anchor;
  std::string detail;
};

const std::vector<CitedStep>& cited_records() {
  static const std::vector<CitedStep> steps = {
      {"step-II", "Step II", "C is not hyperelliptic: a hyperelliptic g^1_2 would give a 3-dimensional invariant subspace of H^0(K)"},
      {"step-III", "Step III", "a linearized theta characteristic has h^0 = 0, else S^2 H^0(theta) is a small invariant subspace of H^0(K)"},
      {"step-IV-uniqueness", "Step IV", "C is the unique genus 4 curve with A5 symmetry, cut out by the power sums of degree 1, 2, 3"},
      {"step-VI", "Step VI", "theta + L_j is invariant of degree 6, not isomorphic to K, so h^0 = 3"},
      {"step-VIII", "Step VIII", "two invariant sections would give a second invariant quadric on C"},
      {"step-IX", "Step IX", "the centre acts trivially on a line bundle whose sections generate it, so theta + L_j is linearized"},
      {"step-X", "Step X", "a linearized theta would linearize L_j, which is excluded by the projective action on H^0(L_j)"},
  };
  return steps;
}

std::vector<std::int64_t> integral_values(const ClassFunction& f) {
  std::vector<std::int64_t> out;
  for (const auto& v : f.values) out.push_back(v.rational_value());
  return out;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::vector<std::int64_t> sorted_degrees(const CharTable& ct) {
  auto d = ct.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<std::int64_t> unit_vector(std::size_t n, std::initializer_list<std::size_t> ones) {
  std::vector<std::int64_t> v(n, 0);
  for (auto i : ones) v[i] += 1;
  return v;
}

}  // namespace

const std::vector<std::string>& cited_steps() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& s : cited_records()) out.push_back(s.id);
    return out;
  }();
  return ids;
}

std::vector<Evidence> theta_obstruction_suite(const ObstructionOptions& options) {
  std::vector<Evidence> ev;
  auto pass = [&](int k, const std::string& anchor, std::string detail) {
    ev.push_back({"check-" + std::to_string(k), anchor, EvidenceKind::machine_verified, true, std::move(detail)});
  };

  const auto a5 = std::make_shared<const Group>(construct_group("A5"));
  const CharTable ct = character_table(a5);
  const std::size_t r = ct.size();

  // (1) degrees and the unique degree-4 irreducible
  const std::string a1 = "Step I: degrees of A5";
  const auto deg = sorted_degrees(ct);
  if (deg != std::vector<std::int64_t>{1, 3, 3, 4, 5}) throw ObstructionFailure(1, a1, "degrees " + join(deg));
  const auto four = ct.indices_of_degree(4);
  if (four.size() != 1) throw ObstructionFailure(1, a1, "degree 4 irreducible is not unique");
  const std::size_t iV = four.front();
  const auto five = ct.indices_of_degree(5);
  if (five.size() != 1) throw ObstructionFailure(1, a1, "degree 5 irreducible is not unique");
  const std::size_t iU = five.front();
  pass(1, a1, "degrees 1,3,3,4,5; one irreducible of degree 4");

  // (2) chi_V = permutation character - trivial
  const std::string a2 = "Step I: permutation representation";
  const ClassFunction chi_v = subtract(ct, permutation_character(ct), ct.trivial());
  if (inner_product(ct, chi_v, chi_v) != Rational(1) || chi_v.degree() != 4 || chi_v != ct.irreducibles()[iV])
    throw ObstructionFailure(2, a2, "permutation character minus trivial is not the degree 4 irreducible");
  pass(2, a2, "chi_V = (" + join(integral_values(chi_v)) + "), <chi_V, chi_V> = 1");

  // (3) S^2 V = triv + V + U
  const std::string a3 = "Step IV: invariant quadric";
  ClassFunction v3 = chi_v;
  if (options.chi_v_degree) {
    const auto idx = ct.indices_of_degree(*options.chi_v_degree);
    if (idx.empty()) throw ObstructionFailure(3, a3, "no irreducible of degree " + std::to_string(*options.chi_v_degree));
    v3 = ct.irreducibles()[idx.front()];
  }
  const ClassFunction s2 = sym_square(ct, v3);
  std::vector<std::int64_t> s2_values;
  try {
    s2_values = integral_values(s2);
  } catch (const std::domain_error&) {
    throw ObstructionFailure(3, a3, "S^2 has irrational values");
  }
  auto multiset = s2_values;
  std::sort(multiset.begin(), multiset.end());
  std::vector<std::int64_t> printed{10, 1, 2, 0, 0};
  std::sort(printed.begin(), printed.end());
  if (multiset != printed) throw ObstructionFailure(3, a3, "S^2 values (" + join(s2_values) + ") are not a permutation of (10,1,2,0,0)");
  const auto s2_mult = decompose(ct, s2);
  if (s2_mult != unit_vector(r, {0, iV, iU})) throw ObstructionFailure(3, a3, "S^2 decomposes as (" + join(s2_mult) + ")");
  pass(3, a3, "S^2 V = (" + join(s2_values) + ") = triv + V + U; one invariant quadric");

  // (4) central extension
  const std::string a4 = "Step V: central extension of A5";
  std::shared_ptr<const Group> ext;
  try {
    ext = std::make_shared<const Group>(construct_group(options.extension));
  } catch (const std::exception& e) {
    throw ObstructionFailure(4, a4, e.what());
  }
  const auto z = center(ext->table());
  if (z.size() != 2) throw ObstructionFailure(4, a4, options.extension + " has center of order " + std::to_string(z.size()));
  const auto cert = central_quotient_certificate(*ext, *a5);
  if (!cert.holds) throw ObstructionFailure(4, a4, cert.reason);
  pass(4, a4, options.extension + " has center of order 2 and quotient isomorphic to A5");

  // (5) degrees of the extension
  const std::string a5s = "Step V: degrees of SL(2,5)";
  const CharTable et = character_table(ext);
  const auto edeg = sorted_degrees(et);
  if (edeg != std::vector<std::int64_t>{1, 2, 2, 3, 3, 4, 4, 5, 6}) throw ObstructionFailure(5, a5s, "degrees " + join(edeg));
  pass(5, a5s, "degrees 1,2,2,3,3,4,4,5,6");

  // (6) centre acts by -1 in degree 2 and +1 in degree 3
  const std::string a6 = "Step V/VII: centre action";
  for (auto i : et.indices_of_degree(2))
    if (center_action(et, et.irreducibles()[i]) != -1) throw ObstructionFailure(6, a6, "centre acts trivially in degree 2");
  for (auto i : et.indices_of_degree(3))
    if (center_action(et, et.irreducibles()[i]) != 1) throw ObstructionFailure(6, a6, "centre acts nontrivially in degree 3");
  pass(6, a6, "centre acts by -1 on both degree 2 irreducibles and by +1 on both degree 3 irreducibles");

  // (7) chi_3 (x) chi_3' = V + U
  const std::string a7 = "Final remark: tensor of the degree 3 irreducibles";
  const auto three = ct.indices_of_degree(3);
  if (three.size() != 2 || ct.irreducibles()[three[0]] == ct.irreducibles()[three[1]])
    throw ObstructionFailure(7, a7, "expected two distinct degree 3 irreducibles");
  const auto& c3 = ct.irreducibles()[three[0]];
  const auto& c3b = ct.irreducibles()[three[1]];
  const auto t_mult = decompose(ct, tensor(ct, c3, c3b));
  if (t_mult != unit_vector(r, {iV, iU})) throw ObstructionFailure(7, a7, "tensor decomposes as (" + join(t_mult) + ")");
  pass(7, a7, "chi_3 (x) chi_3' = V + U, trivial multiplicity 0");

  // (8) Lambda^2 chi_3 has degree 3 and is not inside S^2 V
  const std::string a8 = "Final remark: second wedge product";
  const ClassFunction l2 = alt_square(ct, c3);
  if (l2.degree() != 3) throw ObstructionFailure(8, a8, "wedge square has degree " + std::to_string(l2.degree()));
  const auto l_mult = decompose(ct, l2);
  bool embeds = true;
  for (std::size_t i = 0; i < r; ++i) embeds = embeds && l_mult[i] <= s2_mult[i];
  if (embeds) throw ObstructionFailure(8, a8, "wedge square embeds in S^2 V");
  pass(8, a8, "Lambda^2 chi_3 = (" + join(l_mult) + ") has degree 3 and does not embed in S^2 V");

  for (const auto& s : cited_records()) ev.push_back({s.id, s.anchor, EvidenceKind::cited_assumption, true, s.detail});
  return ev;
}

bool is_main_family(const UnmixedPair& pair) {
  const Fingerprint a5 = fingerprint(construct_group("A5"));
  if (pair.group().order() != 60 || fingerprint(pair.group()) != a5) return false;
  const auto s1 = pair.gv1.signature().multiplicities();
  const auto s2 = pair.gv2.signature().multiplicities();
  const std::vector<std::size_t> t{2, 5, 5}, q{3, 3, 3, 3};
  return (s1 == t && s2 == q) || (s1 == q && s2 == t);
}

ParityVerdict parity_verdict(const UnmixedPair& pair, const AbelianInvariants& h1, std::optional<std::string> note) {
  ParityVerdict pv;
  pv.h1 = h1;
  pv.literature_note = std::move(note);
  pv.coefficients = canonical_num_class(pair);
  const auto& c = pv.coefficients;
  const bool even = c.a1 % 2 == 0 && c.a2 % 2 == 0;
  pv.evidence.push_back({"num-class", "ramification formula", EvidenceKind::machine_verified, true,
                         "K_S = " + std::to_string(c.a1) + " Phi_1 + " + std::to_string(c.a2) + " Phi_2, d1 = " +
                             std::to_string(c.d1) + ", d2 = " + std::to_string(c.d2)});
  if (even) {
    pv.verdict = Verdict::even;
    pv.evidence.push_back({"even-coefficients", "K_S divisible by 2 in Num", EvidenceKind::machine_verified, true,
                           "both coefficients even"});
    if (h1.free_rank == 0) pv.torsion_odd = torsion_gate(h1);
    return pv;
  }
  if (h1.free_rank != 0) {
    pv.evidence.push_back({"torsion-gate", "odd torsion", EvidenceKind::machine_verified, false,
                           "free rank " + std::to_string(h1.free_rank)});
    return pv;
  }
  pv.torsion_odd = torsion_gate(h1);
  pv.evidence.push_back({"torsion-gate", "odd torsion", EvidenceKind::machine_verified, pv.torsion_odd,
                         "torsion order " + h1.torsion_order().str()});
  if (!is_main_family(pair) || !pv.torsion_odd) return pv;
  try {
    auto suite = theta_obstruction_suite();
    pv.evidence.insert(pv.evidence.end(), suite.begin(), suite.end());
  } catch (const ObstructionFailure& f) {
    pv.evidence.push_back({"check-" + std::to_string(f.check()), f.anchor(), EvidenceKind::machine_verified, false, f.what()});
    return pv;
  }
  pv.verdict = Verdict::odd;
  return pv;
}

}  // namespace fakequad
