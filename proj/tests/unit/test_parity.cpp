#include <doctest.h>

#include <numeric>

#include "fakequad/fundgroup.hpp"
#include "fakequad/parity.hpp"
#include "fixtures.hpp"

using namespace fakequad;
using fixtures::group;

namespace {

int failing_check(const ObstructionOptions& o) {
  try {
    theta_obstruction_suite(o);
  } catch (const ObstructionFailure& f) {
    return f.check();
  }
  return 0;
}

// a = d(-2 + sum(1 - 1/m)) evaluated with exact fractions on the test side
std::int64_t oracle_coefficient(const std::vector<std::int64_t>& m) {
  std::int64_t d = 1;
  for (auto x : m) d = std::lcm(d, x);
  std::int64_t num = -2 * d;
  for (auto x : m) num += d - d / x;
  return num;
}

}  // namespace

TEST_CASE("ramification coefficients") {
  CHECK(ramification_coefficient(Signature({2, 5, 5})) == 1);
  CHECK(ramification_coefficient(Signature({3, 3, 3, 3})) == 2);
  for (const auto& m : std::vector<std::vector<std::int64_t>>{
           {5, 5, 5}, {2, 2, 2, 3}, {3, 3, 5}, {2, 4, 6}, {2, 2, 4, 4}, {2, 2, 2, 2, 2}, {3, 4, 4}}) {
    std::vector<std::size_t> s(m.begin(), m.end());
    CHECK(ramification_coefficient(Signature(s)) == oracle_coefficient(m));
  }
}

TEST_CASE("canonical class of the main pair") {
  const UnmixedPair pair = fixtures::main_pair();
  const NumClass k = canonical_num_class(pair);
  CHECK(k == NumClass{1, 2, 10, 3});
  // K^2 = 2 a1 a2 (Phi_1 Phi_2 = 1 on a unimodular lattice)
  CHECK(2 * k.a1 * k.a2 == 4);
  CHECK(canonical_num_class(pair.swapped()) == NumClass{2, 1, 3, 10});
  const auto a5 = group("A5");
  const auto gv = fixtures::vec(a5, fixtures::kMainGv1, {2, 5, 5});
  CHECK_THROWS_AS(canonical_num_class(make_pair(gv, gv)), std::invalid_argument);
}

TEST_CASE("torsion gate") {
  AbelianInvariants h;
  h.torsion = {3, 3, 15};
  CHECK(torsion_gate(h));
  h.torsion = {2, 6};
  CHECK(!torsion_gate(h));
  h.free_rank = 1;
  CHECK_THROWS_AS(torsion_gate(h), std::domain_error);
}

TEST_CASE("obstruction suite passes") {
  const auto ev = theta_obstruction_suite();
  REQUIRE(ev.size() == 8 + cited_steps().size());
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(ev[i].id == "check-" + std::to_string(i + 1));
    CHECK(ev[i].kind == EvidenceKind::machine_verified);
    CHECK(ev[i].passed);
  }
  for (std::size_t i = 8; i < ev.size(); ++i) {
    CHECK(ev[i].kind == EvidenceKind::cited_assumption);
    CHECK(ev[i].id == cited_steps()[i - 8]);
  }
  CHECK(ev[2].detail.find("triv + V + U") != std::string::npos);
}

TEST_CASE("negative controls fail at the documented check") {
  ObstructionOptions wrong_v;
  wrong_v.chi_v_degree = 5;
  CHECK(failing_check(wrong_v) == 3);
  ObstructionOptions wrong_ext;
  wrong_ext.extension = "S5";
  CHECK(failing_check(wrong_ext) == 4);
  wrong_ext.extension = "A5";
  CHECK(failing_check(wrong_ext) == 4);
  CHECK(failing_check({}) == 0);
}

TEST_CASE("verdicts") {
  const UnmixedPair pair = fixtures::main_pair();
  const AbelianInvariants h = h1_surface(pair);
  const ParityVerdict v = parity_verdict(pair, h, "odd");
  CHECK(v.verdict == Verdict::odd);
  CHECK(v.torsion_odd);
  CHECK(v.evidence.size() == 2 + 8 + cited_steps().size());
  CHECK(v.literature_note == std::optional<std::string>("odd"));
  CHECK(std::string(to_string(v.verdict)) == "ODD");

  AbelianInvariants even_torsion;
  even_torsion.torsion = {2, 6};
  CHECK(parity_verdict(pair, even_torsion).verdict == Verdict::undetermined);

  const auto z5 = group("Z5^2");
  const auto ev = find_free_pair(z5, Signature({5, 5, 5}), Signature({5, 5, 5}));
  REQUIRE(ev);
  const ParityVerdict e = parity_verdict(*ev, h1_surface(*ev));
  CHECK(e.coefficients.a1 % 2 == 0);
  CHECK(e.coefficients.a2 % 2 == 0);
  CHECK(e.verdict == Verdict::even);

  const auto a5 = group("A5");
  const auto other = find_free_pair(a5, Signature({5, 5, 5}), Signature({2, 2, 2, 3}));
  REQUIRE(other);
  CHECK(!is_main_family(*other));
  CHECK(parity_verdict(*other, h1_surface(*other), "open").verdict == Verdict::undetermined);
  CHECK(is_main_family(pair.swapped()));
}
