#include <doctest.h>

#include <set>

#include "fakequad/branching.hpp"
#include "fixtures.hpp"

using namespace fakequad;
using fixtures::group;

namespace {

// Cycles of g -> g v on the elements, walked directly in the table.
std::size_t right_orbits(const Group& g, Elem v) {
  std::vector<bool> seen(g.order(), false);
  std::size_t cycles = 0;
  for (Elem s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (Elem x = s; !seen[x]; x = g.mul(x, v)) seen[x] = true;
  }
  return cycles;
}

// 2 - 2g = |G| * 2 - sum over branch points of (|G| - fibre size)
std::size_t oracle_genus(const GenVector& gv) {
  const auto n = static_cast<std::int64_t>(gv.group().order());
  std::int64_t euler = 2 * n;
  for (Elem v : gv.elements()) euler -= n - static_cast<std::int64_t>(right_orbits(gv.group(), v));
  return static_cast<std::size_t>((2 - euler) / 2);
}

std::vector<Elem> oracle_stabilizers(const GenVector& gv) {
  const Group& g = gv.group();
  std::set<Elem> out;
  for (Elem v : gv.elements())
    for (Elem h = 0; h < g.order(); ++h) {
      const Elem c = g.conjugate(v, h);
      for (std::size_t k = 1; k < g.element_order(c); ++k) out.insert(g.pow(c, k));
    }
  return {out.begin(), out.end()};
}

// Triples (a, b, c) with a a class representative, orders (p, q, r), abc = 1,
// generating the group.
std::size_t oracle_count(const Group& g, std::size_t p, std::size_t q, std::size_t r) {
  const auto cls = conjugacy_classes(g);
  std::size_t n = 0;
  for (Elem a : cls.reps) {
    if (g.element_order(a) != p) continue;
    for (Elem b = 0; b < g.order(); ++b) {
      const Elem c = g.inv(g.mul(a, b));
      if (g.element_order(b) == q && g.element_order(c) == r && g.generates({a, b})) ++n;
    }
  }
  return n;
}

}  // namespace

TEST_CASE("signatures") {
  CHECK(Signature({5, 2, 5}).multiplicities() == std::vector<std::size_t>{2, 5, 5});
  CHECK(Signature({2, 5, 5}).lcm() == 10);
  CHECK_THROWS_AS(Signature({2, 5}), std::invalid_argument);
  CHECK_THROWS_AS(Signature({1, 5, 5}), std::invalid_argument);
  CHECK(parse_multiplicities("[2^5]") == std::vector<std::size_t>(5, 2));
  CHECK(parse_multiplicities("[2, 2, 4^2]") == std::vector<std::size_t>{2, 2, 4, 4});
  CHECK(format_multiplicities({3, 3, 3, 3}) == "[3,3,3,3]");
  CHECK_THROWS_AS(parse_multiplicities("[2,,5]"), ParseError);
}

TEST_CASE("certification of the main tuples") {
  const auto a5 = group("A5");
  const auto c1 = fixtures::check(a5, fixtures::kMainGv1, {2, 5, 5});
  REQUIRE(c1);
  CHECK(c1.failure == GenVectorFailure::none);
  CHECK(riemann_hurwitz_genus(60, c1.vector->signature()) == 4);
  CHECK(sheet_count_genus(*c1.vector) == 4);
  const auto c2 = fixtures::check(a5, fixtures::kMainGv2, {3, 3, 3, 3});
  REQUIRE(c2);
  CHECK(genus_from_signature(60, c2.vector->signature()) == 21);
  CHECK(sheet_count_genus(*c2.vector) == 21);
}

TEST_CASE("each invariant is named when it fails") {
  const auto a5 = group("A5");
  const auto tampered = fixtures::check(a5, "(2,4)(3,5) (2,1,3,4,5) (1,2,3,5,4)", {2, 5, 5});
  CHECK(!tampered);
  CHECK(tampered.failure == GenVectorFailure::nontrivial_product);
  CHECK(tampered.diagnostic.find("nontrivial product") != std::string::npos);

  CHECK(fixtures::check(a5, fixtures::kMainGv1, {2, 5, 3}).failure == GenVectorFailure::order_mismatch);
  CHECK(fixtures::check(a5, fixtures::kMainGv1, {2, 5}).failure == GenVectorFailure::bad_signature);
  // three elements of <(1,2,3,4,5), (2,5)(3,4)> = D5
  CHECK(fixtures::check(a5, "(2,5)(3,4) (1,2)(3,5) (1,2,3,4,5)", {2, 2, 5}).failure ==
        GenVectorFailure::proper_subgroup);
}

TEST_CASE("genus formula edge cases") {
  CHECK_THROWS_AS(riemann_hurwitz_genus(7, Signature({2, 5, 5})), std::domain_error);
  CHECK(riemann_hurwitz_genus(60, Signature({2, 3, 5})) == 0);
  CHECK_THROWS_AS(genus_from_signature(60, Signature({2, 3, 5})), std::domain_error);
}

TEST_CASE("riemann-hurwitz agrees with sheet counting for groups up to order 60") {
  const std::vector<std::pair<std::string, std::vector<std::vector<std::size_t>>>> cases = {
      {"A5", {{2, 5, 5}, {3, 3, 3, 3}, {5, 5, 5}, {2, 2, 2, 3}, {3, 3, 5}, {2, 3, 5}}},
      {"S4xZ2", {{2, 4, 6}, {2, 2, 2, 2, 2, 2}}},
      {"G(32)", {{2, 2, 4, 4}, {2, 2, 2, 4}}},
      {"S4", {{3, 4, 4}, {2, 3, 4}, {2, 2, 2, 2, 2, 2}}},
      {"G(16)", {{2, 2, 4, 4}}},
      {"D4xZ2", {{2, 2, 2, 4}}},
      {"Z5^2", {{5, 5, 5}}},
      {"Z3^2", {{3, 3, 3, 3}}},
      {"Z2^3", {{2, 2, 2, 2, 2}}},
  };
  std::size_t total = 0;
  for (const auto& [label, sigs] : cases) {
    const auto g = group(label);
    for (const auto& m : sigs) {
      CAPTURE(label);
      const Signature sig(m);
      for (const auto& gv : enumerate_generating_vectors(g, sig, 40)) {
        ++total;
        const std::size_t rh = riemann_hurwitz_genus(g->order(), sig);
        CHECK(sheet_count_genus(gv) == rh);
        CHECK(oracle_genus(gv) == rh);
        CHECK(stabilizer_elements(gv) == oracle_stabilizers(gv));
        for (Elem h : {Elem{1}, static_cast<Elem>(g->order() - 1)}) {
          const GenVector c = gv.conjugated(h);
          CHECK(sheet_count_genus(c) == rh);
          CHECK(verify_generating_vector(g, c.elements(), c.orders()));
        }
      }
    }
  }
  CHECK(total > 100);
}

TEST_CASE("search results are certified and deterministic") {
  const auto a5 = group("A5");
  CHECK(enumerate_generating_vectors(a5, Signature({2, 2, 2}), 10).empty());
  const auto first = enumerate_generating_vectors(a5, Signature({2, 5, 5}), 1000);
  const auto again = enumerate_generating_vectors(a5, Signature({2, 5, 5}), 1000);
  CHECK(first.size() == oracle_count(*a5, 2, 5, 5));
  REQUIRE(first.size() == again.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].elements() == again[i].elements());
    Elem prod = a5->identity();
    for (Elem v : first[i].elements()) prod = a5->mul(prod, v);
    CHECK(prod == a5->identity());
    CHECK(a5->generates(first[i].elements()));
  }
}

TEST_CASE("freeness and invariants of the main pair") {
  const UnmixedPair pair = fixtures::main_pair();
  CHECK(stabilizer_elements(pair.gv1).size() == 39);
  CHECK(stabilizer_elements(pair.gv2).size() == 20);
  const auto cert = is_free_unmixed(pair);
  CHECK(cert.free);
  CHECK(cert.intersection.empty());
  const auto inv = surface_invariants(pair);
  CHECK(inv.g1 == 4);
  CHECK(inv.g2 == 21);
  CHECK(inv.chi == 1);
  CHECK(inv.K2 == 8);
  CHECK(inv.e == 4);
  CHECK(inv.q == 0);
  CHECK(inv.pg == 0);
  CHECK(inv.D == 1);
}

TEST_CASE("non-free pairs are rejected") {
  const auto a5 = group("A5");
  const auto gv = fixtures::vec(a5, fixtures::kMainGv1, {2, 5, 5});
  const UnmixedPair same = make_pair(gv, gv);
  const auto cert = is_free_unmixed(same);
  CHECK(!cert.free);
  CHECK(cert.intersection.size() == 39);
  CHECK_THROWS_AS(surface_invariants(same), std::domain_error);
  const auto s4 = group("S4");
  const auto other = enumerate_generating_vectors(s4, Signature({3, 4, 4}), 1);
  REQUIRE(other.size() == 1);
  CHECK_THROWS_AS(make_pair(gv, other.front()), std::invalid_argument);
}

TEST_CASE("free pair search") {
  const auto a5 = group("A5");
  const auto pair = find_free_pair(a5, Signature({2, 5, 5}), Signature({3, 3, 3, 3}));
  REQUIRE(pair);
  CHECK(is_free_unmixed(*pair).free);
  CHECK(!find_free_pair(a5, Signature({2, 5, 5}), Signature({2, 5, 5})));
}
