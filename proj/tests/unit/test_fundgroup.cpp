#include <doctest.h>

#include "fakequad/fundgroup.hpp"
#include "fixtures.hpp"

using namespace fakequad;
using fixtures::group;

namespace {

AbelianInvariants ab(std::size_t free, std::initializer_list<long> t) {
  AbelianInvariants a;
  a.free_rank = free;
  for (long x : t) a.torsion.push_back(x);
  return a;
}

}  // namespace

TEST_CASE("words") {
  CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(invert({1, 2, -3}) == Word{3, -2, -1});
  CHECK(free_reduce({1, -1}).empty());
}

TEST_CASE("presentation round trip") {
  const FPGroup g = parse_presentation("a,b | a^4, b^2, a*b*a^-1*b^-1, (a*b)^2");
  CHECK(g.rank() == 2);
  CHECK(g.relators.size() == 4);
  CHECK(g.relators[0] == Word{1, 1, 1, 1});
  CHECK(g.relators[3] == Word{1, 2, 1, 2});
  const FPGroup again = parse_presentation(format_presentation(g));
  CHECK(again.generators == g.generators);
  CHECK(again.relators == g.relators);
  CHECK_THROWS_AS(parse_presentation("a | c^2"), ParseError);
}

TEST_CASE("coset enumeration") {
  const FPGroup s3 = parse_presentation("a,b | a^3, b^2, (a*b)^2");
  const CosetTable t = enumerate_cosets(s3);
  CHECK(t.num_cosets() == 6);
  CHECK(t.is_complete());
  CHECK(t.is_compatible());
  CHECK(t.traces_relators(s3));
  CHECK(enumerate_cosets(s3, {{2}}).num_cosets() == 3);
  const FPGroup z4 = parse_presentation("x | x^4");
  CHECK(enumerate_cosets(z4, {{1, 1}}).num_cosets() == 2);
  CHECK_THROWS_AS(enumerate_cosets(parse_presentation("a,b | a^2"), {}, 500), std::runtime_error);
}

TEST_CASE("hand-built index 2 table gives Z/2") {
  // <x^2> in <x | x^4>: two cosets swapped by x
  const FPGroup z4 = parse_presentation("x | x^4");
  CosetTable t(2, 1);
  t.set(0, 0, 1);
  t.set(1, 0, 0);
  t.set(0, 1, 1);
  t.set(1, 1, 0);
  CHECK(t.traces_relators(z4));
  const auto rs = reidemeister_schreier(z4, t);
  CHECK(rs.schreier_generators == 1);
  CHECK(abelianization(rs.group) == ab(0, {2}));
}

TEST_CASE("abelianization of small presentations") {
  CHECK(abelianization(parse_presentation("a,b | a^3, b^2, (a*b)^2")) == ab(0, {2}));
  CHECK(abelianization(parse_presentation("a,b | a^4, b^6")) == ab(0, {2, 12}));
  CHECK(abelianization(parse_presentation("a,b | a*b*a^-1*b^-1")) == ab(2, {}));
  const FPGroup t = tietze_reduce(parse_presentation("a,b | a, b^3"));
  CHECK(t.rank() == 1);
  CHECK(abelianization(t) == ab(0, {3}));
}

TEST_CASE("polygonal groups") {
  const FPGroup t1 = polygonal_presentation(Signature({2, 5, 5}));
  CHECK(t1.generators == std::vector<std::string>{"x1", "x2", "x3"});
  CHECK(t1.relators.size() == 4);
  CHECK(abelianization(t1) == ab(0, {5}));
  CHECK(abelianization(polygonal_presentation(Signature({3, 3, 3, 3}), "y")) == ab(0, {3, 3, 3}));
  CHECK(abelianization(polygonal_presentation(std::vector<std::size_t>{5, 2, 5})) == ab(0, {5}));
  const FPGroup p = product_presentation({2, 5, 5}, {3, 3, 3, 3});
  CHECK(p.rank() == 7);
  CHECK(p.relators.size() == 4 + 5 + 12);
}

TEST_CASE("fiber product of the main pair") {
  const UnmixedPair pair = fixtures::main_pair();
  const CosetTable t = fiber_coset_table(pair);
  CHECK(t.num_cosets() == 60);
  CHECK(t.is_complete());
  CHECK(t.is_compatible());
  const FPGroup f = product_presentation(pair.gv1.orders(), pair.gv2.orders());
  CHECK(t.traces_relators(f));
  const auto rs = reidemeister_schreier(f, t);
  CHECK(rs.schreier_generators == 60 * (7 - 1) + 1);
  CHECK(rs.rewritten_relators == 60 * f.relators.size());
  CHECK(h1_surface(pair) == ab(0, {3, 3, 15}));
}

TEST_CASE("h1 is invariant under swap and conjugation") {
  const UnmixedPair pair = fixtures::main_pair();
  const AbelianInvariants h = h1_surface(pair);
  CHECK(h1_surface(pair.swapped()) == h);
  const Group& g = pair.group();
  for (Elem x = 1; x < g.order(); x += 11) {
    CHECK(h1_surface(make_pair(pair.gv1.conjugated(x), pair.gv2.conjugated(x))) == h);
    CHECK(h1_surface(make_pair(pair.gv1, pair.gv2.conjugated(x))) == h);
  }
  const auto z5 = group("Z5^2");
  const auto other = find_free_pair(z5, Signature({5, 5, 5}), Signature({5, 5, 5}));
  REQUIRE(other);
  CHECK(h1_surface(*other) == ab(0, {5, 5, 5}));
  CHECK(h1_surface(other->swapped()) == ab(0, {5, 5, 5}));
}

TEST_CASE("non-free pairs have no fiber product homology") {
  const auto a5 = group("A5");
  const auto gv = fixtures::vec(a5, fixtures::kMainGv1, {2, 5, 5});
  CHECK_THROWS_AS(fiber_product_homology(make_pair(gv, gv)), std::domain_error);
}
