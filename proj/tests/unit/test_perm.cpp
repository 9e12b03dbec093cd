#include <doctest.h>

#include <random>

#include "fakequad/perm.hpp"
#include "oracles.hpp"

using namespace fakequad;

namespace {

oracle::Images images_of(const Perm& p) { return {p.images().begin(), p.images().end()}; }

Perm random_perm(std::mt19937& rng, std::size_t n) {
  std::vector<Perm::Point> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Perm::Point>(i);
  std::shuffle(v.begin(), v.end(), rng);
  return Perm(v);
}

}  // namespace

TEST_CASE("cycle notation round trip") {
  const Perm p = parse_cycles("(2,4)(3,5)", 5);
  CHECK(format_cycles(p) == "(2,4)(3,5)");
  CHECK(p[1] == 3);
  CHECK(p[0] == 0);
  CHECK(parse_cycles("(2,1,3,4,5)", 5) == parse_cycles("(1,3,4,5,2)", 5));
  CHECK(format_cycles(Perm(5)) == "()");
  CHECK(parse_cycles("id", 5).is_identity());
  CHECK(parse_cycles("( 1 , 2 )", 3) == parse_cycles("(1,2)", 3));
}

TEST_CASE("composition applies the right factor first") {
  const Perm a = parse_cycles("(1,2)", 3);
  const Perm b = parse_cycles("(2,3)", 3);
  // a(b(1)) = 2, a(b(2)) = a(3) = 3, a(b(3)) = a(2) = 1
  CHECK(compose(a, b) == parse_cycles("(1,2,3)", 3));
}

TEST_CASE("compose agrees with pointwise evaluation") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 9;
    const Perm a = random_perm(rng, n), b = random_perm(rng, n), c = random_perm(rng, n);
    CHECK(images_of(compose(a, b)) == oracle::compose(images_of(a), images_of(b)));
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, a.inverse()).is_identity());
    CHECK(perm_order(a) == oracle::order(images_of(a)));
    CHECK(power(a, perm_order(a)).is_identity());
    CHECK(parse_cycles(format_cycles(a), n) == a);
  }
}

TEST_CASE("cycle decomposition") {
  const Perm p = parse_cycles("(1,5,2)(3,4)", 6);
  const auto cyc = p.cycles();
  REQUIRE(cyc.size() == 2);
  CHECK(cyc[0] == std::vector<std::size_t>{1, 5, 2});
  CHECK(cyc[1] == std::vector<std::size_t>{3, 4});
  CHECK(p.fixed_points() == 1);
  CHECK(perm_order(p) == 6);
}

TEST_CASE("malformed cycles report a column") {
  auto column_of = [](std::string_view text, std::size_t n) -> std::size_t {
    try {
      parse_cycles(text, n);
    } catch (const ParseError& e) {
      return e.column();
    }
    return 0;
  };
  CHECK(column_of("(1,2", 5) > 0);
  CHECK(column_of("(1,6)", 5) == 4);
  CHECK(column_of("(1,1)", 5) == 4);
  CHECK(column_of("(1,x)", 5) == 4);
  CHECK(column_of("(1)(1,2)", 5) > 0);
  CHECK_THROWS_AS(Perm(std::vector<Perm::Point>{0, 0}), std::invalid_argument);
}

TEST_CASE("permutation lists shift columns") {
  const auto v = parse_perm_list("(2,4)(3,5) (2,1,3,4,5) (1,2,3,4,5)", 5);
  REQUIRE(v.size() == 3);
  CHECK(v[2] == parse_cycles("(1,2,3,4,5)", 5));
  try {
    parse_perm_list("(1,2) (3,9)", 5, 10);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 10 + 10);
    CHECK(e.message().find("9") != std::string::npos);
  }
}
