#include <doctest.h>

#include <random>

#include "fakequad/cyclotomic.hpp"
#include "oracles.hpp"

using namespace fakequad;

namespace {

Cyclotomic random_element(std::mt19937& rng, std::uint32_t n) {
  std::uniform_int_distribution<std::int64_t> c(-4, 4);
  std::vector<std::int64_t> coeffs(n);
  for (auto& x : coeffs) x = c(rng);
  return Cyclotomic::from_coefficients(n, coeffs);
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-8; }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(5) == std::vector<std::int64_t>{1, 1, 1, 1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(15).size() == 9);
}

TEST_CASE("arithmetic agrees with complex evaluation") {
  std::mt19937 rng(11);
  for (std::uint32_t n : {3u, 4u, 5u, 8u, 12u, 15u, 30u, 60u}) {
    CAPTURE(n);
    for (int t = 0; t < 25; ++t) {
      const Cyclotomic a = random_element(rng, n), b = random_element(rng, n);
      const auto za = oracle::evaluate(n, a.coordinates());
      const auto zb = oracle::evaluate(n, b.coordinates());
      CHECK(close(a.approx(), za));
      CHECK(close((a + b).approx(), za + zb));
      CHECK(close((a - b).approx(), za - zb));
      CHECK(close((a * b).approx(), za * zb));
      CHECK(close(a.conj().approx(), std::conj(za)));
      CHECK(a * b == b * a);
      CHECK((a + b) - b == a);
    }
  }
}

TEST_CASE("roots of unity") {
  const Cyclotomic z = Cyclotomic::root_power(5, 1);
  Cyclotomic sum(5, 0);
  for (int k = 0; k < 5; ++k) sum += Cyclotomic::root_power(5, k);
  CHECK(sum.is_zero());
  CHECK(Cyclotomic::root_power(5, 5) == Cyclotomic(5, 1));
  CHECK(Cyclotomic::root_power(5, -1) == z.conj());
  CHECK(z.galois(2) == Cyclotomic::root_power(5, 2));
  // golden ratio: 1 + z + z^-1 satisfies x^2 = x + 1
  const Cyclotomic phi = Cyclotomic(5, 1) + z + z.conj();
  CHECK(phi * phi == phi + Cyclotomic(5, 1));
}

TEST_CASE("rational values and exact division") {
  const Cyclotomic six(12, 6);
  CHECK(six.is_rational());
  CHECK(six.rational_value() == 6);
  CHECK(six.divide_exact(3) == Cyclotomic(12, 2));
  CHECK_THROWS_AS(Cyclotomic(12, 5).divide_exact(2), std::domain_error);
  CHECK_THROWS_AS(Cyclotomic::root_power(3, 1).rational_value(), std::domain_error);
  CHECK(Cyclotomic(7, 0).to_string() == "0");
}

TEST_CASE("modular reduction is a ring map") {
  // 11 = 1 mod 5, and 3 has order 5 mod 11
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    const Cyclotomic a = random_element(rng, 5), b = random_element(rng, 5);
    CHECK((a * b).reduce_mod(11, 3) == (a.reduce_mod(11, 3) * b.reduce_mod(11, 3)) % 11);
    CHECK((a + b).reduce_mod(11, 3) == (a.reduce_mod(11, 3) + b.reduce_mod(11, 3)) % 11);
  }
}
