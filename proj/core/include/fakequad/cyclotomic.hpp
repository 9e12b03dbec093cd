#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace fakequad {

using Rational = boost::rational<std::int64_t>;

/// Integer polynomial coefficients (constant term first) of the n-th
/// cyclotomic polynomial.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n);

/// Element of Z[zeta_e] stored by its integer coordinates in the power basis
/// 1, z, ..., z^(phi(e)-1), i.e. reduced modulo the e-th cyclotomic
/// polynomial. The representation is canonical, so equality is coordinatewise.
class Cyclotomic {
public:
  Cyclotomic() = default;
  Cyclotomic(std::uint32_t order, std::int64_t value);

  /// z^k for a primitive order-th root of unity z.
  static Cyclotomic root_power(std::uint32_t order, std::int64_t k);
  /// Reduces coefficients of 1, z, z^2, ... (any length).
  static Cyclotomic from_coefficients(std::uint32_t order, const std::vector<std::int64_t>& coeffs);

  std::uint32_t order() const { return order_; }
  const std::vector<std::int64_t>& coordinates() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Constant term; throws std::domain_error unless is_rational().
  std::int64_t rational_value() const;

  /// Complex conjugate (z -> z^-1).
  Cyclotomic conj() const;
  /// Galois action z -> z^k.
  Cyclotomic galois(std::int64_t k) const;
  /// Exact division by an integer; throws std::domain_error if inexact.
  Cyclotomic divide_exact(std::int64_t d) const;

  std::complex<double> approx() const;
  /// Image under z -> root in Z/pZ.
  std::uint64_t reduce_mod(std::uint64_t p, std::uint64_t root) const;

  /// Renders integer combinations of z^k, e.g. "-1 - z^2 + z^3"; "0" for zero.
  std::string to_string() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(std::int64_t k, Cyclotomic a);
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;
  /// Lexicographic on coordinates; a fixed total order for deterministic sorting.
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) { return a.coords_ < b.coords_; }

private:
  void reduce(std::vector<std::int64_t> coeffs);
  void check_compatible(const Cyclotomic& o) const;

  std::uint32_t order_ = 1;
  std::vector<std::int64_t> coords_{0};
};

}  // namespace fakequad
