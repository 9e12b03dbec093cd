#include "fakequad/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace fakequad {

namespace {

std::vector<std::int64_t> compute_cyclotomic(std::uint32_t n) {
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<std::int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto& den = cyclotomic_polynomial(d);
    const std::size_t deg_den = den.size() - 1;
    const std::size_t deg_num = num.size() - 1;
    std::vector<std::int64_t> quot(deg_num - deg_den + 1, 0);
    for (std::size_t k = deg_num + 1; k-- > deg_den;) {
      const std::int64_t c = num[k];  // den is monic
      quot[k - deg_den] = c;
      if (c == 0) continue;
      for (std::size_t i = 0; i <= deg_den; ++i) num[k - deg_den + i] -= c * den[i];
    }
    for (std::size_t i = 0; i < deg_den; ++i)
      if (num[i] != 0) throw std::logic_error("cyclotomic polynomial division is not exact");
    num = std::move(quot);
  }
  return num;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic polynomial of order 0");
  static std::mutex mutex;
  static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<std::int64_t> poly = n == 1 ? std::vector<std::int64_t>{-1, 1} : compute_cyclotomic(n);
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic(std::uint32_t order, std::int64_t value) : order_(order) {
  reduce({value});
}

Cyclotomic Cyclotomic::root_power(std::uint32_t order, std::int64_t k) {
  const auto e = static_cast<std::int64_t>(order);
  const auto r = static_cast<std::size_t>(((k % e) + e) % e);
  std::vector<std::int64_t> c(r + 1, 0);
  c[r] = 1;
  return from_coefficients(order, c);
}

Cyclotomic Cyclotomic::from_coefficients(std::uint32_t order, const std::vector<std::int64_t>& coeffs) {
  Cyclotomic x;
  x.order_ = order;
  x.reduce(coeffs);
  return x;
}

void Cyclotomic::reduce(std::vector<std::int64_t> c) {
  const auto& phi = cyclotomic_polynomial(order_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = c.size(); k-- > deg;) {
    const std::int64_t lead = c[k];
    if (lead == 0) continue;
    for (std::size_t i = 0; i <= deg; ++i) c[k - deg + i] -= lead * phi[i];
  }
  c.resize(deg, 0);
  coords_ = std::move(c);
}

void Cyclotomic::check_compatible(const Cyclotomic& o) const {
  if (order_ != o.order_) throw std::invalid_argument("cyclotomic numbers over different root orders");
}

bool Cyclotomic::is_zero() const {
  for (auto c : coords_)
    if (c) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i]) return false;
  return true;
}

std::int64_t Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic number " + to_string() + " is not rational");
  return coords_[0];
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  const auto e = static_cast<std::int64_t>(order_);
  std::vector<std::int64_t> c(order_, 0);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const auto target = static_cast<std::size_t>((((static_cast<std::int64_t>(i) * k) % e) + e) % e);
    c[target] += coords_[i];
  }
  return from_coefficients(order_, c);
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::divide_exact(std::int64_t d) const {
  if (d == 0) throw std::domain_error("division by zero");
  Cyclotomic out = *this;
  for (auto& c : out.coords_) {
    if (c % d != 0) throw std::domain_error("cyclotomic number " + to_string() + " is not divisible by " + std::to_string(d));
    c /= d;
  }
  return out;
}

std::complex<double> Cyclotomic::approx() const {
  std::complex<double> sum = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(order_);
    sum += static_cast<double>(coords_[i]) * std::polar(1.0, angle);
  }
  return sum;
}

std::uint64_t Cyclotomic::reduce_mod(std::uint64_t p, std::uint64_t root) const {
  std::uint64_t sum = 0;
  std::uint64_t power = 1;
  const auto sp = static_cast<std::int64_t>(p);
  for (auto c : coords_) {
    const auto cm = static_cast<std::uint64_t>(((c % sp) + sp) % sp);
    sum = (sum + cm * power) % p;
    power = power * root % p;
  }
  return sum;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const std::int64_t c = coords_[i];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (i == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += i == 1 ? "z" : "z^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  a.check_compatible(b);
  std::vector<std::int64_t> c(a.coords_.size() + b.coords_.size(), 0);
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (!a.coords_[i]) continue;
    for (std::size_t j = 0; j < b.coords_.size(); ++j) c[i + j] += a.coords_[i] * b.coords_[j];
  }
  return Cyclotomic::from_coefficients(a.order_, c);
}

Cyclotomic operator*(std::int64_t k, Cyclotomic a) {
  for (auto& c : a.coords_) c *= k;
  return a;
}

Cyclotomic Cyclotomic::operator-() const { return -1 * *this; }

}  // namespace fakequad
