#pragma once

// Slow reference implementations used to cross-check the engine.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;
using Matrix = std::vector<std::vector<BigInt>>;
using Images = std::vector<int>;

inline Images compose(const Images& a, const Images& b) {
  Images r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[static_cast<std::size_t>(b[x])];
  return r;
}

inline Images identity(std::size_t n) {
  Images r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<int>(i);
  return r;
}

inline Images inverse(const Images& a) {
  Images r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[static_cast<std::size_t>(a[x])] = static_cast<int>(x);
  return r;
}

inline std::size_t order(const Images& a) {
  std::size_t k = 1;
  Images p = a;
  while (p != identity(a.size())) p = compose(a, p), ++k;
  return k;
}

// Breadth-first closure by right multiplication with the generators.
inline std::set<Images> closure(const std::vector<Images>& gens) {
  std::set<Images> seen{identity(gens.front().size())};
  std::vector<Images> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        Images h = compose(g, s);
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return seen;
}

// Sorted conjugacy class sizes by direct conjugation.
inline std::vector<std::size_t> class_sizes(const std::set<Images>& group) {
  std::set<Images> done;
  std::vector<std::size_t> sizes;
  for (const auto& g : group) {
    if (done.count(g)) continue;
    std::set<Images> cls;
    for (const auto& h : group) cls.insert(compose(compose(h, g), inverse(h)));
    done.insert(cls.begin(), cls.end());
    sizes.push_back(cls.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Bareiss fraction-free determinant.
inline BigInt determinant(Matrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors d_k / d_{k-1}, where d_k is the gcd of all k x k minors.
// Only nonzero factors are returned, units included.
inline std::vector<BigInt> invariant_factors_by_minors(const Matrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  std::vector<BigInt> d{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    BigInt g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        Matrix sub(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
        g = boost::multiprecision::gcd(g, abs(determinant(sub)));
      }
    if (g == 0) break;
    d.push_back(g);
  }
  std::vector<BigInt> out;
  for (std::size_t k = 1; k < d.size(); ++k) out.push_back(d[k] / d[k - 1]);
  return out;
}

// Random unimodular row and column operations: swaps, sign flips and
// additions of a small multiple of another line.
class Scrambler {
public:
  explicit Scrambler(std::uint32_t seed) : rng_(seed) {}

  Matrix operator()(Matrix m, std::size_t steps = 12) {
    const std::size_t rows = m.size(), cols = m.front().size();
    std::uniform_int_distribution<int> kind(0, 5), mult(-3, 3);
    for (std::size_t s = 0; s < steps; ++s) {
      const bool on_rows = kind(rng_) % 2 == 0;
      const std::size_t n = on_rows ? rows : cols;
      if (n < 2) continue;
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      std::size_t i = pick(rng_), j = pick(rng_);
      while (j == i) j = pick(rng_);
      switch (kind(rng_) % 3) {
        case 0:
          if (on_rows)
            std::swap(m[i], m[j]);
          else
            for (auto& r : m) std::swap(r[i], r[j]);
          break;
        case 1:
          if (on_rows)
            for (auto& x : m[i]) x = -x;
          else
            for (auto& r : m) r[i] = -r[i];
          break;
        default: {
          const int c = mult(rng_);
          if (on_rows)
            for (std::size_t k = 0; k < cols; ++k) m[i][k] += c * m[j][k];
          else
            for (auto& r : m) r[i] += c * r[j];
        }
      }
    }
    return m;
  }

private:
  std::mt19937 rng_;
};

inline std::complex<double> evaluate(std::uint32_t order, const std::vector<std::int64_t>& coords) {
  std::complex<double> z = 0;
  for (std::size_t k = 0; k < coords.size(); ++k)
    z += static_cast<double>(coords[k]) * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / order);
  return z;
}

}  // namespace oracle
