#include "fakequad/smith.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fakequad {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix id(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

}  // namespace

BigInt AbelianInvariants::torsion_order() const {
  BigInt p = 1;
  for (const auto& d : torsion) p *= d;
  return p;
}

std::string AbelianInvariants::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.emplace_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& d : torsion) parts.push_back("Z/" + d.str());
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

std::string AbelianInvariants::torsion_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (i) out += ", ";
    out += torsion[i].str();
  }
  return out + ")";
}

AbelianInvariants normalize_abelian(const std::vector<BigInt>& cyclic_orders) {
  AbelianInvariants out;
  // prime -> exponents of the prime-power cyclic factors
  std::map<BigInt, std::vector<unsigned>> primary;
  for (BigInt n : cyclic_orders) {
    if (n < 0) throw std::invalid_argument("negative cyclic order");
    if (n == 0) {
      ++out.free_rank;
      continue;
    }
    for (BigInt p = 2; p * p <= n; ++p) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      if (e) primary[p].push_back(e);
    }
    if (n > 1) primary[n].push_back(1);
  }
  std::size_t length = 0;
  for (auto& [p, exps] : primary) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    length = std::max(length, exps.size());
  }
  // The largest invariant factor takes the largest power of every prime.
  std::vector<BigInt> factors(length, 1);
  for (const auto& [p, exps] : primary)
    for (std::size_t i = 0; i < exps.size(); ++i) factors[length - 1 - i] *= boost::multiprecision::pow(p, exps[i]);
  out.torsion = std::move(factors);
  return out;
}

AbelianInvariants SmithResult::cokernel(std::size_t cols) const {
  AbelianInvariants out;
  out.free_rank = cols - rank;
  for (const auto& d : diagonal)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  if (a.front().size() != inner) throw std::invalid_argument("matrix shapes do not match");
  const std::size_t cols = inner == 0 ? 0 : b.front().size();
  IntMatrix c(a.size(), std::vector<BigInt>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

SmithResult smith_normal_form(const IntMatrix& input, bool with_transforms) {
  IntMatrix a = input;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");

  IntMatrix u, v;
  if (with_transforms) {
    u = identity_matrix(rows);
    v = identity_matrix(cols);
  }
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    if (with_transforms) std::swap(u[i], u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    if (with_transforms)
      for (auto& row : v) std::swap(row[i], row[j]);
  };
  // row_i -= q * row_j
  auto row_op = [&](std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t k = 0; k < cols; ++k)
      if (a[j][k] != 0) a[i][k] -= q * a[j][k];
    if (with_transforms)
      for (std::size_t k = 0; k < rows; ++k)
        if (u[j][k] != 0) u[i][k] -= q * u[j][k];
  };
  // col_i -= q * col_j
  auto col_op = [&](std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t k = 0; k < rows; ++k)
      if (a[k][j] != 0) a[k][i] -= q * a[k][j];
    if (with_transforms)
      for (std::size_t k = 0; k < cols; ++k)
        if (v[k][j] != 0) v[k][i] -= q * v[k][j];
  };

  SmithResult res;
  const std::size_t limit = std::min(rows, cols);
  for (std::size_t t = 0; t < limit; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      BigInt best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] == 0) continue;
          const BigInt m = abs_big(a[i][j]);
          if (pi == rows || m < best) {
            best = m;
            pi = i;
            pj = j;
            if (best == 1) break;
          }
        }
      if (pi == rows) break;
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        row_op(i, t, a[i][t] / a[t][t]);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        col_op(j, t, a[t][j] / a[t][t]);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold a row with an entry not divisible by the pivot.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      row_op(t, bad, -1);
    }
    if (a[t][t] == 0) break;
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
      if (with_transforms)
        for (auto& x : u[t]) x = -x;
    }
    res.diagonal.push_back(a[t][t]);
    ++res.rank;
  }
  if (with_transforms) {
    res.left = std::move(u);
    res.right = std::move(v);
  }
  return res;
}

namespace {

// Row r += q * row s, both sorted by column.
SparseRow axpy(const SparseRow& r, const BigInt& q, const SparseRow& s) {
  SparseRow out;
  out.reserve(r.size() + s.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < s.size()) {
    if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || s[j].first < r[i].first) {
      out.emplace_back(s[j].first, q * s[j].second);
      ++j;
    } else {
      BigInt v = r[i].second + q * s[j].second;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

AbelianInvariants cokernel_invariants(const SparseMatrix& m) {
  std::vector<SparseRow> rows;
  for (const auto& row : m.rows) {
    SparseRow clean;
    for (const auto& [c, v] : row) {
      if (c >= m.cols) throw std::invalid_argument("sparse entry outside the column range");
      if (v != 0) clean.emplace_back(c, v);
    }
    std::sort(clean.begin(), clean.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t k = 1; k < clean.size(); ++k)
      if (clean[k].first == clean[k - 1].first) throw std::invalid_argument("duplicate column in sparse row");
    if (!clean.empty()) rows.push_back(std::move(clean));
  }

  std::vector<std::set<std::size_t>> col_rows(m.cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : rows[i]) col_rows[c].insert(i);
  std::vector<bool> row_alive(rows.size(), true);
  std::vector<bool> col_alive(m.cols, true);
  std::size_t unit_pivots = 0;

  // Each unit pivot contributes a factor Z/1 and removes one row and column.
  while (true) {
    std::size_t best_row = rows.size(), best_col = 0, best_cost = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!row_alive[i]) continue;
      for (const auto& [c, v] : rows[i]) {
        if (v != 1 && v != -1) continue;
        const std::size_t cost = (rows[i].size() - 1) * (col_rows[c].size() - 1);
        if (best_row == rows.size() || cost < best_cost) {
          best_row = i;
          best_col = c;
          best_cost = cost;
        }
      }
      if (best_row != rows.size() && best_cost == 0) break;
    }
    if (best_row == rows.size()) break;

    const SparseRow pivot = rows[best_row];
    const BigInt sign = std::find_if(pivot.begin(), pivot.end(), [&](const auto& e) { return e.first == best_col; })->second;
    const std::vector<std::size_t> targets(col_rows[best_col].begin(), col_rows[best_col].end());
    for (std::size_t i : targets) {
      if (i == best_row) continue;
      const auto it = std::find_if(rows[i].begin(), rows[i].end(), [&](const auto& e) { return e.first == best_col; });
      const BigInt q = -(it->second * sign);
      for (const auto& [c, v] : rows[i]) col_rows[c].erase(i);
      rows[i] = axpy(rows[i], q, pivot);
      for (const auto& [c, v] : rows[i]) col_rows[c].insert(i);
      if (rows[i].empty()) row_alive[i] = false;
    }
    // The pivot row is now the only one touching best_col; column operations
    // clear the rest of the row without affecting the other rows.
    for (const auto& [c, v] : pivot) col_rows[c].erase(best_row);
    row_alive[best_row] = false;
    col_alive[best_col] = false;
    ++unit_pivots;
  }

  std::vector<std::size_t> col_index(m.cols, 0);
  std::size_t remaining_cols = 0;
  for (std::size_t c = 0; c < m.cols; ++c)
    if (col_alive[c]) col_index[c] = remaining_cols++;
  IntMatrix dense;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!row_alive[i] || rows[i].empty()) continue;
    std::vector<BigInt> row(remaining_cols, 0);
    for (const auto& [c, v] : rows[i]) {
      if (!col_alive[c]) throw std::logic_error("eliminated column reappeared");
      row[col_index[c]] = v;
    }
    dense.push_back(std::move(row));
  }
  if (dense.empty()) {
    AbelianInvariants out;
    out.free_rank = remaining_cols;
    return out;
  }
  return smith_normal_form(dense).cokernel(remaining_cols);
}

AbelianInvariants cokernel_invariants(const IntMatrix& m) {
  SparseMatrix s;
  s.cols = m.empty() ? 0 : m.front().size();
  for (const auto& row : m) {
    if (row.size() != s.cols) throw std::invalid_argument("ragged matrix");
    SparseRow r;
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c] != 0) r.emplace_back(c, row[c]);
    s.rows.push_back(std::move(r));
  }
  return cokernel_invariants(s);
}

}  // namespace fakequad
