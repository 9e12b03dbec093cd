#include "fakequad/chartab.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

namespace fakequad {

namespace {

using u64 = std::uint64_t;

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 choose_prime(u64 exponent, u64 order) {
  for (u64 p = exponent + 1;; p += exponent)
    if (p > 2 * order && is_prime(p)) return p;
}

u64 primitive_root(u64 p) {
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 q = 2; q * q <= m; ++q) {
    if (m % q) continue;
    factors.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : factors) ok = ok && pow_mod(g, (p - 1) / q, p) != 1;
    if (ok) return g;
  }
  throw CharacterTableError("no primitive root modulo " + std::to_string(p));
}

using ModVec = std::vector<u64>;
using ModMat = std::vector<ModVec>;  // row-major

// Null space of a rows x cols matrix over F_p, as basis vectors of length cols.
std::vector<ModVec> null_space(ModMat m, std::size_t cols, u64 p) {
  const std::size_t rows = m.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    const u64 inv = inv_mod(m[r][c], p);
    for (auto& x : m[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const u64 f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = (m[i][k] + (p - f) * m[r][k]) % p;
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<ModVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    ModVec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = (p - m[i][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Subspace of F_p^r with a basis in reduced echelon form: basis[i][pivots[i]] = 1
// and basis[j][pivots[i]] = 0 for j != i.
struct Subspace {
  std::vector<ModVec> basis;
  std::vector<std::size_t> pivots;
};

Subspace echelon(std::vector<ModVec> vecs, u64 p) {
  Subspace s;
  const std::size_t r = vecs.empty() ? 0 : vecs.front().size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < r && row < vecs.size(); ++c) {
    std::size_t sel = row;
    while (sel < vecs.size() && vecs[sel][c] == 0) ++sel;
    if (sel == vecs.size()) continue;
    std::swap(vecs[sel], vecs[row]);
    const u64 inv = inv_mod(vecs[row][c], p);
    for (auto& x : vecs[row]) x = x * inv % p;
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      if (i == row || vecs[i][c] == 0) continue;
      const u64 f = vecs[i][c];
      for (std::size_t k = 0; k < r; ++k) vecs[i][k] = (vecs[i][k] + (p - f) * vecs[row][k]) % p;
    }
    s.pivots.push_back(c);
    ++row;
  }
  vecs.resize(row);
  s.basis = std::move(vecs);
  return s;
}

std::uint64_t next_table_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter++;
}

void require_same_table(const CharTable& ct, const ClassFunction& f) {
  if (f.table_id != ct.id() || f.values.size() != ct.classes().count())
    throw std::invalid_argument("class function does not belong to this character table");
}

}  // namespace

std::vector<std::int64_t> CharTable::degrees() const {
  std::vector<std::int64_t> out;
  for (const auto& chi : irreducibles_) out.push_back(chi.degree());
  return out;
}

ClassFunction CharTable::make(std::vector<Cyclotomic> values) const {
  if (values.size() != classes_.count()) throw std::invalid_argument("class function has the wrong length");
  for (const auto& v : values)
    if (v.order() != root_order_) throw std::invalid_argument("class function value over the wrong root order");
  return ClassFunction{id_, std::move(values)};
}

ClassFunction CharTable::make_integral(const std::vector<std::int64_t>& values) const {
  std::vector<Cyclotomic> v;
  for (auto x : values) v.emplace_back(root_order_, x);
  return make(std::move(v));
}

std::vector<std::size_t> CharTable::indices_of_degree(std::int64_t degree) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < irreducibles_.size(); ++i)
    if (irreducibles_[i].degree() == degree) out.push_back(i);
  return out;
}

CharTable character_table(const Group& g, std::size_t bound) {
  return character_table(std::make_shared<const Group>(g), bound);
}

CharTable character_table(std::shared_ptr<const Group> group, std::size_t bound) {
  const Group& g = *group;
  if (g.order() > bound)
    throw CharacterTableError("group order " + std::to_string(g.order()) + " exceeds the bound " + std::to_string(bound));

  CharTable ct;
  ct.group_ = group;
  ct.id_ = next_table_id();
  ct.classes_ = conjugacy_classes(g);
  const ConjClassSet& cls = ct.classes_;
  const std::size_t r = cls.count();
  const u64 n = g.order();
  const u64 e = g.exponent();
  const u64 p = choose_prime(e, n);
  const u64 z = pow_mod(primitive_root(p), (p - 1) / e, p);
  ct.root_order_ = static_cast<std::uint32_t>(e);
  ct.prime_ = p;
  ct.prime_root_ = z;

  // coeff[j][i][k] = #{x in C_j : x^-1 z_k in C_i}
  std::vector<std::vector<std::vector<u64>>> coeff(r, std::vector<std::vector<u64>>(r, std::vector<u64>(r, 0)));
  for (std::size_t j = 0; j < r; ++j)
    for (Elem x : cls.classes[j])
      for (std::size_t k = 0; k < r; ++k) ++coeff[j][cls.class_of[g.mul(g.inv(x), cls.reps[k])]][k];

  std::vector<ModVec> standard(r, ModVec(r, 0));
  for (std::size_t i = 0; i < r; ++i) standard[i][i] = 1;
  std::vector<Subspace> spaces{echelon(standard, p)};

  for (std::size_t j = 1; j < r; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Subspace& s) { return s.basis.size() == 1; })) break;
    std::vector<Subspace> next;
    for (auto& space : spaces) {
      const std::size_t d = space.basis.size();
      if (d == 1) {
        next.push_back(std::move(space));
        continue;
      }
      // Matrix of A_j on the space in echelon coordinates: column c holds the
      // pivot entries of A_j * basis[c].
      ModMat restricted(d, ModVec(d, 0));
      for (std::size_t c = 0; c < d; ++c) {
        ModVec image(r, 0);
        for (std::size_t i = 0; i < r; ++i) {
          u64 s = 0;
          for (std::size_t k = 0; k < r; ++k) s = (s + coeff[j][i][k] * space.basis[c][k]) % p;
          image[i] = s;
        }
        for (std::size_t row = 0; row < d; ++row) restricted[row][c] = image[space.pivots[row]];
      }
      std::size_t found = 0;
      for (u64 lambda = 0; lambda < p && found < d; ++lambda) {
        ModMat shifted = restricted;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] = (shifted[i][i] + p - lambda) % p;
        const auto kernel = null_space(shifted, d, p);
        if (kernel.empty()) continue;
        std::vector<ModVec> vecs;
        for (const auto& coords : kernel) {
          ModVec v(r, 0);
          for (std::size_t c = 0; c < d; ++c)
            for (std::size_t k = 0; k < r; ++k) v[k] = (v[k] + coords[c] * space.basis[c][k]) % p;
          vecs.push_back(std::move(v));
        }
        found += vecs.size();
        next.push_back(echelon(std::move(vecs), p));
      }
      if (found != d) throw CharacterTableError("class matrix is not diagonalizable modulo " + std::to_string(p));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw CharacterTableError("class matrices do not separate the central characters");

  std::vector<std::size_t> inverse_class(r);
  for (std::size_t k = 0; k < r; ++k) inverse_class[k] = cls.class_of[g.inv(cls.reps[k])];

  std::vector<ClassFunction> irreducibles;
  for (const auto& space : spaces) {
    ModVec omega = space.basis.front();
    if (omega[0] == 0) throw CharacterTableError("central character vanishes at the identity");
    const u64 norm = inv_mod(omega[0], p);
    for (auto& x : omega) x = x * norm % p;

    u64 s = 0;
    for (std::size_t k = 0; k < r; ++k) s = (s + omega[k] * omega[inverse_class[k]] % p * inv_mod(cls.sizes[k] % p, p)) % p;
    if (s == 0) throw CharacterTableError("degenerate norm in degree recovery");
    const u64 d2 = n % p * inv_mod(s, p) % p;
    u64 degree = 0;
    for (u64 d = 1; d * d <= n; ++d)
      if (d * d % p == d2 && n % d == 0) degree = d;
    if (degree == 0) throw CharacterTableError("degree recovery failed modulo " + std::to_string(p));

    ModVec chi(r);
    for (std::size_t k = 0; k < r; ++k) chi[k] = omega[k] * degree % p * inv_mod(cls.sizes[k] % p, p) % p;

    std::vector<Cyclotomic> values;
    for (std::size_t k = 0; k < r; ++k) {
      const u64 o = cls.rep_orders[k];
      const u64 zo = pow_mod(z, e / o, p);
      std::vector<std::int64_t> coeffs(e, 0);
      u64 total = 0;
      for (u64 m = 0; m < o; ++m) {
        u64 sum = 0;
        for (u64 l = 0; l < o; ++l) {
          const std::size_t target = l == 0 ? 0 : cls.power_class(k, l);
          sum = (sum + chi[target] * pow_mod(zo, (o - (m * l) % o) % o, p)) % p;
        }
        const u64 mult = sum * inv_mod(o % p, p) % p;
        if (mult > degree) throw CharacterTableError("eigenvalue multiplicity out of range; lifting failed");
        coeffs[m * (e / o)] = static_cast<std::int64_t>(mult);
        total += mult;
      }
      if (total != degree) throw CharacterTableError("eigenvalue multiplicities do not sum to the degree");
      Cyclotomic value = Cyclotomic::from_coefficients(static_cast<std::uint32_t>(e), coeffs);
      if (value.reduce_mod(p, z) != chi[k]) throw CharacterTableError("lifted value disagrees with its residue");
      values.push_back(std::move(value));
    }
    irreducibles.push_back(ClassFunction{ct.id_, std::move(values)});
  }

  auto is_trivial = [](const ClassFunction& f) {
    return std::all_of(f.values.begin(), f.values.end(), [](const Cyclotomic& v) { return v.is_rational() && v.rational_value() == 1; });
  };
  std::sort(irreducibles.begin(), irreducibles.end(), [&](const ClassFunction& a, const ClassFunction& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const bool ta = is_trivial(a);
    const bool tb = is_trivial(b);
    if (ta != tb) return ta;
    return a.values < b.values;
  });
  ct.irreducibles_ = std::move(irreducibles);
  if (!is_trivial(ct.irreducibles_.front())) throw CharacterTableError("trivial character missing");

  if (!check_orthogonality(ct).ok()) throw CharacterTableError("exact orthogonality verification failed");
  return ct;
}

OrthogonalityReport check_orthogonality(const CharTable& ct) {
  OrthogonalityReport rep;
  const auto& cls = ct.classes();
  const std::size_t r = cls.count();
  const auto n = static_cast<std::int64_t>(ct.group().order());
  const auto& irr = ct.irreducibles();
  const std::uint32_t e = ct.root_order();

  rep.rows = irr.size() == r;
  for (std::size_t a = 0; a < irr.size() && rep.rows; ++a) {
    for (std::size_t b = 0; b < irr.size() && rep.rows; ++b) {
      Cyclotomic sum(e, 0);
      for (std::size_t k = 0; k < r; ++k)
        sum += static_cast<std::int64_t>(cls.sizes[k]) * (irr[a][k] * irr[b][k].conj());
      rep.rows = sum == Cyclotomic(e, a == b ? n : 0);
    }
  }
  rep.columns = irr.size() == r;
  for (std::size_t k = 0; k < r && rep.columns; ++k) {
    for (std::size_t l = 0; l < r && rep.columns; ++l) {
      Cyclotomic sum(e, 0);
      for (const auto& chi : irr) sum += chi[k] * chi[l].conj();
      rep.columns = sum == Cyclotomic(e, k == l ? n / static_cast<std::int64_t>(cls.sizes[k]) : 0);
    }
  }
  std::int64_t squares = 0;
  rep.degrees_divide_order = true;
  for (const auto& chi : irr) {
    const std::int64_t d = chi.degree();
    squares += d * d;
    rep.degrees_divide_order = rep.degrees_divide_order && d > 0 && n % d == 0;
  }
  rep.sum_of_squares = squares == n;
  return rep;
}

Rational inner_product(const CharTable& ct, const ClassFunction& a, const ClassFunction& b) {
  require_same_table(ct, a);
  require_same_table(ct, b);
  Cyclotomic sum(ct.root_order(), 0);
  for (std::size_t k = 0; k < ct.classes().count(); ++k)
    sum += static_cast<std::int64_t>(ct.classes().sizes[k]) * (a[k] * b[k].conj());
  return Rational(sum.rational_value(), static_cast<std::int64_t>(ct.group().order()));
}

ClassFunction permutation_character(const CharTable& ct) {
  std::vector<std::int64_t> values;
  for (Elem rep : ct.classes().reps) values.push_back(static_cast<std::int64_t>(ct.group().element(rep).fixed_points()));
  return ct.make_integral(values);
}

ClassFunction frobenius_twist(const CharTable& ct, const ClassFunction& chi, std::size_t k) {
  require_same_table(ct, chi);
  if (k == 0) throw std::invalid_argument("frobenius twist needs k >= 1");
  std::vector<Cyclotomic> values;
  for (std::size_t c = 0; c < ct.classes().count(); ++c) values.push_back(chi[ct.classes().power_class(c, k)]);
  return ct.make(std::move(values));
}

ClassFunction tensor(const CharTable& ct, const ClassFunction& a, const ClassFunction& b) {
  require_same_table(ct, a);
  require_same_table(ct, b);
  std::vector<Cyclotomic> values;
  for (std::size_t c = 0; c < a.values.size(); ++c) values.push_back(a[c] * b[c]);
  return ct.make(std::move(values));
}

ClassFunction add(const CharTable& ct, const ClassFunction& a, const ClassFunction& b) {
  require_same_table(ct, a);
  require_same_table(ct, b);
  std::vector<Cyclotomic> values;
  for (std::size_t c = 0; c < a.values.size(); ++c) values.push_back(a[c] + b[c]);
  return ct.make(std::move(values));
}

ClassFunction subtract(const CharTable& ct, const ClassFunction& a, const ClassFunction& b) {
  require_same_table(ct, a);
  require_same_table(ct, b);
  std::vector<Cyclotomic> values;
  for (std::size_t c = 0; c < a.values.size(); ++c) values.push_back(a[c] - b[c]);
  return ct.make(std::move(values));
}

namespace {

ClassFunction half_square(const CharTable& ct, const ClassFunction& chi, int sign) {
  const ClassFunction twisted = frobenius_twist(ct, chi, 2);
  std::vector<Cyclotomic> values;
  for (std::size_t c = 0; c < chi.values.size(); ++c) {
    const Cyclotomic square = chi[c] * chi[c];
    values.push_back((sign > 0 ? square + twisted[c] : square - twisted[c]).divide_exact(2));
  }
  return ct.make(std::move(values));
}

}  // namespace

ClassFunction sym_square(const CharTable& ct, const ClassFunction& chi) { return half_square(ct, chi, +1); }
ClassFunction alt_square(const CharTable& ct, const ClassFunction& chi) { return half_square(ct, chi, -1); }

std::vector<std::int64_t> decompose(const CharTable& ct, const ClassFunction& chi) {
  require_same_table(ct, chi);
  std::vector<std::int64_t> mult;
  for (const auto& irr : ct.irreducibles()) {
    Rational m;
    try {
      m = inner_product(ct, chi, irr);
    } catch (const std::domain_error&) {
      throw NotACharacter("not a character: irrational multiplicity");
    }
    if (m.denominator() != 1 || m.numerator() < 0)
      throw NotACharacter("not a character: multiplicity " + std::to_string(m.numerator()) + "/" +
                          std::to_string(m.denominator()));
    mult.push_back(m.numerator());
  }
  std::vector<Cyclotomic> rebuilt(chi.values.size(), Cyclotomic(ct.root_order(), 0));
  for (std::size_t i = 0; i < mult.size(); ++i)
    for (std::size_t c = 0; c < rebuilt.size(); ++c) rebuilt[c] += mult[i] * ct.irreducibles()[i][c];
  if (rebuilt != chi.values) throw NotACharacter("not a character: reconstruction differs");
  return mult;
}

int center_action(const CharTable& ct, const ClassFunction& chi) {
  require_same_table(ct, chi);
  const auto& cls = ct.classes();
  for (std::size_t k = 0; k < cls.count(); ++k) {
    if (cls.sizes[k] != 1 || cls.rep_orders[k] != 2) continue;
    const Cyclotomic d(ct.root_order(), chi.degree());
    if (chi[k] == d) return 1;
    if (chi[k] == -d) return -1;
    throw std::logic_error("central involution acts by a non-scalar; corrupted table");
  }
  throw std::invalid_argument("group has no central element of order 2");
}

}  // namespace fakequad
