#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "fakequad/cyclotomic.hpp"
#include "fakequad/group.hpp"

namespace fakequad {

/// Exact class function: one value in Z[zeta_e] per conjugacy class of the
/// owning table (e = exponent of the group).
struct ClassFunction {
  std::uint64_t table_id = 0;
  std::vector<Cyclotomic> values;

  const Cyclotomic& operator[](std::size_t k) const { return values[k]; }
  /// Value at the identity class as an integer.
  std::int64_t degree() const { return values.front().rational_value(); }

  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

/// Raised when Dixon's method cannot lift a modular table to an exact one.
class CharacterTableError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by decompose() when the multiplicities are not nonnegative integers.
class NotACharacter : public std::domain_error {
  using std::domain_error::domain_error;
};

class CharTable {
public:
  const Group& group() const { return *group_; }
  const ConjClassSet& classes() const { return classes_; }
  const std::vector<ClassFunction>& irreducibles() const { return irreducibles_; }
  std::vector<std::int64_t> degrees() const;
  std::size_t size() const { return irreducibles_.size(); }

  std::uint32_t root_order() const { return root_order_; }
  std::uint64_t id() const { return id_; }
  /// Prime and primitive root_order()-th root of unity used by the modular step.
  std::uint64_t prime() const { return prime_; }
  std::uint64_t prime_root() const { return prime_root_; }

  ClassFunction trivial() const { return irreducibles_.front(); }
  ClassFunction make(std::vector<Cyclotomic> values) const;
  ClassFunction make_integral(const std::vector<std::int64_t>& values) const;
  /// Irreducibles of the given degree, in table order.
  std::vector<std::size_t> indices_of_degree(std::int64_t degree) const;

  friend CharTable character_table(std::shared_ptr<const Group> g, std::size_t bound);

private:
  CharTable() = default;

  std::shared_ptr<const Group> group_;
  ConjClassSet classes_;
  std::vector<ClassFunction> irreducibles_;
  std::uint32_t root_order_ = 1;
  std::uint64_t prime_ = 0;
  std::uint64_t prime_root_ = 0;
  std::uint64_t id_ = 0;
};

/// Dixon's modular method: simultaneous eigenvectors of the class
/// multiplication matrices modulo p = smallest prime with p = 1 (mod e) and
/// p > 2|G|, lifted to exact cyclotomic values and verified by both
/// orthogonality relations. Irreducibles are sorted by degree (trivial first),
/// then lexicographically on values in class order.
CharTable character_table(std::shared_ptr<const Group> g, std::size_t bound = 200);
CharTable character_table(const Group& g, std::size_t bound = 200);

/// (1/|G|) sum_K |K| a(K) conj(b(K)); throws std::domain_error if irrational.
Rational inner_product(const CharTable& ct, const ClassFunction& a, const ClassFunction& b);

/// Fixed-point counts of the group's own permutation action.
ClassFunction permutation_character(const CharTable& ct);

/// g -> chi(g^k), k >= 1.
ClassFunction frobenius_twist(const CharTable& ct, const ClassFunction& chi, std::size_t k);

ClassFunction tensor(const CharTable& ct, const ClassFunction& a, const ClassFunction& b);
ClassFunction sym_square(const CharTable& ct, const ClassFunction& chi);
ClassFunction alt_square(const CharTable& ct, const ClassFunction& chi);
ClassFunction add(const CharTable& ct, const ClassFunction& a, const ClassFunction& b);
ClassFunction subtract(const CharTable& ct, const ClassFunction& a, const ClassFunction& b);

/// Multiplicities <chi, chi_i>; the reconstruction is re-verified pointwise.
/// Throws NotACharacter on a negative or non-integral multiplicity.
std::vector<std::int64_t> decompose(const CharTable& ct, const ClassFunction& chi);

/// +1 if the first central involution z acts trivially (chi(z) = chi(1)),
/// -1 if chi(z) = -chi(1). Throws std::invalid_argument if the group has no
/// central involution and std::logic_error for any other value.
int center_action(const CharTable& ct, const ClassFunction& chi);

struct OrthogonalityReport {
  bool rows = false;
  bool columns = false;
  bool degrees_divide_order = false;
  bool sum_of_squares = false;
  bool ok() const { return rows && columns && degrees_divide_order && sum_of_squares; }
};

/// Exact re-check of both orthogonality relations and the degree identities.
OrthogonalityReport check_orthogonality(const CharTable& ct);

}  // namespace fakequad
