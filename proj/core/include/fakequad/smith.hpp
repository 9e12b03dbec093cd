#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fakequad {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Row of a sparse integer matrix: (column, nonzero value), columns ascending.
using SparseRow = std::vector<std::pair<std::size_t, BigInt>>;

struct SparseMatrix {
  std::size_t cols = 0;
  std::vector<SparseRow> rows;
};

/// Finitely generated abelian group Z^free_rank x Z/d_1 x ... x Z/d_k with
/// d_1 | d_2 | ... and every d_i >= 2.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  /// Order of the torsion subgroup.
  BigInt torsion_order() const;
  /// "Z^2 x Z/3 x Z/15", "0" for the trivial group.
  std::string to_string() const;
  /// "(3, 3, 15)".
  std::string torsion_string() const;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Invariant factors of an arbitrary list of cyclic orders (0 = infinite
/// cyclic, 1 dropped), via primary decomposition.
AbelianInvariants normalize_abelian(const std::vector<BigInt>& cyclic_orders);

struct SmithResult {
  /// Diagonal entries d_1 | d_2 | ... of the normal form, including units.
  std::vector<BigInt> diagonal;
  std::size_t rank = 0;
  /// U * M * V = D when transforms were requested; U, V unimodular.
  std::optional<IntMatrix> left;
  std::optional<IntMatrix> right;

  /// Cokernel of the row space, Z^cols / <rows>.
  AbelianInvariants cokernel(std::size_t cols) const;
};

/// Dense Smith normal form with smallest-nonzero pivoting. Arbitrary
/// precision throughout.
SmithResult smith_normal_form(const IntMatrix& m, bool with_transforms = false);

/// Z^cols / row space. Unit pivots are eliminated sparsely first; the
/// remainder goes through the dense routine.
AbelianInvariants cokernel_invariants(const SparseMatrix& m);
AbelianInvariants cokernel_invariants(const IntMatrix& m);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

}  // namespace fakequad
