#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fakequad/branching.hpp"
#include "fakequad/presentation.hpp"
#include "fakequad/smith.hpp"

namespace fakequad {

/// <x_1..x_r | x_i^m_i, x_1 x_2 ... x_r> with generators named prefix1..prefixr.
FPGroup polygonal_presentation(const Signature& sig, const std::string& prefix = "x");
/// Same, with the orders in the given (unsorted) order.
FPGroup polygonal_presentation(const std::vector<std::size_t>& orders, const std::string& prefix = "x");

/// T1 x T2: both polygonal presentations (generators x.., then y..) plus every
/// commutator [x_i, y_j]. Orders follow the generating vectors entry by entry.
FPGroup product_presentation(const std::vector<std::size_t>& orders1, const std::vector<std::size_t>& orders2);

/// Cosets of the fiber product in T1 x T2, labeled by group elements (coset
/// k is element k, identity first). (x_i, 1) sends g to v_i^-1 g and (1, y_j)
/// sends g to g w_j. Throws std::logic_error if the table fails any check
/// against product_presentation.
CosetTable fiber_coset_table(const UnmixedPair& pair);

struct SchreierPresentation {
  FPGroup group;
  /// Nontrivial Schreier generators, n (rank - 1) + 1 for a connected table.
  std::size_t schreier_generators = 0;
  std::size_t rewritten_relators = 0;
};

/// Subgroup presentation from a breadth-first spanning tree of the coset
/// graph. Every relator is rewritten at every coset; tree edges are dropped.
/// Generator names are "<name>_<coset>".
SchreierPresentation reidemeister_schreier(const FPGroup& f, const CosetTable& t);

/// Repeatedly deletes generators killed by a relator of length 1 and drops
/// empty relators.
FPGroup tietze_reduce(FPGroup f);

/// Relator exponent sums, one row per relator.
SparseMatrix exponent_matrix(const FPGroup& f);

AbelianInvariants abelianization(const FPGroup& f);

/// H1 of the fiber product, with the free rank as computed (not checked).
AbelianInvariants fiber_product_homology(const UnmixedPair& pair);

/// As fiber_product_homology; throws std::domain_error when the free rank is
/// nonzero (the family is then not a Q-homology quadric).
AbelianInvariants h1_surface(const UnmixedPair& pair);

}  // namespace fakequad
