#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fakequad/perm.hpp"

namespace fakequad {

/// Index of a group element in canonical order.
using Elem = std::uint32_t;

/// Multiplication table of a finite group on indices 0..n-1.
struct CayleyTable {
  std::size_t n = 0;
  std::vector<Elem> product;  // product[a * n + b] = a * b
  std::vector<Elem> inverse;
  Elem identity = 0;

  Elem mul(Elem a, Elem b) const { return product[static_cast<std::size_t>(a) * n + b]; }
  std::size_t element_order(Elem a) const;
};

/// Finite permutation group with elements in lexicographic order of their
/// one-line images; the identity is always element 0.
class Group {
public:
  static constexpr std::size_t kDefaultBound = 2048;

  /// Closure of `gens` (common degree, nonempty). Throws std::length_error
  /// once the closure exceeds `bound` elements.
  static Group closure(const std::vector<Perm>& gens, std::string label = {}, std::size_t bound = kDefaultBound);

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return elements_.front().degree(); }
  const std::string& label() const { return label_; }

  const Perm& element(Elem a) const { return elements_[a]; }
  const std::vector<Perm>& elements() const { return elements_; }
  std::optional<Elem> find(const Perm& p) const;
  /// Throws std::invalid_argument if `p` is not in the group.
  Elem index_of(const Perm& p) const;

  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_.mul(a, b); }
  Elem inv(Elem a) const { return table_.inverse[a]; }
  Elem pow(Elem a, std::size_t k) const;
  Elem conjugate(Elem g, Elem by) const { return mul(mul(by, g), inv(by)); }
  std::size_t element_order(Elem a) const { return orders_[a]; }
  std::size_t exponent() const;

  /// Generators as passed to closure(), in the given order.
  const std::vector<Elem>& generators() const { return generators_; }
  const CayleyTable& table() const { return table_; }

  /// Elements of the subgroup generated by `gens`, ascending.
  std::vector<Elem> subgroup(const std::vector<Elem>& gens) const;
  bool generates(const std::vector<Elem>& gens) const { return subgroup(gens).size() == order(); }

private:
  Group() = default;

  std::string label_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, Elem> index_;
  CayleyTable table_;
  std::vector<std::size_t> orders_;
  std::vector<Elem> generators_;
};

/// Closure of `gens` without a label.
Group group_closure(const std::vector<Perm>& gens, std::size_t bound = Group::kDefaultBound);

std::size_t element_order(const Group& g, Elem a);

/// Conjugacy classes in canonical order: identity first, then increasing
/// element order, then increasing class size, ties broken by the smallest
/// member (which is also the representative).
struct ConjClassSet {
  std::vector<std::vector<Elem>> classes;
  std::vector<Elem> reps;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> rep_orders;
  std::vector<std::size_t> class_of;  // per element
  /// power_maps[p][k] = class of the p-th powers of class k, for every prime
  /// p up to the exponent (always including 2).
  std::map<std::size_t, std::vector<std::size_t>> power_maps;

  std::size_t count() const { return classes.size(); }
  /// Class of the k-th powers of class `cls` (k >= 1), composed from prime maps.
  std::size_t power_class(std::size_t cls, std::size_t k) const;
};

ConjClassSet conjugacy_classes(const CayleyTable& t);
ConjClassSet conjugacy_classes(const Group& g);

/// Elements commuting with everything, ascending.
std::vector<Elem> center(const CayleyTable& t);

/// Invariant factors d1 | d2 | ... of G/[G,G] (units omitted).
std::vector<std::uint64_t> abelian_invariants(const Group& g);

struct Fingerprint {
  std::size_t order = 0;
  std::size_t exponent = 0;
  std::size_t class_count = 0;
  std::vector<std::uint64_t> abelianization;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Group& g);

/// Catalog entry for a named group.
struct GroupSpec {
  std::string label;
  std::size_t id_order;  // documentation: small-group id
  std::size_t id_index;
  Fingerprint expected;
};

/// Known labels: A5, S5, SL(2,5), S4, S4xZ2, D4xZ2, G(16), G(32), and abelian
/// groups written Zn, Zn^k or (Zn)^k, plus "1" for the trivial group.
/// Throws std::invalid_argument for unknown labels and std::runtime_error on
/// fingerprint mismatch.
Group construct_group(std::string_view label);

/// Fixed catalog labels in table order.
const std::vector<GroupSpec>& group_catalog();

/// Embedded presentations behind G(16) and G(32).
const std::string& presentation_text(std::string_view label);

/// Group realized as the right-regular permutation action on the cosets of
/// the trivial subgroup of a finite presentation.
Group group_from_presentation(std::string_view presentation, std::string label,
                              std::size_t max_cosets = 100000);

/// Generator images defining an isomorphism `from` -> `to` (which must be
/// given as the group generated by `from_gens`), found by backtracking over
/// candidates with matching element order and class size.
std::optional<std::vector<Elem>> find_isomorphism(const CayleyTable& from, const std::vector<Elem>& from_gens,
                                                  const CayleyTable& to);

struct CentralQuotientCertificate {
  bool holds = false;
  std::optional<Elem> central_involution;
  std::size_t center_order = 0;
  std::vector<Elem> generator_images;  // target generators -> quotient cosets
  std::string reason;
};

/// Decides whether `extension` has a central subgroup {1, z} of order 2 with
/// extension / {1, z} isomorphic to `target`. Every central involution is tried.
CentralQuotientCertificate central_quotient_certificate(const Group& extension, const Group& target);
bool verify_central_quotient(const Group& extension, const Group& target);

}  // namespace fakequad
