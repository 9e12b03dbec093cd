#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fakequad/group.hpp"

namespace fakequad {

/// Branching orders [m_1, ..., m_r] of a G-cover of the line, stored sorted.
class Signature {
public:
  /// Throws std::invalid_argument if r < 3 or some m_i < 2.
  explicit Signature(std::vector<std::size_t> multiplicities);

  const std::vector<std::size_t>& multiplicities() const { return sorted_; }
  std::size_t length() const { return sorted_.size(); }
  std::size_t lcm() const;
  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;

private:
  std::vector<std::size_t> sorted_;
};

/// "[2,5,5]" -> {2,5,5}; no validity checks beyond syntax. Throws ParseError.
std::vector<std::size_t> parse_multiplicities(std::string_view text, std::size_t column_offset = 0);
std::string format_multiplicities(const std::vector<std::size_t>& m);

struct GenVectorCheck;

/// Checks the invariants in order (signature, orders, product, generation)
/// and names the first that fails.
GenVectorCheck verify_generating_vector(std::shared_ptr<const Group> g, std::vector<Elem> elems,
                                        std::vector<std::size_t> orders);

/// Certified Hurwitz generating vector: element orders match, the ordered
/// product v_1 * ... * v_r is the identity, and the elements generate G.
class GenVector {
public:
  const Group& group() const { return *group_; }
  const std::shared_ptr<const Group>& group_ptr() const { return group_; }
  const std::vector<Elem>& elements() const { return elements_; }
  /// Orders in the caller's original order (aligned with elements()).
  const std::vector<std::size_t>& orders() const { return orders_; }
  const Signature& signature() const { return signature_; }
  std::size_t length() const { return elements_.size(); }

  /// Simultaneous conjugation v_i -> h v_i h^-1.
  GenVector conjugated(Elem h) const;

  friend GenVectorCheck verify_generating_vector(std::shared_ptr<const Group>, std::vector<Elem>,
                                                std::vector<std::size_t>);

private:
  GenVector(std::shared_ptr<const Group> g, std::vector<Elem> e, std::vector<std::size_t> o, Signature s)
      : group_(std::move(g)), elements_(std::move(e)), orders_(std::move(o)), signature_(std::move(s)) {}

  std::shared_ptr<const Group> group_;
  std::vector<Elem> elements_;
  std::vector<std::size_t> orders_;
  Signature signature_;
};

enum class GenVectorFailure {
  none,
  bad_signature,   // r < 3, m_i < 2, or length mismatch
  order_mismatch,  // element_order(v_i) != m_i
  nontrivial_product,
  proper_subgroup,
};

const char* to_string(GenVectorFailure f);

struct GenVectorCheck {
  std::optional<GenVector> vector;
  GenVectorFailure failure = GenVectorFailure::none;
  std::string diagnostic;

  explicit operator bool() const { return vector.has_value(); }
};

/// 2g - 2 = |G| (-2 + sum (1 - 1/m_i)); throws std::domain_error unless the
/// right side is an even integer >= -2.
std::size_t riemann_hurwitz_genus(std::size_t group_order, const Signature& sig);

/// As riemann_hurwitz_genus but additionally rejects g < 2.
std::size_t genus_from_signature(std::size_t group_order, const Signature& sig);

/// Genus from the Euler characteristic of the cover: |G| sheets over the
/// sphere, with the fibre over the i-th branch point counted as the cycles of
/// right multiplication by v_i on G.
std::size_t sheet_count_genus(const GenVector& gv);

/// Nontrivial elements of every conjugate of every <v_i>, ascending.
std::vector<Elem> stabilizer_elements(const GenVector& gv);

struct UnmixedPair {
  GenVector gv1;
  GenVector gv2;

  const Group& group() const { return gv1.group(); }
  UnmixedPair swapped() const { return {gv2, gv1}; }
};

/// Throws std::invalid_argument unless both vectors live on the same group.
UnmixedPair make_pair(GenVector gv1, GenVector gv2);

struct FreenessCertificate {
  bool free = false;
  std::vector<Elem> intersection;  // stabilizer_elements(gv1) ∩ stabilizer_elements(gv2)
};

FreenessCertificate is_free_unmixed(const UnmixedPair& pair);

struct SurfaceInvariants {
  std::size_t g1 = 0;
  std::size_t g2 = 0;
  std::int64_t chi = 0;
  std::int64_t K2 = 0;
  std::int64_t q = 0;
  std::int64_t pg = 0;
  std::int64_t e = 0;  // topological Euler number c_2 = 4 chi
  std::size_t D = 0;   // (r - 3) + (s - 3)
};

/// Throws std::domain_error ("not a valid unmixed family") when the action is
/// not free or chi is not an integer.
SurfaceInvariants surface_invariants(const UnmixedPair& pair);

/// Depth-first search in canonical element order. The first entry ranges over
/// conjugacy class representatives only; the last is forced by the product
/// relation. `visit` returns false to stop.
void for_each_generating_vector(std::shared_ptr<const Group> g, const Signature& sig,
                                const std::function<bool(const GenVector&)>& visit);

std::vector<GenVector> enumerate_generating_vectors(std::shared_ptr<const Group> g, const Signature& sig,
                                                    std::size_t limit);

/// First free pair in search order: gv1 over vectors for sig1, gv2 the first
/// vector for sig2 whose stabilizer set is disjoint from that of gv1.
std::optional<UnmixedPair> find_free_pair(std::shared_ptr<const Group> g, const Signature& sig1,
                                          const Signature& sig2);

}  // namespace fakequad
