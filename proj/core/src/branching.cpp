#include "fakequad/branching.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace fakequad {

Signature::Signature(std::vector<std::size_t> multiplicities) : sorted_(std::move(multiplicities)) {
  if (sorted_.size() < 3)
    throw std::invalid_argument("signature " + format_multiplicities(sorted_) + " has fewer than 3 branch points");
  for (auto m : sorted_)
    if (m < 2) throw std::invalid_argument("signature " + format_multiplicities(sorted_) + " has a multiplicity below 2");
  std::sort(sorted_.begin(), sorted_.end());
}

std::size_t Signature::lcm() const {
  std::size_t l = 1;
  for (auto m : sorted_) l = std::lcm(l, m);
  return l;
}

std::string Signature::to_string() const { return format_multiplicities(sorted_); }

std::string format_multiplicities(const std::vector<std::size_t>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(m[i]);
  }
  return out + "]";
}

std::vector<std::size_t> parse_multiplicities(std::string_view text, std::size_t column_offset) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void { throw ParseError(what, column_offset + pos + 1); };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> std::size_t {
    skip();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a number");
    std::size_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
      if (v > 100000) fail("number too large");
      ++pos;
    }
    return v;
  };
  std::vector<std::size_t> out;
  skip();
  if (pos >= text.size() || text[pos] != '[') fail("expected '['");
  ++pos;
  skip();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      const std::size_t m = number();
      std::size_t repeat = 1;
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        repeat = number();
        if (repeat == 0) fail("repeat count must be positive");
        skip();
      }
      out.insert(out.end(), repeat, m);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      fail("expected ',' or ']'");
    }
  }
  skip();
  if (pos != text.size()) fail("unexpected trailing input");
  return out;
}

const char* to_string(GenVectorFailure f) {
  switch (f) {
    case GenVectorFailure::none: return "none";
    case GenVectorFailure::bad_signature: return "bad signature";
    case GenVectorFailure::order_mismatch: return "order mismatch";
    case GenVectorFailure::nontrivial_product: return "nontrivial product";
    case GenVectorFailure::proper_subgroup: return "proper subgroup generated";
  }
  return "unknown";
}

GenVectorCheck verify_generating_vector(std::shared_ptr<const Group> g, std::vector<Elem> elems,
                                        std::vector<std::size_t> orders) {
  GenVectorCheck check;
  auto fail = [&](GenVectorFailure f, std::string msg) {
    check.failure = f;
    check.diagnostic = std::string(to_string(f)) + ": " + std::move(msg);
    return check;
  };
  if (elems.size() != orders.size())
    return fail(GenVectorFailure::bad_signature, std::to_string(elems.size()) + " elements for a signature of length " +
                                                     std::to_string(orders.size()));
  std::optional<Signature> sig;
  try {
    sig.emplace(orders);
  } catch (const std::invalid_argument& e) {
    return fail(GenVectorFailure::bad_signature, e.what());
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] >= g->order()) return fail(GenVectorFailure::order_mismatch, "element index out of range");
    const std::size_t o = g->element_order(elems[i]);
    if (o != orders[i])
      return fail(GenVectorFailure::order_mismatch, "entry " + std::to_string(i + 1) + " " +
                                                        format_cycles(g->element(elems[i])) + " has order " +
                                                        std::to_string(o) + ", expected " + std::to_string(orders[i]));
  }
  Elem product = g->identity();
  for (Elem x : elems) product = g->mul(product, x);
  if (product != g->identity())
    return fail(GenVectorFailure::nontrivial_product, "v_1 * ... * v_r = " + format_cycles(g->element(product)));
  const std::size_t generated = g->subgroup(elems).size();
  if (generated != g->order())
    return fail(GenVectorFailure::proper_subgroup, "elements generate a subgroup of order " +
                                                       std::to_string(generated) + " in a group of order " +
                                                       std::to_string(g->order()));
  check.vector = GenVector(std::move(g), std::move(elems), std::move(orders), std::move(*sig));
  return check;
}

GenVector GenVector::conjugated(Elem h) const {
  std::vector<Elem> e;
  for (Elem x : elements_) e.push_back(group_->conjugate(x, h));
  return GenVector(group_, std::move(e), orders_, signature_);
}

std::size_t riemann_hurwitz_genus(std::size_t group_order, const Signature& sig) {
  const auto L = static_cast<std::int64_t>(sig.lcm());
  std::int64_t sum = -2 * L;
  for (auto m : sig.multiplicities()) sum += L - L / static_cast<std::int64_t>(m);
  const std::int64_t numerator = static_cast<std::int64_t>(group_order) * sum;
  if (numerator % L != 0)
    throw std::domain_error("2g - 2 is not an integer for |G| = " + std::to_string(group_order) + " and " + sig.to_string());
  const std::int64_t twice = numerator / L;  // 2g - 2
  if (twice % 2 != 0 || twice < -2)
    throw std::domain_error("2g - 2 = " + std::to_string(twice) + " is not an admissible value for " + sig.to_string());
  return static_cast<std::size_t>(twice / 2 + 1);
}

std::size_t genus_from_signature(std::size_t group_order, const Signature& sig) {
  const std::size_t g = riemann_hurwitz_genus(group_order, sig);
  if (g < 2)
    throw std::domain_error("genus " + std::to_string(g) + " < 2 for |G| = " + std::to_string(group_order) + " and " +
                            sig.to_string());
  return g;
}

std::size_t sheet_count_genus(const GenVector& gv) {
  const Group& g = gv.group();
  const auto n = static_cast<std::int64_t>(g.order());
  std::int64_t euler = n * (2 - static_cast<std::int64_t>(gv.length()));
  for (Elem v : gv.elements()) {
    std::vector<bool> seen(g.order(), false);
    for (Elem start = 0; start < g.order(); ++start) {
      if (seen[start]) continue;
      ++euler;
      for (Elem x = start; !seen[x]; x = g.mul(x, v)) seen[x] = true;
    }
  }
  if (euler % 2 != 0 || euler > 2) throw std::logic_error("cover has an impossible Euler characteristic");
  return static_cast<std::size_t>(1 - euler / 2);
}

namespace {

// Classes met by the nontrivial powers of the entries of a vector.
std::vector<bool> stabilizer_classes(const Group& g, const ConjClassSet& cls, const std::vector<Elem>& elems) {
  std::vector<bool> mask(cls.count(), false);
  for (Elem v : elems)
    for (Elem x = v; x != g.identity(); x = g.mul(x, v)) mask[cls.class_of[x]] = true;
  return mask;
}

bool disjoint(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

std::vector<Elem> elements_of(const ConjClassSet& cls, const std::vector<bool>& mask) {
  std::vector<Elem> out;
  for (std::size_t k = 0; k < mask.size(); ++k)
    if (mask[k]) out.insert(out.end(), cls.classes[k].begin(), cls.classes[k].end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Elem> stabilizer_elements(const GenVector& gv) {
  const ConjClassSet cls = conjugacy_classes(gv.group());
  return elements_of(cls, stabilizer_classes(gv.group(), cls, gv.elements()));
}

UnmixedPair make_pair(GenVector gv1, GenVector gv2) {
  if (gv1.group_ptr() != gv2.group_ptr() && gv1.group().elements() != gv2.group().elements())
    throw std::invalid_argument("generating vectors live on different groups");
  return UnmixedPair{std::move(gv1), std::move(gv2)};
}

FreenessCertificate is_free_unmixed(const UnmixedPair& pair) {
  const auto a = stabilizer_elements(pair.gv1);
  const auto b = stabilizer_elements(pair.gv2);
  FreenessCertificate cert;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(cert.intersection));
  cert.free = cert.intersection.empty();
  return cert;
}

SurfaceInvariants surface_invariants(const UnmixedPair& pair) {
  if (!is_free_unmixed(pair).free) throw std::domain_error("not a valid unmixed family: the diagonal action is not free");
  SurfaceInvariants inv;
  const std::size_t n = pair.group().order();
  inv.g1 = genus_from_signature(n, pair.gv1.signature());
  inv.g2 = genus_from_signature(n, pair.gv2.signature());
  const auto product = static_cast<std::int64_t>((inv.g1 - 1) * (inv.g2 - 1));
  if (product % static_cast<std::int64_t>(n) != 0)
    throw std::domain_error("not a valid unmixed family: (g1-1)(g2-1) = " + std::to_string(product) +
                            " is not divisible by |G| = " + std::to_string(n));
  inv.chi = product / static_cast<std::int64_t>(n);
  inv.K2 = 8 * inv.chi;
  inv.e = 4 * inv.chi;
  inv.q = 0;
  inv.pg = inv.chi - 1 + inv.q;
  inv.D = (pair.gv1.length() - 3) + (pair.gv2.length() - 3);
  return inv;
}

void for_each_generating_vector(std::shared_ptr<const Group> gp, const Signature& sig,
                                const std::function<bool(const GenVector&)>& visit) {
  const Group& g = *gp;
  const ConjClassSet cls = conjugacy_classes(g);
  const auto& m = sig.multiplicities();
  const std::size_t r = m.size();

  std::vector<std::vector<Elem>> choices(r);
  for (std::size_t k = 0; k < cls.count(); ++k)
    if (cls.rep_orders[k] == m[0]) choices[0].push_back(cls.reps[k]);
  std::sort(choices[0].begin(), choices[0].end());
  for (std::size_t i = 1; i + 1 < r; ++i)
    for (Elem x = 0; x < g.order(); ++x)
      if (g.element_order(x) == m[i]) choices[i].push_back(x);

  std::vector<Elem> current(r);
  bool keep_going = true;
  auto dfs = [&](auto&& self, std::size_t i, Elem prefix) -> void {
    if (!keep_going) return;
    if (i + 1 == r) {
      const Elem last = g.inv(prefix);
      if (g.element_order(last) != m[r - 1]) return;
      current[r - 1] = last;
      if (!g.generates(current)) return;
      auto check = verify_generating_vector(gp, current, m);
      if (!check) throw std::logic_error("search produced an uncertified vector: " + check.diagnostic);
      keep_going = visit(*check.vector);
      return;
    }
    for (Elem x : choices[i]) {
      current[i] = x;
      self(self, i + 1, g.mul(prefix, x));
      if (!keep_going) return;
    }
  };
  dfs(dfs, 0, g.identity());
}

std::vector<GenVector> enumerate_generating_vectors(std::shared_ptr<const Group> g, const Signature& sig,
                                                    std::size_t limit) {
  std::vector<GenVector> out;
  if (limit == 0) return out;
  for_each_generating_vector(std::move(g), sig, [&](const GenVector& gv) {
    out.push_back(gv);
    return out.size() < limit;
  });
  return out;
}

std::optional<UnmixedPair> find_free_pair(std::shared_ptr<const Group> gp, const Signature& sig1,
                                          const Signature& sig2) {
  const Group& g = *gp;
  const ConjClassSet cls = conjugacy_classes(g);

  // Distinct stabilizer class sets for sig2, each with its first witness.
  std::vector<std::vector<bool>> masks;
  std::vector<GenVector> witnesses;
  for_each_generating_vector(gp, sig2, [&](const GenVector& gv) {
    auto mask = stabilizer_classes(g, cls, gv.elements());
    if (std::find(masks.begin(), masks.end(), mask) == masks.end()) {
      masks.push_back(std::move(mask));
      witnesses.push_back(gv);
    }
    return true;
  });
  if (masks.empty()) return std::nullopt;

  std::optional<UnmixedPair> found;
  std::vector<std::vector<bool>> tried;
  for_each_generating_vector(gp, sig1, [&](const GenVector& gv) {
    auto mask = stabilizer_classes(g, cls, gv.elements());
    if (std::find(tried.begin(), tried.end(), mask) != tried.end()) return true;
    for (std::size_t k = 0; k < masks.size(); ++k) {
      if (disjoint(mask, masks[k])) {
        found = UnmixedPair{gv, witnesses[k]};
        return false;
      }
    }
    tried.push_back(std::move(mask));
    return true;
  });
  return found;
}

}  // namespace fakequad
