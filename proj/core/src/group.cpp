#include "fakequad/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fakequad/presentation.hpp"

namespace fakequad {

std::size_t CayleyTable::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != identity; x = mul(x, a)) ++k;
  return k;
}

Group Group::closure(const std::vector<Perm>& gens, std::string label, std::size_t bound) {
  if (gens.empty()) throw std::invalid_argument("group closure needs at least one generator");
  const std::size_t degree = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("group closure: generators have different degrees");

  std::vector<Perm> found{Perm(degree)};
  std::unordered_map<Perm, Elem> seen{{found.front(), 0}};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& s : gens) {
      Perm next = compose(found[head], s);
      if (seen.count(next)) continue;
      if (found.size() >= bound)
        throw std::length_error("group closure exceeds the size bound of " + std::to_string(bound));
      seen.emplace(next, static_cast<Elem>(found.size()));
      found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end());

  Group g;
  g.label_ = std::move(label);
  g.elements_ = std::move(found);
  const std::size_t n = g.elements_.size();
  for (std::size_t i = 0; i < n; ++i) g.index_.emplace(g.elements_[i], static_cast<Elem>(i));

  g.table_.n = n;
  g.table_.identity = 0;
  g.table_.product.resize(n * n);
  g.table_.inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Elem c = g.index_.at(compose(g.elements_[a], g.elements_[b]));
      g.table_.product[a * n + b] = c;
      if (c == 0) g.table_.inverse[a] = static_cast<Elem>(b);
    }
  }
  g.orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) g.orders_[a] = g.table_.element_order(static_cast<Elem>(a));
  for (const auto& s : gens) g.generators_.push_back(g.index_.at(s));
  return g;
}

std::optional<Elem> Group::find(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem Group::index_of(const Perm& p) const {
  if (p.degree() != degree())
    throw std::invalid_argument("permutation " + format_cycles(p) + " has degree " + std::to_string(p.degree()) +
                                ", group acts on " + std::to_string(degree()) + " points");
  auto found = find(p);
  if (!found) throw std::invalid_argument("permutation " + format_cycles(p) + " is not an element of " + label_);
  return *found;
}

Elem Group::pow(Elem a, std::size_t k) const {
  k %= orders_[a];
  Elem r = identity();
  for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::size_t Group::exponent() const {
  std::size_t e = 1;
  for (auto o : orders_) e = std::lcm(e, o);
  return e;
}

std::vector<Elem> Group::subgroup(const std::vector<Elem>& gens) const {
  std::vector<bool> in(order(), false);
  std::vector<Elem> found{identity()};
  in[identity()] = true;
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (Elem s : gens) {
      const Elem next = mul(found[head], s);
      if (!in[next]) {
        in[next] = true;
        found.push_back(next);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

Group group_closure(const std::vector<Perm>& gens, std::size_t bound) { return Group::closure(gens, {}, bound); }

std::size_t element_order(const Group& g, Elem a) { return g.element_order(a); }

namespace {

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Elem table_pow(const CayleyTable& t, Elem a, std::size_t k) {
  Elem r = t.identity;
  Elem base = a;
  while (k > 0) {
    if (k & 1U) r = t.mul(r, base);
    base = t.mul(base, base);
    k >>= 1U;
  }
  return r;
}

}  // namespace

std::size_t ConjClassSet::power_class(std::size_t cls, std::size_t k) const {
  if (k == 0) throw std::invalid_argument("power map requested for exponent 0");
  std::size_t e = 1;
  for (auto o : rep_orders) e = std::lcm(e, o);
  k %= e;
  if (k == 0) return 0;
  std::size_t result = cls;
  for (std::size_t p = 2; k > 1; ++p) {
    while (k % p == 0) {
      auto it = power_maps.find(p);
      if (it == power_maps.end()) throw std::out_of_range("power map unavailable for prime " + std::to_string(p));
      result = it->second[result];
      k /= p;
    }
  }
  return result;
}

ConjClassSet conjugacy_classes(const CayleyTable& t) {
  const std::size_t n = t.n;
  std::vector<std::vector<Elem>> raw;
  std::vector<bool> assigned(n, false);
  for (Elem g = 0; g < n; ++g) {
    if (assigned[g]) continue;
    std::vector<Elem> cls;
    for (Elem h = 0; h < n; ++h) {
      const Elem c = t.mul(t.mul(h, g), t.inverse[h]);
      if (!assigned[c]) {
        assigned[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    raw.push_back(std::move(cls));
  }
  std::vector<std::size_t> orders(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) orders[i] = t.element_order(raw[i].front());
  std::vector<std::size_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const bool ida = raw[a].front() == t.identity;
    const bool idb = raw[b].front() == t.identity;
    if (ida != idb) return ida;
    if (orders[a] != orders[b]) return orders[a] < orders[b];
    if (raw[a].size() != raw[b].size()) return raw[a].size() < raw[b].size();
    return raw[a].front() < raw[b].front();
  });

  ConjClassSet out;
  out.class_of.assign(n, 0);
  for (std::size_t k = 0; k < perm.size(); ++k) {
    auto& cls = raw[perm[k]];
    for (Elem x : cls) out.class_of[x] = k;
    out.reps.push_back(cls.front());
    out.sizes.push_back(cls.size());
    out.rep_orders.push_back(orders[perm[k]]);
    out.classes.push_back(std::move(cls));
  }

  std::size_t exponent = 1;
  for (auto o : out.rep_orders) exponent = std::lcm(exponent, o);
  for (std::size_t p = 2; p <= std::max<std::size_t>(exponent, 2); ++p) {
    if (!is_prime(p)) continue;
    std::vector<std::size_t> map(out.count());
    for (std::size_t k = 0; k < out.count(); ++k) {
      const std::size_t target = out.class_of[table_pow(t, out.reps[k], p)];
      for (Elem x : out.classes[k])
        if (out.class_of[table_pow(t, x, p)] != target)
          throw std::logic_error("power map is not well defined on a conjugacy class");
      map[k] = target;
    }
    out.power_maps.emplace(p, std::move(map));
  }
  return out;
}

ConjClassSet conjugacy_classes(const Group& g) { return conjugacy_classes(g.table()); }

std::vector<Elem> center(const CayleyTable& t) {
  std::vector<Elem> out;
  for (Elem z = 0; z < t.n; ++z) {
    bool central = true;
    for (Elem h = 0; h < t.n && central; ++h) central = t.mul(z, h) == t.mul(h, z);
    if (central) out.push_back(z);
  }
  return out;
}

std::vector<std::uint64_t> abelian_invariants(const Group& g) {
  const std::size_t n = g.order();
  std::vector<Elem> commutators;
  std::vector<bool> seen(n, false);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (!seen[c]) {
        seen[c] = true;
        commutators.push_back(c);
      }
    }
  }
  const std::vector<Elem> derived = g.subgroup(commutators);
  std::vector<bool> in_derived(n, false);
  for (Elem d : derived) in_derived[d] = true;

  // Order of each coset gD: least k with g^k in D.
  std::vector<std::size_t> coset_order(n);
  std::vector<bool> counted(n, false);
  std::vector<std::size_t> orders;
  for (Elem a = 0; a < n; ++a) {
    if (counted[a]) continue;
    for (Elem d : derived) counted[g.mul(a, d)] = true;
    std::size_t k = 1;
    for (Elem x = a; !in_derived[x]; x = g.mul(x, a)) ++k;
    orders.push_back(k);
  }
  const std::size_t m = orders.size();

  std::vector<std::vector<std::uint64_t>> per_prime;
  std::size_t rest = m;
  for (std::size_t p = 2; rest > 1; ++p) {
    if (rest % p) continue;
    while (rest % p == 0) rest /= p;
    // count[k] = #{cosets with order dividing p^k}
    std::vector<std::size_t> counts{1};
    for (std::uint64_t pk = p;; pk *= p) {
      std::size_t c = 0;
      for (auto o : orders)
        if (pk % o == 0) ++c;
      counts.push_back(c);
      if (c == counts[counts.size() - 2]) break;
    }
    // factors with order >= p^k: log_p(counts[k] / counts[k-1])
    std::vector<std::size_t> at_least;
    for (std::size_t k = 1; k < counts.size(); ++k) {
      std::size_t ratio = counts[k] / counts[k - 1];
      std::size_t l = 0;
      while (ratio > 1) {
        ratio /= p;
        ++l;
      }
      at_least.push_back(l);
    }
    std::vector<std::uint64_t> powers;
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      const std::size_t exact = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
      std::uint64_t pp = 1;
      for (std::size_t i = 0; i <= k; ++i) pp *= p;
      for (std::size_t i = 0; i < exact; ++i) powers.push_back(pp);
    }
    std::sort(powers.rbegin(), powers.rend());
    per_prime.push_back(std::move(powers));
  }
  std::vector<std::uint64_t> factors;
  std::size_t length = 0;
  for (const auto& v : per_prime) length = std::max(length, v.size());
  for (std::size_t i = 0; i < length; ++i) {
    std::uint64_t d = 1;
    for (const auto& v : per_prime)
      if (i < v.size()) d *= v[i];
    factors.push_back(d);
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

Fingerprint fingerprint(const Group& g) {
  return Fingerprint{g.order(), g.exponent(), conjugacy_classes(g).count(), abelian_invariants(g)};
}

const std::vector<GroupSpec>& group_catalog() {
  static const std::vector<GroupSpec> catalog = {
      {"A5", 60, 5, {60, 30, 5, {}}},
      {"S5", 120, 34, {120, 60, 7, {2}}},
      {"SL(2,5)", 120, 5, {120, 60, 9, {}}},
      {"Z5^2", 25, 2, {25, 5, 25, {5, 5}}},
      {"S4xZ2", 48, 48, {48, 12, 10, {2, 2}}},
      {"G(32)", 32, 27, {32, 4, 14, {2, 2, 2}}},
      {"S4", 24, 12, {24, 12, 5, {2}}},
      {"G(16)", 16, 3, {16, 4, 10, {2, 4}}},
      {"D4xZ2", 16, 11, {16, 4, 10, {2, 2, 2}}},
      {"Z2^4", 16, 14, {16, 2, 16, {2, 2, 2, 2}}},
      {"Z3^2", 9, 2, {9, 3, 9, {3, 3}}},
      {"Z2^3", 8, 5, {8, 2, 8, {2, 2, 2}}},
  };
  return catalog;
}

const std::string& presentation_text(std::string_view label) {
  // G(16): (Z4 x Z2) extended by an involution c acting as a -> ab.
  static const std::string g16 = "a, b, c | a^4, b^2, c^2, a*b*a^-1*b^-1, b*c*b^-1*c^-1, c*a*c^-1*b^-1*a^-1";
  // G(32): (Z2^2) wr Z2; t swaps the base factors <a,b> and <c,d>.
  static const std::string g32 =
      "a, b, c, d, t | a^2, b^2, c^2, d^2, t^2, a*b*a*b, a*c*a*c, a*d*a*d, b*c*b*c, b*d*b*d, c*d*c*d, "
      "t*a*t*c, t*b*t*d";
  if (label == "G(16)") return g16;
  if (label == "G(32)") return g32;
  throw std::invalid_argument("no embedded presentation for " + std::string(label));
}

Group group_from_presentation(std::string_view presentation, std::string label, std::size_t max_cosets) {
  const FPGroup fp = parse_presentation(presentation);
  const CosetTable table = enumerate_cosets(fp, {}, max_cosets);
  std::vector<Perm> gens;
  for (std::size_t k = 0; k < fp.rank(); ++k) {
    std::vector<Perm::Point> images(table.num_cosets());
    for (std::size_t c = 0; c < table.num_cosets(); ++c)
      images[c] = static_cast<Perm::Point>(table.entry(c, 2 * k));
    gens.emplace_back(std::move(images));
  }
  Group g = Group::closure(gens, std::move(label), max_cosets + 1);
  if (g.order() != table.num_cosets())
    throw std::runtime_error("regular representation is not faithful for " + g.label());
  return g;
}

namespace {

Group cyclic_product(const std::vector<std::size_t>& moduli, std::string label) {
  std::size_t degree = 0;
  for (auto m : moduli) degree += m;
  if (degree == 0) degree = 1;
  std::vector<Perm> gens;
  std::size_t offset = 0;
  for (auto m : moduli) {
    std::vector<std::size_t> cycle;
    for (std::size_t i = 1; i <= m; ++i) cycle.push_back(offset + i);
    gens.push_back(Perm::from_cycles(degree, {cycle}));
    offset += m;
  }
  if (gens.empty()) gens.emplace_back(degree);
  return Group::closure(gens, std::move(label));
}

Group sl25() {
  // Nonzero vectors (a, b) of F_5^2, indexed 5a + b - 1.
  auto perm_of = [](int m00, int m01, int m10, int m11) {
    std::vector<Perm::Point> images(24);
    for (int a = 0; a < 5; ++a) {
      for (int b = 0; b < 5; ++b) {
        if (a == 0 && b == 0) continue;
        const int x = (m00 * a + m01 * b) % 5;
        const int y = (m10 * a + m11 * b) % 5;
        images[static_cast<std::size_t>(5 * a + b - 1)] = static_cast<Perm::Point>(5 * x + y - 1);
      }
    }
    return Perm(std::move(images));
  };
  return Group::closure({perm_of(1, 1, 0, 1), perm_of(0, 4, 1, 0)}, "SL(2,5)");
}

auto perm5(std::string_view s, std::size_t degree) { return parse_cycles(s, degree); }

// Parses Zn, Zn^k and (Zn)^k.
std::optional<std::vector<std::size_t>> abelian_label(std::string_view label) {
  std::string s;
  for (char c : label)
    if (c != '(' && c != ')' && !std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s[0] != 'Z') return std::nullopt;
  std::size_t i = 1;
  std::size_t n = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) n = n * 10 + static_cast<std::size_t>(s[i++] - '0');
  if (n < 2 || n > 1000) return std::nullopt;
  std::size_t k = 1;
  if (i < s.size()) {
    if (s[i] != '^') return std::nullopt;
    ++i;
    if (i == s.size()) return std::nullopt;
    k = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) k = k * 10 + static_cast<std::size_t>(s[i++] - '0');
    if (i != s.size() || k < 1 || k > 8) return std::nullopt;
  }
  return std::vector<std::size_t>(k, n);
}

std::string canonical_label(std::string_view label) {
  std::string s;
  for (char c : label)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "(Z5)^2") return "Z5^2";
  if (s == "(Z2)^4") return "Z2^4";
  if (s == "(Z3)^2") return "Z3^2";
  if (s == "(Z2)^3") return "Z2^3";
  if (s == "S4×Z2" || s == "S4*Z2") return "S4xZ2";
  if (s == "D4×Z2" || s == "D4*Z2") return "D4xZ2";
  return s;
}

}  // namespace

Group construct_group(std::string_view raw_label) {
  const std::string label = canonical_label(raw_label);
  std::optional<Group> g;
  if (label == "A5") g = Group::closure({perm5("(1,2,3)", 5), perm5("(1,2,3,4,5)", 5)}, label);
  else if (label == "S5") g = Group::closure({perm5("(1,2)", 5), perm5("(1,2,3,4,5)", 5)}, label);
  else if (label == "SL(2,5)") g = sl25();
  else if (label == "S4") g = Group::closure({perm5("(1,2,3,4)", 4), perm5("(1,2)", 4)}, label);
  else if (label == "S4xZ2")
    g = Group::closure({perm5("(1,2,3,4)", 6), perm5("(1,2)", 6), perm5("(5,6)", 6)}, label);
  else if (label == "D4xZ2")
    g = Group::closure({perm5("(1,2,3,4)", 6), perm5("(1,3)", 6), perm5("(5,6)", 6)}, label);
  else if (label == "G(16)" || label == "G(32)") g = group_from_presentation(presentation_text(label), label);
  else if (label == "1" || label == "trivial") g = Group::closure({Perm(1)}, "1");
  else if (auto moduli = abelian_label(label)) g = cyclic_product(*moduli, label);
  else throw std::invalid_argument("unknown group label '" + std::string(raw_label) + "'");

  std::optional<Fingerprint> expected;
  for (const auto& spec : group_catalog())
    if (spec.label == label) expected = spec.expected;
  if (expected) {
    const Fingerprint actual = fingerprint(*g);
    if (!(actual == *expected)) throw std::runtime_error("fingerprint mismatch for " + label);
  }
  return std::move(*g);
}

std::optional<std::vector<Elem>> find_isomorphism(const CayleyTable& from, const std::vector<Elem>& from_gens,
                                                  const CayleyTable& to) {
  if (from.n != to.n) return std::nullopt;
  const ConjClassSet from_classes = conjugacy_classes(from);
  const ConjClassSet to_classes = conjugacy_classes(to);
  const std::size_t n = from.n;

  std::vector<std::vector<Elem>> candidates;
  for (Elem g : from_gens) {
    const std::size_t order = from.element_order(g);
    const std::size_t size = from_classes.sizes[from_classes.class_of[g]];
    std::vector<Elem> c;
    for (Elem x = 0; x < n; ++x)
      if (to.element_order(x) == order && to_classes.sizes[to_classes.class_of[x]] == size) c.push_back(x);
    candidates.push_back(std::move(c));
  }

  // Extends generator images along a breadth-first spanning tree; succeeds iff
  // the extension is a well-defined bijective homomorphism.
  auto extends = [&](const std::vector<Elem>& images) {
    std::vector<std::int64_t> phi(n, -1);
    std::vector<bool> hit(n, false);
    std::vector<Elem> queue{from.identity};
    phi[from.identity] = to.identity;
    hit[to.identity] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Elem a = queue[head];
      for (std::size_t k = 0; k < from_gens.size(); ++k) {
        const Elem b = from.mul(a, from_gens[k]);
        const Elem image = to.mul(static_cast<Elem>(phi[a]), images[k]);
        if (phi[b] >= 0) {
          if (phi[b] != image) return false;
          continue;
        }
        if (hit[image]) return false;
        hit[image] = true;
        phi[b] = image;
        queue.push_back(b);
      }
    }
    return queue.size() == n;
  };

  std::vector<Elem> images(from_gens.size());
  std::optional<std::vector<Elem>> result;
  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == from_gens.size()) {
      if (extends(images)) {
        result = images;
        return true;
      }
      return false;
    }
    for (Elem c : candidates[k]) {
      images[k] = c;
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  search(search, 0);
  return result;
}

CentralQuotientCertificate central_quotient_certificate(const Group& extension, const Group& target) {
  CentralQuotientCertificate cert;
  const CayleyTable& e = extension.table();
  const auto z_all = center(e);
  cert.center_order = z_all.size();
  if (extension.order() != 2 * target.order()) {
    cert.reason = "order mismatch: |E| = " + std::to_string(extension.order()) + ", 2|target| = " +
                  std::to_string(2 * target.order());
    return cert;
  }
  bool any = false;
  for (Elem z : z_all) {
    if (e.element_order(z) != 2) continue;
    any = true;
    // Cosets {g, gz}, labelled by their smaller member.
    std::vector<Elem> coset_of(e.n);
    std::vector<Elem> reps;
    std::vector<std::int64_t> label(e.n, -1);
    for (Elem g = 0; g < e.n; ++g) {
      const Elem partner = e.mul(g, z);
      const Elem r = std::min(g, partner);
      if (label[r] < 0) {
        label[r] = static_cast<std::int64_t>(reps.size());
        reps.push_back(r);
      }
      coset_of[g] = static_cast<Elem>(label[r]);
    }
    CayleyTable q;
    q.n = reps.size();
    q.identity = coset_of[e.identity];
    q.product.resize(q.n * q.n);
    q.inverse.resize(q.n);
    for (std::size_t a = 0; a < q.n; ++a) {
      q.inverse[a] = coset_of[e.inverse[reps[a]]];
      for (std::size_t b = 0; b < q.n; ++b) q.product[a * q.n + b] = coset_of[e.mul(reps[a], reps[b])];
    }
    if (auto iso = find_isomorphism(target.table(), target.generators(), q)) {
      cert.holds = true;
      cert.central_involution = z;
      cert.generator_images = *iso;
      cert.reason = "quotient by a central involution is isomorphic to " + target.label();
      return cert;
    }
  }
  cert.reason = any ? "no quotient by a central involution is isomorphic to " + target.label()
                    : "no central element of order 2";
  return cert;
}

bool verify_central_quotient(const Group& extension, const Group& target) {
  return central_quotient_certificate(extension, target).holds;
}

}  // namespace fakequad
