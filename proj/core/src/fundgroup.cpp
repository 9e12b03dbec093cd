#include "fakequad/fundgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace fakequad {

FPGroup polygonal_presentation(const Signature& sig, const std::string& prefix) {
  return polygonal_presentation(sig.multiplicities(), prefix);
}

FPGroup polygonal_presentation(const std::vector<std::size_t>& m, const std::string& prefix) {
  static_cast<void>(Signature{m});  // validates r >= 3, m_i >= 2
  FPGroup f;
  Word product;
  for (std::size_t i = 0; i < m.size(); ++i) {
    f.generators.push_back(prefix + std::to_string(i + 1));
    const int letter = static_cast<int>(i + 1);
    f.relators.emplace_back(m[i], letter);
    product.push_back(letter);
  }
  f.relators.push_back(std::move(product));
  return f;
}

FPGroup product_presentation(const std::vector<std::size_t>& orders1, const std::vector<std::size_t>& orders2) {
  FPGroup f = polygonal_presentation(orders1, "x");
  const FPGroup second = polygonal_presentation(orders2, "y");
  const int shift = static_cast<int>(f.rank());
  f.generators.insert(f.generators.end(), second.generators.begin(), second.generators.end());
  for (const auto& rel : second.relators) {
    Word w;
    for (int l : rel) w.push_back(l > 0 ? l + shift : l - shift);
    f.relators.push_back(std::move(w));
  }
  for (int i = 1; i <= shift; ++i)
    for (int j = 1; j <= static_cast<int>(second.rank()); ++j) f.relators.push_back({i, j + shift, -i, -(j + shift)});
  return f;
}

CosetTable fiber_coset_table(const UnmixedPair& pair) {
  const Group& g = pair.group();
  const auto& v = pair.gv1.elements();
  const auto& w = pair.gv2.elements();
  const std::size_t n = g.order();
  CosetTable t(n, v.size() + w.size());
  for (Elem c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Elem image = g.mul(g.inv(v[i]), c);
      t.set(c, 2 * i, static_cast<std::int32_t>(image));
      t.set(image, 2 * i + 1, static_cast<std::int32_t>(c));
    }
    for (std::size_t j = 0; j < w.size(); ++j) {
      const std::size_t k = v.size() + j;
      const Elem image = g.mul(c, w[j]);
      t.set(c, 2 * k, static_cast<std::int32_t>(image));
      t.set(image, 2 * k + 1, static_cast<std::int32_t>(c));
    }
  }
  const FPGroup f = product_presentation(pair.gv1.orders(), pair.gv2.orders());
  if (!t.is_complete()) throw std::logic_error("fiber coset table is incomplete");
  if (!t.is_compatible()) throw std::logic_error("fiber coset table columns are not mutually inverse");
  if (!t.traces_relators(f)) throw std::logic_error("fiber coset table fails a relator trace");
  return t;
}

SchreierPresentation reidemeister_schreier(const FPGroup& f, const CosetTable& t) {
  if (t.num_generators() != f.rank()) throw std::invalid_argument("coset table does not match the presentation");
  if (!t.is_complete() || !t.is_compatible()) throw std::invalid_argument("coset table is not complete and compatible");
  const std::size_t n = t.num_cosets();
  const std::size_t rank = f.rank();

  // tree[c * rank + k] marks the edge c --x_k--> c x_k as a tree edge.
  std::vector<bool> tree(n * rank, false);
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    for (std::size_t col = 0; col < t.num_columns(); ++col) {
      const auto d = static_cast<std::size_t>(t.entry(c, col));
      if (seen[d]) continue;
      seen[d] = true;
      queue.push_back(d);
      if (col % 2 == 0)
        tree[c * rank + col / 2] = true;
      else
        tree[d * rank + col / 2] = true;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw std::invalid_argument("coset graph is not connected");

  SchreierPresentation out;
  std::vector<int> symbol(n * rank, 0);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t k = 0; k < rank; ++k) {
      if (tree[c * rank + k]) continue;
      out.group.generators.push_back(f.generators[k] + "_" + std::to_string(c));
      symbol[c * rank + k] = static_cast<int>(out.group.generators.size());
    }
  out.schreier_generators = out.group.generators.size();

  for (const auto& rel : f.relators) {
    for (std::size_t start = 0; start < n; ++start) {
      Word w;
      std::size_t cur = start;
      for (int l : rel) {
        const auto k = static_cast<std::size_t>(std::abs(l) - 1);
        if (l > 0) {
          if (int s = symbol[cur * rank + k]) w.push_back(s);
          cur = static_cast<std::size_t>(t.act(cur, l));
        } else {
          cur = static_cast<std::size_t>(t.act(cur, l));
          if (int s = symbol[cur * rank + k]) w.push_back(-s);
        }
      }
      if (cur != start) throw std::logic_error("relator does not close at coset " + std::to_string(start));
      w = free_reduce(w);
      ++out.rewritten_relators;
      if (!w.empty()) out.group.relators.push_back(std::move(w));
    }
  }
  return out;
}

FPGroup tietze_reduce(FPGroup f) {
  std::vector<bool> killed(f.rank(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& rel : f.relators) {
      if (rel.size() != 1) continue;
      const auto k = static_cast<std::size_t>(std::abs(rel.front()) - 1);
      if (!killed[k]) {
        killed[k] = true;
        changed = true;
      }
    }
    if (!changed) break;
    std::vector<Word> next;
    for (const auto& rel : f.relators) {
      Word w;
      for (int l : rel)
        if (!killed[static_cast<std::size_t>(std::abs(l) - 1)]) w.push_back(l);
      w = free_reduce(w);
      if (!w.empty()) next.push_back(std::move(w));
    }
    f.relators = std::move(next);
  }
  std::vector<int> renumber(f.rank(), 0);
  FPGroup out;
  for (std::size_t k = 0; k < f.rank(); ++k) {
    if (killed[k]) continue;
    out.generators.push_back(f.generators[k]);
    renumber[k] = static_cast<int>(out.generators.size());
  }
  for (const auto& rel : f.relators) {
    Word w;
    for (int l : rel) w.push_back(l > 0 ? renumber[static_cast<std::size_t>(l - 1)] : -renumber[static_cast<std::size_t>(-l - 1)]);
    out.relators.push_back(std::move(w));
  }
  return out;
}

SparseMatrix exponent_matrix(const FPGroup& f) {
  SparseMatrix m;
  m.cols = f.rank();
  for (const auto& rel : f.relators) {
    std::map<std::size_t, long long> sums;
    for (int l : rel) sums[static_cast<std::size_t>(std::abs(l) - 1)] += l > 0 ? 1 : -1;
    SparseRow row;
    for (const auto& [c, s] : sums)
      if (s != 0) row.emplace_back(c, BigInt(s));
    m.rows.push_back(std::move(row));
  }
  return m;
}

AbelianInvariants abelianization(const FPGroup& f) { return cokernel_invariants(exponent_matrix(f)); }

AbelianInvariants fiber_product_homology(const UnmixedPair& pair) {
  if (!is_free_unmixed(pair).free) throw std::domain_error("not a valid unmixed family: the diagonal action is not free");
  const FPGroup f = product_presentation(pair.gv1.orders(), pair.gv2.orders());
  const CosetTable t = fiber_coset_table(pair);
  const auto rs = reidemeister_schreier(f, t);
  return abelianization(tietze_reduce(rs.group));
}

AbelianInvariants h1_surface(const UnmixedPair& pair) {
  AbelianInvariants h = fiber_product_homology(pair);
  if (h.free_rank != 0)
    throw std::domain_error("H1 has free rank " + std::to_string(h.free_rank) +
                            ": the family is not a Q-homology quadric");
  return h;
}

}  // namespace fakequad
