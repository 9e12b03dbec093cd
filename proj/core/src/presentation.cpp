#include "fakequad/presentation.hpp"

#include <cctype>
#include <deque>
#include <stdexcept>

#include "fakequad/perm.hpp"

namespace fakequad {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word invert(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

namespace {

class PresentationParser {
public:
  explicit PresentationParser(std::string_view text) : text_(text) {}

  FPGroup parse() {
    FPGroup g;
    skip();
    const bool bracketed = peek() == '<';
    if (bracketed) ++pos_;
    skip();
    while (true) {
      skip();
      const std::size_t at = pos_;
      std::string name = identifier();
      for (const auto& existing : g.generators)
        if (existing == name) fail("duplicate generator '" + name + "'", at);
      g.generators.push_back(std::move(name));
      generators_ = &g.generators;
      skip();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    skip();
    if (peek() == '|') {
      ++pos_;
      while (true) {
        skip();
        if (bracketed && peek() == '>') break;
        if (at_end()) break;
        Word w = free_reduce(word());
        if (!w.empty()) g.relators.push_back(std::move(w));
        skip();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    skip();
    if (bracketed) {
      if (peek() != '>') fail("expected '>'", pos_);
      ++pos_;
      skip();
    }
    if (!at_end()) fail("unexpected trailing input", pos_);
    return g;
  }

private:
  Word word() {
    Word w = factor();
    skip();
    while (peek() == '*') {
      ++pos_;
      Word next = factor();
      w.insert(w.end(), next.begin(), next.end());
      skip();
    }
    return w;
  }

  Word factor() {
    skip();
    Word base;
    if (peek() == '(') {
      ++pos_;
      base = word();
      skip();
      if (peek() != ')') fail("expected ')'", pos_);
      ++pos_;
    } else {
      const std::size_t at = pos_;
      const std::string name = identifier();
      int index = -1;
      for (std::size_t i = 0; i < generators_->size(); ++i)
        if ((*generators_)[i] == name) index = static_cast<int>(i);
      if (index < 0) fail("unknown generator '" + name + "'", at);
      base = {index + 1};
    }
    skip();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    const std::size_t at = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent", pos_);
    long exponent = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      exponent = exponent * 10 + (text_[pos_] - '0');
      if (exponent > 100000) fail("exponent too large", at);
      ++pos_;
    }
    if (negative) base = invert(base);
    Word out;
    for (long k = 0; k < exponent; ++k) out.insert(out.end(), base.begin(), base.end());
    return out;
  }

  std::string identifier() {
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) fail("expected a name", pos_);
    const std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(what, at + 1); }

  std::string_view text_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* generators_ = nullptr;
};

}  // namespace

FPGroup parse_presentation(std::string_view text) { return PresentationParser(text).parse(); }

std::string format_word(const FPGroup& g, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long run = static_cast<long>(j - i);
    if (!out.empty()) out += '*';
    out += g.generators[static_cast<std::size_t>(std::abs(w[i]) - 1)];
    if (w[i] < 0)
      out += "^-" + std::to_string(run);
    else if (run > 1)
      out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

std::string format_presentation(const FPGroup& g) {
  std::string out;
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    if (i) out += ", ";
    out += g.generators[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < g.relators.size(); ++i) {
    if (i) out += ", ";
    out += format_word(g, g.relators[i]);
  }
  return out;
}

CosetTable::CosetTable(std::size_t num_cosets, std::size_t num_generators)
    : num_generators_(num_generators), rows_(num_cosets, std::vector<std::int32_t>(2 * num_generators, -1)) {}

std::int32_t CosetTable::trace(std::size_t coset, const Word& w) const {
  std::int32_t c = static_cast<std::int32_t>(coset);
  for (int x : w) {
    c = rows_[static_cast<std::size_t>(c)][column_of(x)];
    if (c < 0) return -1;
  }
  return c;
}

bool CosetTable::is_complete() const {
  for (const auto& row : rows_)
    for (auto e : row)
      if (e < 0 || static_cast<std::size_t>(e) >= rows_.size()) return false;
  return true;
}

bool CosetTable::is_compatible() const {
  for (std::size_t c = 0; c < rows_.size(); ++c) {
    for (std::size_t col = 0; col < num_columns(); ++col) {
      const auto d = rows_[c][col];
      if (d < 0) continue;
      if (rows_[static_cast<std::size_t>(d)][col ^ 1U] != static_cast<std::int32_t>(c)) return false;
    }
  }
  return true;
}

bool CosetTable::traces_relators(const FPGroup& g) const {
  for (std::size_t c = 0; c < rows_.size(); ++c)
    for (const auto& r : g.relators)
      if (trace(c, r) != static_cast<std::int32_t>(c)) return false;
  return true;
}

namespace {

// Hasse-Lamb-Todd-Coxeter enumeration with coincidence processing.
class Enumerator {
public:
  Enumerator(const FPGroup& g, std::size_t max_cosets)
      : columns_(2 * g.rank()), max_cosets_(max_cosets) {
    new_coset();
  }

  void scan_and_fill(std::size_t alpha, const Word& w) {
    if (w.empty()) return;
    std::size_t f = alpha;
    std::size_t b = alpha;
    std::size_t i = 0;
    std::size_t j = w.size();  // w[i..j) is still unscanned
    while (true) {
      while (i < j && table_[f][col(w[i])] >= 0) {
        f = static_cast<std::size_t>(table_[f][col(w[i])]);
        ++i;
      }
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && table_[b][col(-w[j - 1])] >= 0) {
        b = static_cast<std::size_t>(table_[b][col(-w[j - 1])]);
        --j;
      }
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        table_[f][col(w[i])] = static_cast<std::int32_t>(b);
        table_[b][col(-w[i])] = static_cast<std::int32_t>(f);
        return;
      }
      define(f, w[i]);
    }
  }

  void define(std::size_t coset, int letter) {
    const std::size_t d = new_coset();
    table_[coset][col(letter)] = static_cast<std::int32_t>(d);
    table_[d][col(-letter)] = static_cast<std::int32_t>(coset);
  }

  bool live(std::size_t c) const { return parent_[c] == c; }
  std::size_t size() const { return table_.size(); }
  std::size_t columns() const { return columns_; }
  std::int32_t entry(std::size_t c, std::size_t column) const { return table_[c][column]; }

  static std::size_t col(int letter) { return CosetTable::column_of(letter); }

private:
  std::size_t new_coset() {
    if (live_count_ >= max_cosets_) throw std::runtime_error("coset enumeration exceeded the coset limit");
    table_.emplace_back(columns_, -1);
    parent_.push_back(table_.size() - 1);
    ++live_count_;
    return table_.size() - 1;
  }

  std::size_t rep(std::size_t k) {
    std::size_t root = k;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[k] != root) {
      const std::size_t next = parent_[k];
      parent_[k] = root;
      k = next;
    }
    return root;
  }

  void merge(std::size_t k, std::size_t l, std::deque<std::size_t>& queue) {
    const std::size_t a = rep(k);
    const std::size_t b = rep(l);
    if (a == b) return;
    const std::size_t lo = std::min(a, b);
    const std::size_t hi = std::max(a, b);
    parent_[hi] = lo;
    --live_count_;
    queue.push_back(hi);
  }

  void coincidence(std::size_t alpha, std::size_t beta) {
    std::deque<std::size_t> queue;
    merge(alpha, beta, queue);
    while (!queue.empty()) {
      const std::size_t gamma = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < columns_; ++x) {
        const auto target = table_[gamma][x];
        if (target < 0) continue;
        const auto delta = static_cast<std::size_t>(target);
        if (table_[delta][x ^ 1U] == static_cast<std::int32_t>(gamma)) table_[delta][x ^ 1U] = -1;
        const std::size_t mu = rep(gamma);
        const std::size_t nu = rep(delta);
        if (table_[mu][x] >= 0) {
          merge(nu, static_cast<std::size_t>(table_[mu][x]), queue);
        } else if (table_[nu][x ^ 1U] >= 0) {
          merge(mu, static_cast<std::size_t>(table_[nu][x ^ 1U]), queue);
        } else {
          table_[mu][x] = static_cast<std::int32_t>(nu);
          table_[nu][x ^ 1U] = static_cast<std::int32_t>(mu);
        }
      }
    }
  }

  std::size_t columns_;
  std::size_t max_cosets_;
  std::size_t live_count_ = 0;
  std::vector<std::vector<std::int32_t>> table_;
  std::vector<std::size_t> parent_;
};

}  // namespace

CosetTable enumerate_cosets(const FPGroup& g, const std::vector<Word>& subgroup, std::size_t max_cosets) {
  Enumerator e(g, max_cosets);
  for (const auto& w : subgroup) e.scan_and_fill(0, free_reduce(w));
  for (std::size_t alpha = 0; alpha < e.size(); ++alpha) {
    for (const auto& r : g.relators) {
      if (!e.live(alpha)) break;
      e.scan_and_fill(alpha, r);
    }
    if (!e.live(alpha)) continue;
    for (std::size_t x = 0; x < e.columns(); ++x) {
      if (!e.live(alpha)) break;
      if (e.entry(alpha, x) < 0) e.define(alpha, x % 2 == 0 ? static_cast<int>(x / 2 + 1) : -static_cast<int>(x / 2 + 1));
    }
  }

  // Renumber live cosets breadth-first from coset 0.
  std::vector<std::int32_t> label(e.size(), -1);
  std::vector<std::size_t> order{0};
  label[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::size_t c = order[head];
    for (std::size_t x = 0; x < e.columns(); ++x) {
      const auto d = e.entry(c, x);
      if (d < 0) throw std::runtime_error("coset enumeration produced an incomplete table");
      if (label[static_cast<std::size_t>(d)] < 0) {
        label[static_cast<std::size_t>(d)] = static_cast<std::int32_t>(order.size());
        order.push_back(static_cast<std::size_t>(d));
      }
    }
  }
  CosetTable table(order.size(), g.rank());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t x = 0; x < e.columns(); ++x)
      table.set(i, x, label[static_cast<std::size_t>(e.entry(order[i], x))]);
  if (!table.is_complete() || !table.is_compatible() || !table.traces_relators(g))
    throw std::runtime_error("coset enumeration failed its consistency checks");
  return table;
}

}  // namespace fakequad
