#include "fakequad/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace fakequad {

ParseError::ParseError(const std::string& what, std::size_t column, std::size_t line)
    : std::runtime_error([&] {
        std::ostringstream os;
        if (line > 0) os << "line " << line << ", ";
        os << "column " << column << ": " << what;
        return os.str();
      }()),
      message_(what),
      column_(column),
      line_(line) {}

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y]) throw std::invalid_argument("Perm: images do not form a bijection");
    seen[y] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const std::size_t from = cycle[k];
      const std::size_t to = cycle[(k + 1) % cycle.size()];
      if (from < 1 || from > degree || to < 1 || to > degree)
        throw std::invalid_argument("Perm::from_cycles: point out of range");
      if (used[from - 1]) throw std::invalid_argument("Perm::from_cycles: cycles are not disjoint");
      used[from - 1] = true;
      images[from - 1] = static_cast<Point>(to - 1);
    }
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Perm result;
  result.images_ = std::move(inv);
  return result;
}

std::size_t Perm::fixed_points() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == i) ++n;
  return n;
}

std::vector<std::vector<std::size_t>> Perm::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<Perm::Point> images(a.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = a[b[x]];
  return Perm(std::move(images));
}

Perm power(const Perm& a, std::size_t k) {
  Perm result(a.degree());
  Perm base = a;
  while (k > 0) {
    if (k & 1U) result = compose(result, base);
    base = compose(base, base);
    k >>= 1U;
  }
  return result;
}

std::size_t perm_order(const Perm& a) {
  std::size_t order = 1;
  for (const auto& c : a.cycles()) order = std::lcm(order, c.size());
  return order;
}

namespace {

class CycleScanner {
public:
  CycleScanner(std::string_view text, std::size_t degree, std::size_t offset)
      : text_(text), degree_(degree), offset_(offset) {}

  // Parses one permutation starting at pos_; stops at whitespace separating
  // two permutations when `stop_at_gap` is set.
  Perm parse_one(bool stop_at_gap) {
    skip_space();
    if (at_end()) fail("expected a permutation");
    if (text_.substr(pos_, 2) == "id") {
      pos_ += 2;
      if (!at_end() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(')
        fail("unexpected character after 'id'");
      return Perm(degree_);
    }
    std::vector<std::vector<std::size_t>> cycles;
    std::vector<bool> used(degree_, false);
    bool any = false;
    while (true) {
      if (stop_at_gap) {
        if (any && (at_end() || std::isspace(static_cast<unsigned char>(text_[pos_])))) break;
      } else {
        skip_space();
        if (at_end()) break;
      }
      if (text_[pos_] != '(') fail("expected '('");
      ++pos_;
      any = true;
      skip_space();
      std::vector<std::size_t> cycle;
      if (peek() == ')') {
        ++pos_;
        continue;
      }
      while (true) {
        skip_space();
        const std::size_t start = pos_;
        std::size_t value = 0;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a point");
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
          if (value > 1000000) fail("point out of range", start);
          ++pos_;
        }
        if (value < 1 || value > degree_)
          fail("point " + std::to_string(value) + " outside 1.." + std::to_string(degree_), start);
        if (used[value - 1]) fail("point " + std::to_string(value) + " repeated", start);
        used[value - 1] = true;
        cycle.push_back(value);
        skip_space();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() == ')') {
          ++pos_;
          break;
        }
        fail("expected ',' or ')'");
      }
      if (cycle.size() >= 2) cycles.push_back(std::move(cycle));
    }
    return Perm::from_cycles(degree_, cycles);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }

private:
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw ParseError(what, offset_ + at + 1);
  }

  std::string_view text_;
  std::size_t degree_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Perm parse_cycles(std::string_view text, std::size_t degree) {
  CycleScanner scanner(text, degree, 0);
  return scanner.parse_one(false);
}

std::vector<Perm> parse_perm_list(std::string_view text, std::size_t degree, std::size_t column_offset) {
  CycleScanner scanner(text, degree, column_offset);
  std::vector<Perm> out;
  scanner.skip_space();
  while (!scanner.at_end()) {
    out.push_back(scanner.parse_one(true));
    scanner.skip_space();
  }
  return out;
}

std::string format_cycles(const Perm& p) {
  const auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << format_cycles(p); }

}  // namespace fakequad

std::size_t std::hash<fakequad::Perm>::operator()(const fakequad::Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}
