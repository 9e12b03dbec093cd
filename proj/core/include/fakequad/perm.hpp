#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fakequad {

/// Malformed textual input. `column()` is 1-based; `line()` is 1-based or 0
/// when the input was a single line.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t column, std::size_t line = 0);

  std::size_t column() const { return column_; }
  std::size_t line() const { return line_; }
  /// Message without the position prefix.
  const std::string& message() const { return message_; }

private:
  std::string message_;
  std::size_t column_;
  std::size_t line_;
};

/// Permutation of {0..n-1} in one-line form. Points are 0-based internally;
/// all text I/O is 1-based.
class Perm {
public:
  using Point = std::uint16_t;

  explicit Perm(std::size_t degree = 0);

  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Perm(std::vector<Point> images);

  /// Builds a permutation from 1-based cycles.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  std::size_t fixed_points() const;

  /// Disjoint cycles of length >= 2, 1-based, each starting at its least point.
  std::vector<std::vector<std::size_t>> cycles() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

private:
  std::vector<Point> images_;
};

/// x -> a(b(x)): right-to-left application.
Perm compose(const Perm& a, const Perm& b);

/// a^k for k >= 0.
Perm power(const Perm& a, std::size_t k);

/// Least k >= 1 with a^k = id.
std::size_t perm_order(const Perm& a);

/// Parses cycle notation such as "(2,4)(3,5)". Points are 1-based; whitespace
/// is ignored; "()" and "id" denote the identity. Throws ParseError with the
/// offending column.
Perm parse_cycles(std::string_view text, std::size_t degree);

/// Parses a whitespace-separated list of permutations, e.g.
/// "(2,4)(3,5) (2,1,3,4,5) (1,2,3,4,5)". `column_offset` shifts reported columns.
std::vector<Perm> parse_perm_list(std::string_view text, std::size_t degree,
                                  std::size_t column_offset = 0);

/// Cycle notation with 1-based points; identity prints as "()".
std::string format_cycles(const Perm& p);

std::ostream& operator<<(std::ostream& os, const Perm& p);

}  // namespace fakequad

template <>
struct std::hash<fakequad::Perm> {
  std::size_t operator()(const fakequad::Perm& p) const noexcept;
};
