#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fakequad {

/// A word in the free group. Letter +k is generator k-1, -k its inverse.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word invert(const Word& w);

/// Finitely presented group <generators | relators>.
struct FPGroup {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t rank() const { return generators.size(); }
};

/// Parses "a,b,c | a^4, b^2, a*b*a^-1*b^-1, (a*c)^2". Relators are freely
/// reduced; empty relators are dropped.
FPGroup parse_presentation(std::string_view text);

/// Inverse of parse_presentation (up to free reduction and power grouping).
std::string format_presentation(const FPGroup& g);
std::string format_word(const FPGroup& g, const Word& w);

/// Coset table for a right action. Column 2k is generator k, column 2k+1 its
/// inverse. Entries are coset indices; -1 marks an undefined entry.
class CosetTable {
public:
  CosetTable(std::size_t num_cosets, std::size_t num_generators);

  std::size_t num_cosets() const { return rows_.size(); }
  std::size_t num_generators() const { return num_generators_; }
  std::size_t num_columns() const { return 2 * num_generators_; }

  static std::size_t column_of(int letter) {
    return letter > 0 ? 2 * static_cast<std::size_t>(letter - 1) : 2 * static_cast<std::size_t>(-letter - 1) + 1;
  }

  std::int32_t entry(std::size_t coset, std::size_t column) const { return rows_[coset][column]; }
  void set(std::size_t coset, std::size_t column, std::int32_t target) { rows_[coset][column] = target; }

  /// Image of `coset` under `letter`.
  std::int32_t act(std::size_t coset, int letter) const { return rows_[coset][column_of(letter)]; }

  /// Traces w from `coset`; returns -1 if an undefined entry is hit.
  std::int32_t trace(std::size_t coset, const Word& w) const;

  bool is_complete() const;
  /// Generator and inverse columns are mutually inverse permutations.
  bool is_compatible() const;
  /// Every relator closes up at every coset.
  bool traces_relators(const FPGroup& g) const;

private:
  std::size_t num_generators_;
  std::vector<std::vector<std::int32_t>> rows_;
};

/// Todd-Coxeter (HLT) enumeration of the cosets of the subgroup generated by
/// `subgroup` (empty = trivial subgroup). Cosets are renumbered in
/// breadth-first order from coset 0. Throws std::runtime_error when more than
/// `max_cosets` cosets are live.
CosetTable enumerate_cosets(const FPGroup& g, const std::vector<Word>& subgroup = {},
                            std::size_t max_cosets = 100000);

}  // namespace fakequad
