#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fakequad/branching.hpp"
#include "fakequad/parity.hpp"
#include "fakequad/smith.hpp"

namespace fakequad {

enum class ParityAnnotation { even, odd, unknown };

const char* to_string(ParityAnnotation p);  // "even", "odd", "?"

/// One family of the classification table.
struct FamilyRow {
  int index = 0;
  std::string group_label;
  std::size_t id_order = 0;
  std::size_t id_index = 0;
  std::vector<std::size_t> sig1;
  std::vector<std::size_t> sig2;
  ParityAnnotation parity = ParityAnnotation::unknown;
  std::size_t d_expected = 0;
  std::string h1_printed;  // e.g. "(Z3)^2 x Z15"

  friend bool operator==(const FamilyRow&, const FamilyRow&) = default;
};

/// The 12 embedded rows, in table order.
const std::vector<FamilyRow>& load_table();

/// "(Z2)^2 x Z4 x Z8", "Z3^2 x Z15", "Z" or "0" -> invariant factors.
/// Throws ParseError.
AbelianInvariants parse_abelian_descriptor(std::string_view text);

/// One line per row: "1 | A5 | <60,5> | [2,5,5] | [3,3,3,3] | odd | 1 | (Z3)^2 x Z15".
std::string serialize_table(const std::vector<FamilyRow>& rows);
std::vector<FamilyRow> parse_table(std::string_view text);

/// key = value lines of a pair descriptor, with positions for diagnostics.
struct PairDescriptor {
  struct Field {
    std::string value;
    std::size_t line = 0;
    std::size_t column = 0;  // 1-based column of the value
  };
  Field group, gv1, gv2, sig1, sig2;
};

/// Parses "group = A5", "gv1 = ...", "sig1 = [2,5,5]", "gv2", "sig2", with
/// '#' comments and blank lines. An optional "type = unmixed" line is
/// accepted; "type = mixed" is rejected. Throws ParseError with line and
/// column.
PairDescriptor parse_pair_descriptor(std::string_view text);

/// Constructs the group and certifies both vectors. Throws ParseError
/// pointing at the offending field.
UnmixedPair build_pair(const PairDescriptor& d);

/// Witness cache: blocks of a "row = k" line followed by a pair descriptor.
using WitnessCache = std::map<int, PairDescriptor>;

WitnessCache parse_witness_cache(std::string_view text);

struct RowReport;
std::string format_witness_cache(const std::vector<RowReport>& reports);

struct RowOptions {
  const WitnessCache* witnesses = nullptr;
  /// Replacement presentations for G(16) / G(32); a fingerprint mismatch
  /// turns the row into a skip.
  std::map<std::string, std::string> presentation_overrides;
};

struct RowReport {
  FamilyRow row;
  std::optional<std::string> skipped;
  std::string witness_source;  // "cache" or "search"
  std::vector<std::string> gv1;
  std::vector<std::string> gv2;
  std::size_t g1 = 0;
  std::size_t g2 = 0;
  std::int64_t chi = 0;
  std::size_t d = 0;
  AbelianInvariants h1;
  AbelianInvariants h1_expected;
  std::optional<ParityVerdict> parity;
  bool free_match = false;
  bool d_match = false;
  bool h1_match = false;
  bool parity_match = false;

  bool passed() const { return !skipped && free_match && d_match && h1_match && parity_match; }
};

/// Computed parity never contradicts the annotation, and the odd row is
/// computed Odd.
bool parity_consistent(ParityAnnotation annotation, Verdict computed);

/// Throws std::out_of_range unless 1 <= k <= 12.
RowReport reproduce_row(int k, const RowOptions& options = {});

struct StageResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct MainTheoremInputs {
  std::string gv1 = "(2,4)(3,5) (2,1,3,4,5) (1,2,3,4,5)";
  std::vector<std::size_t> sig1{2, 5, 5};
  std::string gv2 = "(1,2,3) (3,4,5) (4,3,2) (2,1,5)";
  std::vector<std::size_t> sig2{3, 3, 3, 3};
};

struct MainTheoremReport {
  std::vector<StageResult> stages;
  std::optional<ParityVerdict> verdict;
  bool passed = false;

  /// Name of the first failing stage.
  std::optional<std::string> failed_stage() const;
};

/// Runs the stages tuple-1, tuple-2, genus, freeness, invariants,
/// canonical-class, h1, obstruction-suite, verdict; halts at the first failure.
MainTheoremReport verify_main_theorem(const MainTheoremInputs& inputs = {});

}  // namespace fakequad
