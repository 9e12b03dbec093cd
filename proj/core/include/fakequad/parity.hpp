#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fakequad/branching.hpp"
#include "fakequad/smith.hpp"

namespace fakequad {

/// K_S = a1 Phi_1 + a2 Phi_2 in Num(S), with F_j = d_j Phi_j.
struct NumClass {
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;
  std::uint64_t d1 = 0;
  std::uint64_t d2 = 0;

  friend bool operator==(const NumClass&, const NumClass&) = default;
};

/// a = d (-2 + sum (1 - 1/m_i)) with d = lcm(m_i). Throws std::domain_error
/// if a is not an integer.
std::int64_t ramification_coefficient(const Signature& sig);

/// Requires a free pair with chi = 1 (std::invalid_argument otherwise).
NumClass canonical_num_class(const UnmixedPair& pair);

/// True iff the torsion subgroup has odd order. Throws std::domain_error if
/// the free rank is nonzero.
bool torsion_gate(const AbelianInvariants& h1);

enum class EvidenceKind { machine_verified, cited_assumption };

const char* to_string(EvidenceKind k);

struct Evidence {
  std::string id;
  std::string anchor;
  EvidenceKind kind = EvidenceKind::machine_verified;
  bool passed = false;
  std::string detail;
};

/// A machine check of the obstruction suite failed; check() is 1..8.
class ObstructionFailure : public std::runtime_error {
public:
  ObstructionFailure(int check, const std::string& anchor, const std::string& what);
  int check() const { return check_; }
  const std::string& anchor() const { return anchor_; }

private:
  int check_;
  std::string anchor_;
};

/// Substitutions used by negative controls.
struct ObstructionOptions {
  /// Degree of the A5 irreducible used as chi_V in check 3 (default: the
  /// permutation character minus the trivial one).
  std::optional<std::int64_t> chi_v_degree;
  /// Group used as the central extension in checks 4-6.
  std::string extension = "SL(2,5)";
};

/// Eight machine checks on A5 and SL(2,5), in order, followed by the cited
/// geometric steps. Throws ObstructionFailure at the first failing check.
std::vector<Evidence> theta_obstruction_suite(const ObstructionOptions& options = {});

/// Ids of the cited-assumption records, in order.
const std::vector<std::string>& cited_steps();

enum class Verdict { even, odd, undetermined };

const char* to_string(Verdict v);

struct ParityVerdict {
  Verdict verdict = Verdict::undetermined;
  NumClass coefficients;
  AbelianInvariants h1;
  bool torsion_odd = false;
  std::vector<Evidence> evidence;
  /// Published annotation, reported but never used as computed fact.
  std::optional<std::string> literature_note;
};

/// Group A5 with signatures {[2,5,5], [3,3,3,3]} on either side.
bool is_main_family(const UnmixedPair& pair);

/// Even if both coefficients are even; Odd for the main family when the
/// torsion gate and the obstruction suite pass; Undetermined otherwise.
ParityVerdict parity_verdict(const UnmixedPair& pair, const AbelianInvariants& h1,
                             std::optional<std::string> literature_note = std::nullopt);

}  // namespace fakequad
