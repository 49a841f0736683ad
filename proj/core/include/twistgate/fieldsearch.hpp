#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twistgate/curve.hpp"
#include "twistgate/descent.hpp"
#include "twistgate/lseries.hpp"
#include "twistgate/rootnum.hpp"

namespace twistgate {

/// Conditions on (d_1, ..., d_r), checked in this order.
enum class AdmissibilityCondition { Squarefree, OneModFour, CoprimeToLevel, JacobiSymbol, Independence };

std::string_view to_string(AdmissibilityCondition c);

struct AdmissibilityResult {
  bool admissible = false;
  std::optional<AdmissibilityCondition> failed;
  std::size_t index = 0;  // offending entry (Independence: first entry of the dependent subset)
  std::string detail;
};

/// p must be 5 or 7; the level is 3p.
AdmissibilityResult is_admissible(int p, std::span<const Integer> ds);

/// Rank of the exponent vectors of the d_i over GF(2).
std::size_t square_class_rank(std::span<const Integer> ds);

/// (p, d_1 < ... < d_r) that passed is_admissible.
class AdmissibleTuple {
 public:
  /// Throws DomainError carrying the failed condition.
  AdmissibleTuple(int p, std::vector<Integer> ds);

  int p() const { return p_; }
  std::size_t r() const { return ds_.size(); }
  const std::vector<Integer>& ds() const { return ds_; }
  Integer level() const { return Integer{3 * p_}; }

  friend bool operator==(const AdmissibleTuple&, const AdmissibleTuple&) = default;

 private:
  int p_;
  std::vector<Integer> ds_;
};

/// Squarefree part of the product of the d_i on which s is -1.
Integer character_discriminant(const AdmissibleTuple& tuple, const Character& s);

/// All admissible d_1 < ... < d_r <= bound in lexicographic order.
std::vector<AdmissibleTuple> search(int p, std::size_t r, std::int64_t bound);

/// The level-3p modular curve: 15a1 for p = 5, 21a1 for p = 7.
WeierstrassModel level_curve(int p, const CurveTable& table = CurveTable::bundled());

enum class HypothesisStatus { Verified, RootNumberObstruction, InconclusiveLValue, NotAdmissible };

std::string_view to_string(HypothesisStatus s);

inline constexpr std::string_view kVerifiedWording =
    "modularity hypotheses verified; rank 0 of every twist is conditional on the analytic-rank implication";

struct CharacterResult {
  Character character;
  Integer discriminant;
  WeierstrassModel twist;
  RootNumber root_number;
  int formula_sign = 0;  // (d_S / 3p) w(X)
  LValueEstimate lvalue;
};

struct HypothesisReport {
  int p = 0;
  std::vector<Integer> ds;
  AdmissibilityResult admissibility;
  /// Implied by admissibility: d_i odd and 1 mod 4 (2 unramified), prime to 3p.
  bool unramified_at_6p = false;
  std::vector<CharacterResult> per_character;
  HypothesisStatus overall = HypothesisStatus::NotAdmissible;
};

struct HypothesisOptions {
  double margin_factor = 10.0;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Overrides level_curve(p), e.g. from an alternate curve table.
  std::optional<WeierstrassModel> curve;
};

HypothesisReport check_hypothesis(int p, std::span<const Integer> ds, const HypothesisOptions& options = {});

}  // namespace twistgate
