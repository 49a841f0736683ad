#include "twistgate/fieldsearch.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <thread>

#include "twistgate/errors.hpp"

namespace twistgate {
namespace {

void require_level_prime(int p) {
  if (p != 5 && p != 7) throw DomainError("p must be 5 or 7, got " + std::to_string(p));
}

bool coprime(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g == 1;
}

// Per-entry conditions; nullopt when d passes all of them.
std::optional<std::pair<AdmissibilityCondition, std::string>> entry_failure(const Integer& d, const Integer& level,
                                                                            AdmissibilityCondition stage) {
  switch (stage) {
    case AdmissibilityCondition::Squarefree:
      if (d <= 0 || !is_squarefree(d)) return {{stage, d.get_str() + " is not a squarefree positive integer"}};
      break;
    case AdmissibilityCondition::OneModFour:
      if (mpz_fdiv_ui(d.get_mpz_t(), 4) != 1) return {{stage, d.get_str() + " is not 1 mod 4"}};
      break;
    case AdmissibilityCondition::CoprimeToLevel:
      if (!coprime(d, level)) return {{stage, d.get_str() + " shares a factor with " + level.get_str()}};
      break;
    case AdmissibilityCondition::JacobiSymbol:
      if (jacobi(d, level) != 1)
        return {{stage, "(" + d.get_str() + "/" + level.get_str() + ") = " + std::to_string(jacobi(d, level))}};
      break;
    case AdmissibilityCondition::Independence:
      break;
  }
  return std::nullopt;
}

constexpr AdmissibilityCondition kEntryStages[] = {
    AdmissibilityCondition::Squarefree, AdmissibilityCondition::OneModFour, AdmissibilityCondition::CoprimeToLevel,
    AdmissibilityCondition::JacobiSymbol};

bool passes_entry_conditions(const Integer& d, const Integer& level) {
  for (auto stage : kEntryStages)
    if (entry_failure(d, level, stage)) return false;
  return true;
}

}  // namespace

std::string_view to_string(AdmissibilityCondition c) {
  switch (c) {
    case AdmissibilityCondition::Squarefree: return "squarefree";
    case AdmissibilityCondition::OneModFour: return "1 mod 4";
    case AdmissibilityCondition::CoprimeToLevel: return "coprime to 3p";
    case AdmissibilityCondition::JacobiSymbol: return "Jacobi symbol (d/3p) = 1";
    case AdmissibilityCondition::Independence: return "independent modulo squares";
  }
  return "?";
}

std::string_view to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::Verified: return "Verified*";
    case HypothesisStatus::RootNumberObstruction: return "RootNumberObstruction";
    case HypothesisStatus::InconclusiveLValue: return "InconclusiveLValue";
    case HypothesisStatus::NotAdmissible: return "NotAdmissible";
  }
  return "?";
}

std::size_t square_class_rank(std::span<const Integer> ds) {
  // Rows are the d_i; columns are the primes occurring to an odd power.
  std::map<Integer, std::size_t> column;
  std::vector<std::vector<bool>> rows;
  for (const auto& d : ds) {
    std::vector<std::size_t> odd_primes;
    for (const auto& [q, e] : factor(abs(d)).factors)
      if (e % 2 == 1) odd_primes.push_back(column.emplace(q, column.size()).first->second);
    std::vector<bool> row(column.size(), false);
    for (auto c : odd_primes) row[c] = true;
    rows.push_back(std::move(row));
  }
  for (auto& row : rows) row.resize(column.size(), false);

  std::size_t rank = 0;
  for (std::size_t col = 0; col < column.size() && rank < rows.size(); ++col) {
    auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                              [col](const auto& row) { return row[col]; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || !rows[i][col]) continue;
      for (std::size_t c = 0; c < column.size(); ++c) rows[i][c] = rows[i][c] != rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

AdmissibilityResult is_admissible(int p, std::span<const Integer> ds) {
  require_level_prime(p);
  const Integer level{3 * p};
  if (ds.empty()) return {false, AdmissibilityCondition::Independence, 0, "empty tuple"};

  for (auto stage : kEntryStages)
    for (std::size_t i = 0; i < ds.size(); ++i)
      if (auto failure = entry_failure(ds[i], level, stage)) return {false, failure->first, i, failure->second};

  if (square_class_rank(ds) != ds.size()) {
    // Report the smallest index involved in a dependent subset.
    for (std::size_t i = 0; i < ds.size(); ++i) {
      std::vector<Integer> rest;
      for (std::size_t j = 0; j < ds.size(); ++j)
        if (j != i) rest.push_back(ds[j]);
      if (square_class_rank(rest) == rest.size())
        return {false, AdmissibilityCondition::Independence, i,
                "some subset product involving entry " + std::to_string(i) + " is a perfect square"};
    }
    return {false, AdmissibilityCondition::Independence, 0, "some subset product is a perfect square"};
  }
  return {true, std::nullopt, 0, ""};
}

AdmissibleTuple::AdmissibleTuple(int p, std::vector<Integer> ds) : p_(p), ds_(std::move(ds)) {
  const AdmissibilityResult r = is_admissible(p_, ds_);
  if (!r.admissible)
    throw DomainError("tuple is not admissible (" + std::string(to_string(*r.failed)) + "): " + r.detail);
  std::sort(ds_.begin(), ds_.end());
}

Integer character_discriminant(const AdmissibleTuple& tuple, const Character& s) {
  if (s.rank() != tuple.r())
    throw DomainError("character has " + std::to_string(s.rank()) + " signs for a tuple of length " +
                      std::to_string(tuple.r()));
  Integer product = 1;
  for (std::size_t i = 0; i < tuple.r(); ++i)
    if (s.signs[i] == -1) product *= tuple.ds()[i];
  return squarefree_part(product);
}

std::vector<AdmissibleTuple> search(int p, std::size_t r, std::int64_t bound) {
  require_level_prime(p);
  if (r == 0) throw DomainError("search needs r >= 1");
  if (bound > 10'000) throw DomainError("search bound must be <= 10^4");
  const Integer level{3 * p};

  std::vector<Integer> candidates;
  for (std::int64_t d = 1; d <= bound; d += 4)
    if (passes_entry_conditions(Integer{static_cast<long>(d)}, level)) candidates.emplace_back(static_cast<long>(d));

  std::vector<AdmissibleTuple> out;
  if (candidates.size() < r) return out;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  std::vector<Integer> pick(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) pick[i] = candidates[idx[i]];
    if (square_class_rank(pick) == r) out.emplace_back(p, pick);
    // next combination in lexicographic order
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == candidates.size() - r + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

WeierstrassModel level_curve(int p, const CurveTable& table) {
  require_level_prime(p);
  return table.at(p == 5 ? "15a1" : "21a1");
}

HypothesisReport check_hypothesis(int p, std::span<const Integer> ds, const HypothesisOptions& options) {
  require_level_prime(p);
  HypothesisReport report;
  report.p = p;
  report.ds.assign(ds.begin(), ds.end());
  report.admissibility = is_admissible(p, ds);
  if (!report.admissibility.admissible) return report;
  report.unramified_at_6p = true;

  const AdmissibleTuple tuple{p, report.ds};
  report.ds = tuple.ds();
  const WeierstrassModel X = options.curve ? *options.curve : level_curve(p);
  const auto characters = all_characters(tuple.r());

  LValueOptions lopts;
  lopts.margin_factor = options.margin_factor;

  auto evaluate = [&](const Character& s) -> CharacterResult {
    const Integer dS = character_discriminant(tuple, s);
    try {
      WeierstrassModel twist = dS == 1 ? X : quadratic_twist(X, dS);
      RootNumber w = global_root_number(twist);
      const int formula = twist_root_number_formula(X, dS);
      LValueOptions these = lopts;
      these.root_number = w.value();
      LValueEstimate l = l_value_with_retry(twist, 0, these);
      return CharacterResult{s, dS, std::move(twist), std::move(w), formula, std::move(l)};
    } catch (const Error& e) {
      throw DomainError("character " + s.to_string() + " (d = " + dS.get_str() + "): " + e.what());
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(characters.size()));
  std::vector<std::optional<CharacterResult>> slots(characters.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < characters.size(); ++i) slots[i] = evaluate(characters[i]);
  } else {
    std::vector<std::future<void>> workers;
    for (unsigned t = 0; t < threads; ++t)
      workers.push_back(std::async(std::launch::async, [&, t] {
        for (std::size_t i = t; i < characters.size(); i += threads) slots[i] = evaluate(characters[i]);
      }));
    for (auto& w : workers) w.get();
  }

  bool obstruction = false;
  bool inconclusive = false;
  for (auto& slot : slots) {
    CharacterResult& r = *slot;
    if (r.root_number.value() != r.formula_sign)
      throw std::logic_error("root number " + std::to_string(r.root_number.value()) + " disagrees with the twist formula for d = " +
                             r.discriminant.get_str());
    if (r.root_number.value() != 1) obstruction = true;
    if (r.lvalue.verdict != LVerdict::NonzeroEvidence) inconclusive = true;
    report.per_character.push_back(std::move(r));
  }
  report.overall = obstruction    ? HypothesisStatus::RootNumberObstruction
                   : inconclusive ? HypothesisStatus::InconclusiveLValue
                                  : HypothesisStatus::Verified;
  return report;
}

}  // namespace twistgate
