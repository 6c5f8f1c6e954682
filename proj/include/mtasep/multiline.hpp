#pragma once
// The multiline process on B^{l_1} (x) ... (x) B^{l_n}: the time evolutions
// T_k, the projection pi onto TASEP configurations, the steady state obtained
// by counting pi-preimages, and carrier dynamics with crystals B^r.
//
// Sites and row indices are 0-based in this API.

#include "mtasep/bigint.hpp"
#include "mtasep/combi_r.hpp"
#include "mtasep/words.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mtasep {

/// b_1 (x) ... (x) b_n, row weights strictly increasing.
struct MultilineState {
  std::vector<Word> rows;

  static MultilineState parse(const std::string& text);  // "000010,001010,001011"
  std::string str() const;
  friend auto operator<=>(const MultilineState&, const MultilineState&) = default;
};

/// Throws InvalidInput unless the row weights are exactly `levels`.
void validate_state(const MultilineState& s, const Levels& levels);

/// Enumeration budget: TASEP_BUDGET from the environment, else 10^7.
std::uint64_t default_budget();

/// Number of multiline states |B(m)| = prod_j C(L, l_j).
BigInt multiline_count(const Levels& levels);

/// Visits every state of B(m) in lexicographic order of (b_1, ..., b_n).
void for_each_state(const Levels& levels, const std::function<void(const MultilineState&)>& visit);

/// Pairwise exchange x (x) k -> k' (x) x' with k' = k + x_k - 1 and the
/// entries at k, k+1 (cyclic) replaced by their min and max.
struct TStepResult {
  std::size_t k;
  Word x;
};
TStepResult t_step(const Word& x, std::size_t k);

/// T_k: k enters from the right and passes b_n, ..., b_1.
MultilineState t_evolve(const MultilineState& s, std::size_t k);

/// b_j sent rightward through b_{j+1}, ..., b_n; the part of weight l_j that
/// comes out on the right.
Word pi_j(const MultilineState& s, std::size_t j);
std::vector<Word> pi_chain(const MultilineState& s);
Config pi(const MultilineState& s);

/// Steady state weights P(sigma) = #{s : pi(s) = sigma} on one sector.
struct SteadyVector {
  Multiplicity sector;
  std::map<Config, BigInt> weights;

  BigInt total() const;
  BigInt weight(const Config& sigma) const;
};

/// Throws NonBasicSector or BudgetExceeded.
SteadyVector fm_steady(const Multiplicity& m, std::uint64_t budget = default_budget());

/// Carrier u in B^r sent leftward through b_n, ..., b_1 by combinatorial R's:
/// b_1 (x) ... (x) b_n (x) u -> u' (x) b'_1 (x) ... (x) b'_n. Returns (u', s').
std::pair<Word, MultilineState> carrier_evolve(const MultilineState& s, const Word& u);
/// Inverse of carrier_evolve: (u', s') -> (u, s).
std::pair<Word, MultilineState> carrier_unevolve(const Word& u_out, const MultilineState& s_out);

/// Single-image property of pi o T_u o pi^{-1} and stationarity of the
/// induced chain on one sector, for carriers in B^r.
struct ConjectureReport {
  Multiplicity sector;
  int r = 0;
  std::uint64_t configs = 0;
  std::uint64_t states = 0;
  std::uint64_t carriers = 0;
  std::uint64_t failures = 0;           // (sigma, u) pairs with more than one image
  std::vector<std::string> examples;    // first few failures, human readable
  bool stationary = false;              // checked only when failures == 0

  bool ok() const noexcept { return failures == 0 && stationary; }
};

ConjectureReport conjecture_check(const Multiplicity& m, int r, std::uint64_t budget = default_budget());

}  // namespace mtasep
