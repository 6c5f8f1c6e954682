#pragma once
// The n-TASEP generator H = sum_i h_{i,i+1} on one sector, the sorting maps
// tau_i, and the steady state as the exact null vector of H.
//
// Sites are 0-based; pair i is (i, i+1 mod L).

#include "mtasep/bigint.hpp"
#include "mtasep/multiline.hpp"
#include "mtasep/words.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace mtasep {

/// Exact vector on a sector.
struct SectorVector {
  Multiplicity sector;
  std::map<Config, BigRational> entries;  // zero entries omitted

  static SectorVector from(const SteadyVector& v);
  bool is_zero() const noexcept { return entries.empty(); }
};

/// h|a,b> = |b,a> - |a,b> for a > b on the pair (i, i+1); empty otherwise.
std::vector<std::pair<Config, int>> h_local(const Config& sigma, std::size_t i);

/// H v.
SectorVector H_apply(const SectorVector& v);
inline SectorVector H_apply(const SteadyVector& v) { return H_apply(SectorVector::from(v)); }

/// (sigma_i, sigma_{i+1}) -> (min, max).
Config tau(const Config& sigma, std::size_t i);

/// Default sector-dimension budget of kernel_steady.
inline constexpr std::uint64_t kKernelBudget = 5000;

/// Null vector of H on the sector by fraction-free Gauss-Jordan elimination,
/// scaled to coprime positive integers. Throws ConsistencyError if the
/// kernel is not one-dimensional, BudgetExceeded above `budget` configurations.
SteadyVector kernel_steady(const Multiplicity& m, std::uint64_t budget = kKernelBudget);

/// c > 0 with a = c * b on every configuration, if one exists.
std::optional<BigRational> positive_scale(const SteadyVector& a, const SteadyVector& b);

}  // namespace mtasep
