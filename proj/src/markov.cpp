#include "mtasep/markov.hpp"

#include "mtasep/error.hpp"

#include <algorithm>

namespace mtasep {

SectorVector SectorVector::from(const SteadyVector& v) {
  SectorVector out;
  out.sector = v.sector;
  for (const auto& [sigma, w] : v.weights)
    if (w != 0) out.entries.emplace(sigma, BigRational(w));
  return out;
}

std::vector<std::pair<Config, int>> h_local(const Config& sigma, std::size_t i) {
  const std::size_t L = sigma.size();
  if (i >= L) throw InvalidInput("h_local: site out of range");
  std::size_t j = (i + 1) % L;
  int a = sigma[i], b = sigma[j];
  if (a <= b) return {};
  return {{sigma.with_pair(i, b, j, a), 1}, {sigma, -1}};
}

SectorVector H_apply(const SectorVector& v) {
  SectorVector out;
  out.sector = v.sector;
  for (const auto& [sigma, c] : v.entries)
    for (std::size_t i = 0; i < sigma.size(); ++i)
      for (const auto& [target, sign] : h_local(sigma, i)) {
        auto& slot = out.entries[target];
        slot += sign * c;
      }
  for (auto it = out.entries.begin(); it != out.entries.end();)
    it = it->second == 0 ? out.entries.erase(it) : std::next(it);
  return out;
}

Config tau(const Config& sigma, std::size_t i) {
  const std::size_t L = sigma.size();
  if (i >= L) throw InvalidInput("tau: site out of range");
  std::size_t j = (i + 1) % L;
  int a = sigma[i], b = sigma[j];
  return sigma.with_pair(i, std::min(a, b), j, std::max(a, b));
}

SteadyVector kernel_steady(const Multiplicity& m, std::uint64_t budget) {
  if (!m.is_basic()) throw NonBasicSector("kernel_steady: sector " + m.str() + " is not basic");
  BigInt dim_big = multinomial(m);
  if (dim_big > budget)
    throw BudgetExceeded("kernel_steady", dim_big > BigInt(~0ULL) ? ~0ULL : dim_big.convert_to<unsigned long long>(),
                         budget);
  auto configs = enumerate_sector(m);
  const std::size_t D = configs.size();
  std::map<Config, std::size_t> index;
  for (std::size_t c = 0; c < D; ++c) index.emplace(configs[c], c);

  // M[target][source]
  std::vector<std::vector<BigInt>> M(D, std::vector<BigInt>(D));
  for (std::size_t c = 0; c < D; ++c)
    for (std::size_t i = 0; i < configs[c].size(); ++i)
      for (const auto& [target, sign] : h_local(configs[c], i)) M[index.at(target)][c] += sign;

  // Fraction-free Gauss-Jordan: after processing r pivots every entry is an
  // r x r minor, so the division by the previous pivot is exact.
  BigInt prev = 1;
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  std::vector<std::size_t> free_cols;
  BigInt num;
  for (std::size_t col = 0; col < D; ++col) {
    std::size_t p = row;
    while (p < D && M[p][col] == 0) ++p;
    if (p == D) {
      free_cols.push_back(col);
      continue;
    }
    std::swap(M[p], M[row]);
    const BigInt pivot = M[row][col];
    for (std::size_t r = 0; r < D; ++r) {
      if (r == row) continue;
      const BigInt factor = M[r][col];
      for (std::size_t c = 0; c < D; ++c) {
        if (c == col) continue;
        if (factor == 0) {
          if (M[r][c] == 0) continue;
          num = pivot * M[r][c];
        } else {
          num = pivot * M[r][c] - factor * M[row][c];
        }
        if (num % prev != 0) throw ConsistencyError("kernel_steady: inexact fraction-free division");
        M[r][c] = num / prev;
      }
      M[r][col] = 0;
    }
    prev = pivot;
    pivot_col.push_back(col);
    ++row;
  }
  if (free_cols.size() != 1)
    throw ConsistencyError("kernel_steady: null space of H has dimension " + std::to_string(free_cols.size()));

  // Pivot rows now read d x_{pivot} + M[r][f] x_f = 0 with the common diagonal d.
  const std::size_t f = free_cols[0];
  const BigInt d = prev;
  std::vector<BigInt> x(D);
  x[f] = d;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    if (M[r][pivot_col[r]] != d) throw ConsistencyError("kernel_steady: reduced diagonal is not uniform");
    x[pivot_col[r]] = -M[r][f];
  }
  BigInt g = 0;
  for (const auto& v : x) g = gcd(g, abs(v));
  if (g == 0) throw ConsistencyError("kernel_steady: zero null vector");
  bool negative = x[f] < 0;
  SteadyVector out;
  out.sector = m;
  for (std::size_t c = 0; c < D; ++c) {
    BigInt v = x[c] / g;
    if (negative) v = -v;
    if (v < 0) throw ConsistencyError("kernel_steady: null vector has mixed signs");
    out.weights.emplace(configs[c], v);
  }
  return out;
}

std::optional<BigRational> positive_scale(const SteadyVector& a, const SteadyVector& b) {
  if (a.weights.size() != b.weights.size()) return std::nullopt;
  std::optional<BigRational> scale;
  for (const auto& [sigma, wa] : a.weights) {
    auto it = b.weights.find(sigma);
    if (it == b.weights.end()) return std::nullopt;
    const BigInt& wb = it->second;
    if (wb == 0 || wa == 0) {
      if (wa != wb) return std::nullopt;
      continue;
    }
    BigRational ratio(wa, wb);
    if (!scale) scale = ratio;
    if (*scale != ratio) return std::nullopt;
  }
  if (!scale || *scale <= 0) return std::nullopt;
  return scale;
}

}  // namespace mtasep
