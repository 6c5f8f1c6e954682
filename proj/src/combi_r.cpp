#include "mtasep/combi_r.hpp"

#include "mtasep/error.hpp"
#include "mtasep/osc0.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace mtasep {

namespace {

// l <= m: each dot of i (lower row) takes the rightmost free dot of j weakly
// left of it, cyclically; the m - l unmatched dots of j drop to the lower row.
// At l = m nothing drops and the map is the identity i (x) j -> i (x) j, as
// the q = 0, z = 1 value of the quantum R^{l,l} requires.
RImage match_lighter_below(const Word& i, const Word& j, MatchOrder order) {
  const std::size_t L = i.size();
  std::vector<std::uint8_t> taken(L, 0);
  auto match = [&](std::size_t p) {
    for (std::size_t step = 0; step < L; ++step) {
      std::size_t s = (p + L - step) % L;
      if (j[s] && !taken[s]) {
        taken[s] = 1;
        return;
      }
    }
    throw ConsistencyError("r_apply: no free dot in upper row");
  };
  if (order == MatchOrder::LeftToRight) {
    for (std::size_t p = 0; p < L; ++p)
      if (i[p]) match(p);
  } else {
    for (std::size_t p = L; p-- > 0;)
      if (i[p]) match(p);
  }
  std::vector<std::uint8_t> b = i.bits(), a = j.bits();
  for (std::size_t s = 0; s < L; ++s) {
    if (j[s] && !taken[s]) {
      if (b[s]) throw ConsistencyError("r_apply: dropped dot lands on an occupied site");
      b[s] = 1;
      a[s] = 0;
    }
  }
  return {Word(std::move(b)), Word(std::move(a))};
}

// l > m: each dot of j (upper row) takes the leftmost free dot of i weakly
// right of it, cyclically; the l - m unmatched dots of i rise to the upper row.
RImage match_lighter_above(const Word& i, const Word& j, MatchOrder order) {
  const std::size_t L = i.size();
  std::vector<std::uint8_t> taken(L, 0);
  auto match = [&](std::size_t p) {
    for (std::size_t step = 0; step < L; ++step) {
      std::size_t s = (p + step) % L;
      if (i[s] && !taken[s]) {
        taken[s] = 1;
        return;
      }
    }
    throw ConsistencyError("r_apply: no free dot in lower row");
  };
  if (order == MatchOrder::LeftToRight) {
    for (std::size_t p = 0; p < L; ++p)
      if (j[p]) match(p);
  } else {
    for (std::size_t p = L; p-- > 0;)
      if (j[p]) match(p);
  }
  std::vector<std::uint8_t> b = i.bits(), a = j.bits();
  for (std::size_t s = 0; s < L; ++s) {
    if (i[s] && !taken[s]) {
      if (a[s]) throw ConsistencyError("r_apply: raised dot lands on an occupied site");
      a[s] = 1;
      b[s] = 0;
    }
  }
  return {Word(std::move(b)), Word(std::move(a))};
}

}  // namespace

RImage r_apply(const Word& i, const Word& j, MatchOrder order) {
  if (i.size() != j.size()) throw InvalidInput("r_apply: word length mismatch");
  if (i.weight() <= j.weight()) return match_lighter_below(i, j, order);
  return match_lighter_above(i, j, order);
}

int r_element(const Word& a, const Word& b, const Word& i, const Word& j) {
  const std::size_t L = i.size();
  if (j.size() != L || a.size() != L || b.size() != L) throw InvalidInput("r_element: word length mismatch");
  if (a.weight() != i.weight() || b.weight() != j.weight())
    throw InvalidInput("r_element: (|a|,|b|) must equal (|i|,|j|)");
  if (i.weight() >= j.weight()) throw InvalidInput("r_element: requires l < m");
  for (std::size_t k = 0; k < L; ++k)
    if (a[k] + b[k] != i[k] + j[k]) return 0;
  OscElem product = OscElem::one();
  for (std::size_t k = 0; k < L; ++k) {
    auto factor = five_vertex_weight(a[k], b[k], i[k], j[k]);
    if (!factor) return 0;
    product = osc_mul(product, OscElem(*factor));
    if (product.is_zero()) return 0;
  }
  BigInt t = osc_trace(product);
  if (t != 0 && t != 1) throw ConsistencyError("r_element: trace is not 0 or 1");
  return t == 1 ? 1 : 0;
}

std::pair<std::string, std::string> ybe_sides(const Word& x, const Word& y, const Word& z) {
  // left: R12 then R23 then R12 (rightmost factor acts first)
  auto s1 = r_apply(x, y);           // y1 (x) x1 (x) z
  auto s2 = r_apply(s1.a, z);        // y1 (x) z2 (x) x2
  auto s3 = r_apply(s1.b, s2.b);     // z3 (x) y3 (x) x2
  std::string lhs = s3.b.str() + " " + s3.a.str() + " " + s2.a.str();
  // right: R23 then R12 then R23
  auto t1 = r_apply(y, z);           // x (x) z1 (x) y1
  auto t2 = r_apply(x, t1.b);        // z2 (x) x2 (x) y1
  auto t3 = r_apply(t2.a, t1.a);     // z2 (x) y3 (x) x3
  std::string rhs = t2.b.str() + " " + t3.b.str() + " " + t3.a.str();
  return {lhs, rhs};
}

CheckReport ybe_check(int k, int l, int m, int length) {
  CheckReport report;
  auto bk = enumerate_B(k, length), bl = enumerate_B(l, length), bm = enumerate_B(m, length);
  for (const auto& x : bk)
    for (const auto& y : bl)
      for (const auto& z : bm) {
        ++report.checked;
        auto [lhs, rhs] = ybe_sides(x, y, z);
        if (lhs != rhs && !report.counterexample)
          report.counterexample = x.str() + " " + y.str() + " " + z.str() + ": " + lhs + " != " + rhs;
      }
  return report;
}

namespace {

Word random_word(int l, int length, std::mt19937_64& rng) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(length), 0);
  std::fill_n(bits.begin(), l, 1);
  std::shuffle(bits.begin(), bits.end(), rng);
  return Word(std::move(bits));
}

}  // namespace

CheckReport ybe_check_random(int k, int l, int m, int length, std::uint64_t samples, std::uint64_t seed) {
  CheckReport report;
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    auto x = random_word(k, length, rng), y = random_word(l, length, rng), z = random_word(m, length, rng);
    ++report.checked;
    auto [lhs, rhs] = ybe_sides(x, y, z);
    if (lhs != rhs && !report.counterexample)
      report.counterexample = x.str() + " " + y.str() + " " + z.str() + ": " + lhs + " != " + rhs;
  }
  return report;
}

CheckReport r_inverse_check(int l, int m, int length) {
  CheckReport report;
  for (const auto& i : enumerate_B(l, length))
    for (const auto& j : enumerate_B(m, length)) {
      ++report.checked;
      auto fwd = r_apply(i, j);
      auto back = r_apply(fwd.b, fwd.a);
      if ((back.b != i || back.a != j) && !report.counterexample)
        report.counterexample = i.str() + " " + j.str() + " -> " + fwd.b.str() + " " + fwd.a.str() + " -> " +
                                back.b.str() + " " + back.a.str();
    }
  return report;
}

}  // namespace mtasep
