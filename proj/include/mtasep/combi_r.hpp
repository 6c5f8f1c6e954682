#pragma once

// Combinatorial R: B^l (x) B^m -> B^m (x) B^l, computed by the
// Nakayashiki-Yamada dot-matching rule on the two-row tableau.

#include "mtasep/bigint.hpp"
#include "mtasep/words.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace mtasep {

/// Image b (x) a of i (x) j; b has the weight of j, a the weight of i.
struct RImage {
  Word b;
  Word a;

  friend bool operator==(const RImage&, const RImage&) = default;
};

/// Order in which the dots of the lighter word are matched; the image does not depend on it.
enum class MatchOrder { LeftToRight, RightToLeft };

/// R^{l,m}(i (x) j) for |i| = l, |j| = m. Throws InvalidInput on length mismatch.
RImage r_apply(const Word& i, const Word& j, MatchOrder order = MatchOrder::LeftToRight);

/// R^{a,b}_{i,j} evaluated as the A_0 trace of the five-vertex product, l < m.
/// Returns 0 immediately when a + b != i + j.
int r_element(const Word& a, const Word& b, const Word& i, const Word& j);

struct CheckReport {
  std::uint64_t checked = 0;
  std::optional<std::string> counterexample;

  bool ok() const noexcept { return !counterexample.has_value(); }
};

/// (R (x) 1)(1 (x) R)(R (x) 1) == (1 (x) R)(R (x) 1)(1 (x) R) on all of B^k (x) B^l (x) B^m.
CheckReport ybe_check(int k, int l, int m, int length);
/// Same identity on `samples` seeded uniform random triples.
CheckReport ybe_check_random(int k, int l, int m, int length, std::uint64_t samples, std::uint64_t seed);
/// Both sides of the Yang-Baxter identity on one triple, as "x y z" strings.
std::pair<std::string, std::string> ybe_sides(const Word& x, const Word& y, const Word& z);
/// R^{m,l} R^{l,m} = id on all of B^l (x) B^m.
CheckReport r_inverse_check(int l, int m, int length);

}  // namespace mtasep
