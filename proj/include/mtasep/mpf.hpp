#pragma once
// Matrix product form of the steady state: the corner transfer matrices X_i
// and X^_i of the A_0-valued five-vertex model, the trace formula
// P(sigma) = Tr(X_{sigma_1} ... X_{sigma_L}) and the hat relation.
//
// Corner diagram for n species: horizontal line r = 1..n (r = 1 on top) enters
// from the left, crosses the vertical legs of lines n, n-1, ..., r+1 and turns
// up. Vertex (r, c) sits where line r crosses the leg of line c > r. The
// n(n-1)/2 Fock copies are indexed row-major: top line first, each line left
// to right (c = n down to r+1).

#include "mtasep/bigint.hpp"
#include "mtasep/multiline.hpp"
#include "mtasep/osc0.hpp"
#include "mtasep/words.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mtasep {

using CtmTerm = std::vector<OscMonomial>;  // one monomial per Fock copy

struct CtmOperator {
  int n = 0;
  std::map<CtmTerm, BigInt> terms;

  std::size_t copies() const noexcept { return static_cast<std::size_t>(n * (n - 1) / 2); }
  bool is_zero() const noexcept { return terms.empty(); }
  void add(const CtmTerm& t, const BigInt& c);
  CtmOperator& operator+=(const CtmOperator& y);
  CtmOperator& operator-=(const CtmOperator& y);
  friend bool operator==(const CtmOperator&, const CtmOperator&) = default;
  /// One line per term: "coefficient * m_1 . m_2 . ... . m_K".
  std::string str() const;
};

CtmOperator operator*(const CtmOperator& x, const CtmOperator& y);
CtmOperator operator*(const BigInt& c, const CtmOperator& x);

/// Position of vertex (r, c) in the copy order (1 <= r < c <= n).
std::size_t copy_index(int n, int r, int c);

/// X_i: configuration sum with corner values 0^{n-i} 1^i (top to bottom).
CtmOperator build_X(int i, int n);
/// X^_i: the same sum weighted by the number of 1s leaving the top.
CtmOperator build_Xhat(int i, int n);

/// Trace of a product, copy by copy. A term with an off-diagonal factor in
/// some copy contributes 0; throws ConsistencyError if a term with a unit
/// copy survives otherwise (its trace would diverge).
BigInt ctm_trace(const CtmOperator& x);

/// Tr(X_{sigma_1} ... X_{sigma_L}). Requires n >= 2.
BigInt prob_trace(const Config& sigma);

/// The same trace evaluated on the truncated Fock space span{|0>..|cutoff>}
/// of every copy by propagating basis vectors; an independent route.
BigInt prob_trace_fock(const Config& sigma, int cutoff);

/// prob_trace over a whole sector (parallel over configurations).
SteadyVector mpf_steady(const Multiplicity& m);

/// X_a X^_b - X^_a X_b == [b > a] X_b X_a - [a > b] X_a X_b for all a, b.
struct HatReport {
  int n = 0;
  std::vector<std::vector<bool>> pass;  // pass[a][b]
  /// If some pair fails: constants c_i such that X^_i + c_i X_i satisfies
  /// every relation, when they exist.
  std::optional<std::vector<BigInt>> shift_repair;
  bool ok() const;
};

HatReport hat_check(int n);

}  // namespace mtasep
