#pragma once

// Quantum R matrix R^{l,m}(z) on V^l (x) V^m from the matrix product of
// q-oscillator valued six-vertex weights, with the normalization that sends
// e_{<=l} (x) e_{<=m} to rho_bar(z) e_{<=m} (x) e_{<=l}.

#include "mtasep/combi_r.hpp"
#include "mtasep/laurent.hpp"
#include "mtasep/oscq.hpp"
#include "mtasep/words.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace mtasep {

/// Polynomial in z and q; exponents are stored as (z, q).
using ZQPoly = Laurent<2>;

/// "c*q^a*z^b + ..." ordered ascending in z, then q.
std::string poly_str(const ZQPoly& p);
ZQPoly parse_poly(const std::string& text);

/// q^{q_shift} * prod_e (1 - (-q)^e z).
struct RhoFactors {
  int q_shift = 0;
  std::vector<int> exponents;

  ZQPoly expand() const;
};

RhoFactors rho_bar_factors(int l, int m, int length);
/// rho(z) = q^{-(l-m)_+} (1 - (-q)^{|l-m|} z) rho_bar(z).
RhoFactors rho_factors(int l, int m, int length);
inline ZQPoly rho_bar(int l, int m, int length) { return rho_bar_factors(l, m, length).expand(); }
inline ZQPoly rho(int l, int m, int length) { return rho_factors(l, m, length).expand(); }

/// Six-vertex weight script-L^{a,b}_{i,j} in A_q; nullopt off the six admissible vertices.
std::optional<QOscElem> six_vertex_weight(int a, int b, int i, int j);

/// R(z)^{a,b}_{i,j} = rho(z) Tr(z^h L^{a1,b1}_{i1,j1} ... L^{aL,bL}_{iL,jL}).
ZQPoly rmatrix_element(const Word& a, const Word& b, const Word& i, const Word& j);

using RIndex = std::tuple<Word, Word, Word, Word>;  // (a, b, i, j)

struct RMatrixTable {
  int l = 0, m = 0, length = 0;
  std::map<RIndex, ZQPoly> entries;  // nonzero elements only
};

RMatrixTable rmatrix_full(int l, int m, int length);

/// Value at q = 0, z = 1 as the map i (x) j -> b (x) a. Throws
/// ConsistencyError unless every (i, j) has exactly one entry equal to 1.
std::map<std::pair<Word, Word>, RImage> specialize_combinatorial(const RMatrixTable& table);

/// Spectral Yang-Baxter identity as a polynomial identity in q, z, z' on all basis vectors.
CheckReport spectral_ybe_check(int k, int l, int m, int length);

}  // namespace mtasep
