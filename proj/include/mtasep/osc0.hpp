#pragma once

// The q = 0 oscillator algebra A_0:
//   k^2 = k,  k a+ = 0,  a- k = 0,  a- a+ = 1,  a+ a- = 1 - k,
// held in normal form over the PBW basis 1, (a+)^r, (a-)^r, (a+)^s k (a-)^t.

#include "mtasep/bigint.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mtasep {

/// (a+)^plus [k] (a-)^minus; without k at most one exponent is nonzero.
struct OscMonomial {
  int plus = 0;
  bool has_k = false;
  int minus = 0;

  static OscMonomial unit() { return {}; }
  static OscMonomial creation(int r = 1) { return {r, false, 0}; }
  static OscMonomial annihilation(int r = 1) { return {0, false, r}; }
  static OscMonomial k() { return {0, true, 0}; }
  static OscMonomial mid(int s, int t) { return {s, true, t}; }

  bool is_unit() const noexcept { return !has_k && plus == 0 && minus == 0; }
  /// Net change of the Fock occupation number.
  int grade() const noexcept { return plus - minus; }
  std::string str() const;

  friend auto operator<=>(const OscMonomial&, const OscMonomial&) = default;
};

class OscElem {
 public:
  OscElem() = default;
  explicit OscElem(const OscMonomial& m, BigInt coeff = 1);

  static OscElem one() { return OscElem(OscMonomial::unit()); }

  const std::map<OscMonomial, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coefficient(const OscMonomial& m) const;
  void add(const OscMonomial& m, const BigInt& c);

  OscElem& operator+=(const OscElem& other);
  OscElem& operator-=(const OscElem& other);
  friend OscElem operator+(OscElem x, const OscElem& y) { return x += y; }
  friend OscElem operator-(OscElem x, const OscElem& y) { return x -= y; }
  friend bool operator==(const OscElem&, const OscElem&) = default;

  std::string str() const;

 private:
  std::map<OscMonomial, BigInt> terms_;
};

/// Product of two basis monomials as a signed combination (at most 1 + min exponent terms).
std::vector<std::pair<OscMonomial, int>> osc_mul_monomials(const OscMonomial& x, const OscMonomial& y);
OscElem osc_mul(const OscElem& x, const OscElem& y);

/// Tr(x) = sum_m <m|x|m>. Throws DivergentTrace when x has a unit component.
BigInt osc_trace(const OscElem& x);
/// Trace of one basis monomial: 1 for (a+)^s k (a-)^s, 0 otherwise; throws on the unit.
int osc_trace(const OscMonomial& m);

/// Action on |m>: the image occupation number, or nullopt for the zero vector.
std::optional<int> fock_apply(const OscMonomial& mono, int m);

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<BigInt> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  BigInt& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  BigInt trace() const;
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// Matrix of x on span{|0>,...,|cutoff>}, with a+|cutoff> truncated to 0.
IntMatrix fock_matrix(const OscElem& x, int cutoff);

/// Five-vertex weight L^{a,b}_{i,j}; nullopt for the four inadmissible index sets
/// and for the vertex (i,j,a,b) = (1,0,1,0) that vanishes at q = 0.
std::optional<OscMonomial> five_vertex_weight(int a, int b, int i, int j);

}  // namespace mtasep
