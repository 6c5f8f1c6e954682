#pragma once

// The q-oscillator algebra A_q:
//   k a+ = -q a+ k,  k a- = -q^{-1} a- k,  a+ a- = 1 - k^2,  a- a+ = 1 - q^2 k^2,
// with Laurent-polynomial coefficients, and the weighted trace Tr(z^h X).

#include "mtasep/laurent.hpp"
#include "mtasep/osc0.hpp"

#include <compare>
#include <map>
#include <string>

namespace mtasep {

/// grade >= 0: (a+)^grade k^t;  grade < 0: k^t (a-)^{-grade}.
struct QOscMonomial {
  int grade = 0;
  int t = 0;

  static QOscMonomial creation(int s = 1) { return {s, 0}; }
  static QOscMonomial annihilation(int s = 1) { return {-s, 0}; }
  static QOscMonomial k_power(int t) { return {0, t}; }

  std::string str() const;
  friend auto operator<=>(const QOscMonomial&, const QOscMonomial&) = default;
};

enum class QGenerator { Create, Annihilate, K };

class QOscElem {
 public:
  QOscElem() = default;
  explicit QOscElem(const QOscMonomial& m, const QLaurent& c = QLaurent(1));

  static QOscElem one() { return QOscElem(QOscMonomial{}); }
  static QOscElem generator(QGenerator g);

  const std::map<QOscMonomial, QLaurent>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  QLaurent coefficient(const QOscMonomial& m) const;
  void add(const QOscMonomial& m, const QLaurent& c);

  QOscElem& operator+=(const QOscElem& y);
  QOscElem& operator-=(const QOscElem& y);
  friend QOscElem operator+(QOscElem x, const QOscElem& y) { return x += y; }
  friend QOscElem operator-(QOscElem x, const QOscElem& y) { return x -= y; }
  friend bool operator==(const QOscElem&, const QOscElem&) = default;

  /// x * g for a single generator.
  QOscElem times(QGenerator g) const;

  std::string str() const;

 private:
  std::map<QOscMonomial, QLaurent> terms_;
};

QOscElem qosc_mul(const QOscElem& x, const QOscElem& y);

/// Value at q = 0 projected to A_0 (k^t -> k for t >= 1). Throws
/// ConsistencyError if a coefficient carries a negative power of q.
OscElem specialize_q0(const QOscElem& x);

/// Sum_t c_t(q) / (1 - (-q)^t z) + polynomial part in (z, q).
struct QZRational {
  std::map<int, QLaurent> poles;
  Laurent<2> polynomial;  // exponents (z, q)

  QZRational& operator+=(const QZRational& y);
  friend bool operator==(const QZRational&, const QZRational&) = default;
  std::string str() const;
};

/// Tr(z^h x): only the k^t components survive, each giving 1 / (1 - (-q)^t z).
QZRational trace_zh(const QOscElem& x);

}  // namespace mtasep
