#pragma once

// Sparse multivariate Laurent polynomials with unbounded integer coefficients.

#include "mtasep/bigint.hpp"

#include <array>
#include <map>
#include <string>

namespace mtasep {

template <std::size_t N>
class Laurent {
 public:
  using Exponents = std::array<int, N>;

  Laurent() = default;
  Laurent(const BigInt& constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.emplace(Exponents{}, constant);
  }
  static Laurent monomial(const Exponents& e, const BigInt& c = 1) {
    Laurent out;
    out.add(e, c);
    return out;
  }

  const std::map<Exponents, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const Exponents& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BigInt coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Smallest exponent of variable v over all terms (0 for the zero polynomial).
  int min_exponent(std::size_t v) const {
    int lo = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first || e[v] < lo) lo = e[v];
      first = false;
    }
    return lo;
  }

  Laurent shifted(const Exponents& by) const {
    Laurent out;
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      for (std::size_t v = 0; v < N; ++v) f[v] += by[v];
      out.terms_.emplace(f, c);
    }
    return out;
  }

  Laurent& operator+=(const Laurent& y) {
    for (const auto& [e, c] : y.terms_) add(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& y) {
    for (const auto& [e, c] : y.terms_) add(e, -c);
    return *this;
  }
  Laurent& operator*=(const Laurent& y) { return *this = *this * y; }
  friend Laurent operator+(Laurent x, const Laurent& y) { return x += y; }
  friend Laurent operator-(Laurent x, const Laurent& y) { return x -= y; }
  friend Laurent operator-(const Laurent& x) { return Laurent() - x; }
  friend Laurent operator*(const Laurent& x, const Laurent& y) {
    Laurent out;
    for (const auto& [ex, cx] : x.terms_)
      for (const auto& [ey, cy] : y.terms_) {
        Exponents e;
        for (std::size_t v = 0; v < N; ++v) e[v] = ex[v] + ey[v];
        out.add(e, cx * cy);
      }
    return out;
  }
  friend bool operator==(const Laurent&, const Laurent&) = default;

  /// "c*x^a*y^b + ..." in ascending exponent order (first variable most significant).
  std::string str(const std::array<const char*, N>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      BigInt mag = abs(c);
      if (first)
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      std::string mono;
      for (std::size_t v = 0; v < N; ++v) {
        if (e[v] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[v];
        if (e[v] != 1) mono += "^" + std::to_string(e[v]);
      }
      if (mono.empty())
        s += mag.str();
      else if (mag == 1)
        s += mono;
      else
        s += mag.str() + "*" + mono;
      first = false;
    }
    return s;
  }

 private:
  std::map<Exponents, BigInt> terms_;
};

/// Laurent polynomial in q.
using QLaurent = Laurent<1>;

/// (-q)^e as a QLaurent, for any integer e.
inline QLaurent minus_q_power(int e) {
  return QLaurent::monomial({e}, (e % 2 == 0) ? BigInt(1) : BigInt(-1));
}

}  // namespace mtasep
