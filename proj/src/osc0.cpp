#include "mtasep/osc0.hpp"

#include "mtasep/error.hpp"

#include <algorithm>

namespace mtasep {

std::string OscMonomial::str() const {
  if (is_unit()) return "1";
  std::string s;
  auto join = [&](const std::string& part) {
    if (!s.empty()) s += ' ';
    s += part;
  };
  if (plus) join("A+^" + std::to_string(plus));
  if (has_k) join("K");
  if (minus) join("A-^" + std::to_string(minus));
  return s;
}

OscElem::OscElem(const OscMonomial& m, BigInt coeff) {
  if (!m.has_k && m.plus && m.minus) throw InvalidInput("monomial (a+)^s (a-)^t is not in normal form");
  if (coeff != 0) terms_.emplace(m, std::move(coeff));
}

BigInt OscElem::coefficient(const OscMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void OscElem::add(const OscMonomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

OscElem& OscElem::operator+=(const OscElem& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

OscElem& OscElem::operator-=(const OscElem& other) {
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

std::string OscElem::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    BigInt mag = abs(c);
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (mag != 1) s += mag.str() + "*";
    s += m.str();
    first = false;
  }
  return s;
}

// Reduction table for X = (a+)^s [k] (a-)^t times Y = (a+)^u [k] (a-)^v.
// The inner factor (a-)^t (a+)^u collapses by a- a+ = 1 to (a+)^{u-t} if u >= t
// and to (a-)^{t-u} otherwise. Then
//   k (a+)^p = 0 and (a-)^p k = 0 for p >= 1, k k = k;
//   (a+)^x (a-)^y with c = min(x, y) equals
//     (a+)^{x-c} (a-)^{y-c} - sum_{j<c} (a+)^{x-c+j} k (a-)^{y-c+j},
// because (a+)^c (a-)^c projects onto occupation >= c, i.e. 1 - sum_{j<c} (a+)^j k (a-)^j.
std::vector<std::pair<OscMonomial, int>> osc_mul_monomials(const OscMonomial& x, const OscMonomial& y) {
  std::vector<std::pair<OscMonomial, int>> out;
  int mid_plus = 0, mid_minus = 0;
  if (y.plus >= x.minus)
    mid_plus = y.plus - x.minus;
  else
    mid_minus = x.minus - y.plus;

  if (x.has_k && y.has_k) {
    if (mid_plus == 0 && mid_minus == 0) out.push_back({OscMonomial::mid(x.plus, y.minus), 1});
    return out;
  }
  if (x.has_k) {
    if (mid_plus == 0) out.push_back({OscMonomial::mid(x.plus, mid_minus + y.minus), 1});
    return out;
  }
  if (y.has_k) {
    if (mid_minus == 0) out.push_back({OscMonomial::mid(x.plus + mid_plus, y.minus), 1});
    return out;
  }
  const int p = x.plus + mid_plus, m = mid_minus + y.minus;
  const int c = std::min(p, m);
  out.push_back({OscMonomial{p - c, false, m - c}, 1});
  for (int j = 0; j < c; ++j) out.push_back({OscMonomial::mid(p - c + j, m - c + j), -1});
  return out;
}

OscElem osc_mul(const OscElem& x, const OscElem& y) {
  OscElem out;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      BigInt c = cx * cy;
      for (const auto& [m, sign] : osc_mul_monomials(mx, my)) out.add(m, sign > 0 ? c : BigInt(-c));
    }
  return out;
}

int osc_trace(const OscMonomial& m) {
  if (m.is_unit()) throw DivergentTrace("trace of the unit element diverges");
  return m.has_k && m.plus == m.minus ? 1 : 0;
}

BigInt osc_trace(const OscElem& x) {
  BigInt t = 0;
  for (const auto& [m, c] : x.terms()) {
    if (m.is_unit()) throw DivergentTrace("divergent trace: element has unit coefficient " + c.str());
    if (m.has_k && m.plus == m.minus) t += c;
  }
  return t;
}

std::optional<int> fock_apply(const OscMonomial& mono, int m) {
  if (m < mono.minus) return std::nullopt;
  m -= mono.minus;
  if (mono.has_k && m != 0) return std::nullopt;
  return m + mono.plus;
}

BigInt IntMatrix::trace() const {
  BigInt t = 0;
  for (std::size_t r = 0; r < std::min(rows, cols); ++r) t += (*this)(r, r);
  return t;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw InvalidInput("matrix shape mismatch");
  IntMatrix out(x.rows, y.cols);
  for (std::size_t r = 0; r < x.rows; ++r)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const BigInt& xv = x(r, k);
      if (xv == 0) continue;
      for (std::size_t c = 0; c < y.cols; ++c) out(r, c) += xv * y(k, c);
    }
  return out;
}

IntMatrix fock_matrix(const OscElem& x, int cutoff) {
  if (cutoff < 0) throw InvalidInput("cutoff must be nonnegative");
  const auto dim = static_cast<std::size_t>(cutoff) + 1;
  IntMatrix out(dim, dim);
  for (const auto& [mono, c] : x.terms())
    for (int m = 0; m <= cutoff; ++m) {
      auto image = fock_apply(mono, m);
      if (image && *image <= cutoff) out(static_cast<std::size_t>(*image), static_cast<std::size_t>(m)) += c;
    }
  return out;
}

std::optional<OscMonomial> five_vertex_weight(int a, int b, int i, int j) {
  if (i == 0 && j == 0 && a == 0 && b == 0) return OscMonomial::unit();
  if (i == 1 && j == 1 && a == 1 && b == 1) return OscMonomial::unit();
  if (i == 1 && j == 0 && a == 0 && b == 1) return OscMonomial::creation();
  if (i == 0 && j == 1 && a == 1 && b == 0) return OscMonomial::annihilation();
  if (i == 0 && j == 1 && a == 0 && b == 1) return OscMonomial::k();
  return std::nullopt;
}

}  // namespace mtasep
