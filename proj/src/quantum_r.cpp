#include "mtasep/quantum_r.hpp"

#include "mtasep/error.hpp"

#include <algorithm>
#include <regex>

namespace mtasep {

std::string poly_str(const ZQPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    BigInt mag = abs(c);
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    std::string mono;
    if (e[1] != 0) mono += "q" + (e[1] == 1 ? std::string() : "^" + std::to_string(e[1]));
    if (e[0] != 0) {
      if (!mono.empty()) mono += "*";
      mono += "z" + (e[0] == 1 ? std::string() : "^" + std::to_string(e[0]));
    }
    if (mono.empty())
      s += mag.str();
    else
      s += (mag == 1 ? std::string() : mag.str() + "*") + mono;
    first = false;
  }
  return s;
}

ZQPoly parse_poly(const std::string& text) {
  ZQPoly out;
  if (text == "0") return out;
  static const std::regex term(R"(\s*([+-])?\s*(\d+)?\*?(q(?:\^(-?\d+))?)?\*?(z(?:\^(-?\d+))?)?\s*)");
  auto it = text.begin();
  while (it != text.end()) {
    std::smatch mt;
    if (!std::regex_search(it, text.end(), mt, term, std::regex_constants::match_continuous) || mt.length(0) == 0)
      throw InvalidInput("bad polynomial '" + text + "'");
    if (!mt[2].matched && !mt[3].matched && !mt[5].matched) throw InvalidInput("bad polynomial '" + text + "'");
    BigInt c = mt[2].matched ? BigInt(mt[2].str()) : BigInt(1);
    if (mt[1].matched && mt[1].str() == "-") c = -c;
    int qe = mt[3].matched ? (mt[4].matched ? std::stoi(mt[4].str()) : 1) : 0;
    int ze = mt[5].matched ? (mt[6].matched ? std::stoi(mt[6].str()) : 1) : 0;
    out.add({ze, qe}, c);
    it += mt.length(0);
  }
  return out;
}

ZQPoly RhoFactors::expand() const {
  ZQPoly out = ZQPoly::monomial({0, q_shift});
  for (int e : exponents) {
    ZQPoly factor(1);
    factor.add({1, e}, (e % 2 == 0) ? BigInt(-1) : BigInt(1));  // - (-q)^e z
    out *= factor;
  }
  return out;
}

RhoFactors rho_bar_factors(int l, int m, int length) {
  if (l < 1 || m < 1 || l >= length || m >= length) throw InvalidInput("rho: need 1 <= l, m < L");
  RhoFactors f;
  // (-1)^{l+m} q^{l+m-2i} = (-q)^{l+m-2i} since the exponent has the parity of l+m
  for (int i = std::max(l + m - length, 0); i <= std::min(l, m) - 1; ++i) f.exponents.push_back(l + m - 2 * i);
  return f;
}

RhoFactors rho_factors(int l, int m, int length) {
  RhoFactors f = rho_bar_factors(l, m, length);
  f.q_shift = -std::max(l - m, 0);
  f.exponents.insert(f.exponents.begin(), std::abs(l - m));
  return f;
}

std::optional<QOscElem> six_vertex_weight(int a, int b, int i, int j) {
  if (i == 0 && j == 0 && a == 0 && b == 0) return QOscElem::one();
  if (i == 1 && j == 1 && a == 1 && b == 1) return QOscElem::one();
  if (i == 1 && j == 0 && a == 0 && b == 1) return QOscElem::generator(QGenerator::Create);
  if (i == 0 && j == 1 && a == 1 && b == 0) return QOscElem::generator(QGenerator::Annihilate);
  if (i == 0 && j == 1 && a == 0 && b == 1) return QOscElem::generator(QGenerator::K);
  if (i == 1 && j == 0 && a == 1 && b == 0) return QOscElem(QOscMonomial::k_power(1), QLaurent::monomial({1}));
  return std::nullopt;
}

ZQPoly rmatrix_element(const Word& a, const Word& b, const Word& i, const Word& j) {
  const std::size_t L = i.size();
  if (j.size() != L || a.size() != L || b.size() != L) throw InvalidInput("rmatrix_element: word length mismatch");
  const int l = i.weight(), m = j.weight();
  if (a.weight() != l || b.weight() != m) return {};
  for (std::size_t k = 0; k < L; ++k)
    if (a[k] + b[k] != i[k] + j[k]) return {};

  QOscElem product = QOscElem::one();
  for (std::size_t k = 0; k < L; ++k) {
    auto w = six_vertex_weight(a[k], b[k], i[k], j[k]);
    if (!w) return {};
    product = qosc_mul(product, *w);
  }
  QZRational tr = trace_zh(product);
  if (!tr.polynomial.is_zero()) throw ConsistencyError("trace with polynomial part");

  // Each pole 1/(1 - (-q)^t z) cancels against the matching factor of rho(z).
  const RhoFactors rf = rho_factors(l, m, static_cast<int>(L));
  ZQPoly out;
  for (const auto& [t, c] : tr.poles) {
    auto hit = std::find(rf.exponents.begin(), rf.exponents.end(), t);
    if (hit == rf.exponents.end())
      throw ConsistencyError("rmatrix_element: pole (-q)^" + std::to_string(t) + " not cancelled by rho");
    RhoFactors rest = rf;
    rest.exponents.erase(rest.exponents.begin() + (hit - rf.exponents.begin()));
    ZQPoly cz;
    for (const auto& [e, v] : c.terms()) cz.add({0, e[0]}, v);
    out += cz * rest.expand();
  }
  if (out.min_exponent(1) < 0) throw ConsistencyError("rmatrix_element: negative power of q survives");
  return out;
}

RMatrixTable rmatrix_full(int l, int m, int length) {
  RMatrixTable table{l, m, length, {}};
  const auto L = static_cast<std::size_t>(length);
  for (const auto& i : enumerate_B(l, length))
    for (const auto& j : enumerate_B(m, length)) {
      // sites with i_k + j_k = 1 carry the single unit to either a or b
      std::vector<std::size_t> split;
      std::vector<std::uint8_t> base(L, 0);
      for (std::size_t k = 0; k < L; ++k) {
        if (i[k] + j[k] == 2) base[k] = 1;
        if (i[k] + j[k] == 1) split.push_back(k);
      }
      const int need = l - std::count(base.begin(), base.end(), 1);
      if (need < 0 || need > static_cast<int>(split.size())) continue;
      std::vector<std::uint8_t> pick(split.size(), 0);
      std::fill(pick.end() - need, pick.end(), 1);
      do {
        auto abits = base;
        std::vector<std::uint8_t> bbits(L);
        for (std::size_t s = 0; s < split.size(); ++s) abits[split[s]] = pick[s];
        for (std::size_t k = 0; k < L; ++k) bbits[k] = static_cast<std::uint8_t>(i[k] + j[k] - abits[k]);
        Word a(std::move(abits)), b(std::move(bbits));
        ZQPoly v = rmatrix_element(a, b, i, j);
        if (!v.is_zero()) table.entries.emplace(RIndex{a, b, i, j}, std::move(v));
      } while (std::next_permutation(pick.begin(), pick.end()));
    }
  return table;
}

std::map<std::pair<Word, Word>, RImage> specialize_combinatorial(const RMatrixTable& table) {
  std::map<std::pair<Word, Word>, RImage> out;
  for (const auto& [idx, poly] : table.entries) {
    const auto& [a, b, i, j] = idx;
    if (poly.min_exponent(1) < 0) throw ConsistencyError("negative q power in table");
    BigInt value = 0;
    for (const auto& [e, c] : poly.terms())
      if (e[1] == 0) value += c;
    if (value == 0) continue;
    if (value != 1) throw ConsistencyError("q=0, z=1 value is not 0 or 1 at " + a.str() + "," + b.str() + "," + i.str() + "," + j.str());
    if (!out.emplace(std::pair{i, j}, RImage{b, a}).second)
      throw ConsistencyError("q=0, z=1 table has two images for " + i.str() + " " + j.str());
  }
  for (const auto& i : enumerate_B(table.l, table.length))
    for (const auto& j : enumerate_B(table.m, table.length))
      if (!out.count({i, j})) throw ConsistencyError("q=0, z=1 table has no image for " + i.str() + " " + j.str());
  return out;
}

namespace {

using Poly3 = Laurent<3>;  // exponents (z, z', q)
using Triple = std::array<Word, 3>;
using Vec3 = std::map<Triple, Poly3>;

enum class Spectral { Z, ZPrime, ZZPrime };

struct IndexedTable {
  std::map<std::pair<Word, Word>, std::vector<std::tuple<Word, Word, ZQPoly>>> by_input;
};

IndexedTable index_table(const RMatrixTable& t) {
  IndexedTable out;
  for (const auto& [idx, poly] : t.entries) {
    const auto& [a, b, i, j] = idx;
    out.by_input[{i, j}].emplace_back(a, b, poly);
  }
  return out;
}

Poly3 substitute(const ZQPoly& p, Spectral arg) {
  Poly3 out;
  for (const auto& [e, c] : p.terms()) {
    switch (arg) {
      case Spectral::Z: out.add({e[0], 0, e[1]}, c); break;
      case Spectral::ZPrime: out.add({0, e[0], e[1]}, c); break;
      case Spectral::ZZPrime: out.add({e[0], e[0], e[1]}, c); break;
    }
  }
  return out;
}

// Applies R (x) 1 (slot 0) or 1 (x) R (slot 1) to a vector on three tensor factors.
Vec3 apply(const Vec3& v, const IndexedTable& t, Spectral arg, int slot) {
  Vec3 out;
  for (const auto& [basis, coeff] : v) {
    const Word& x = basis[static_cast<std::size_t>(slot)];
    const Word& y = basis[static_cast<std::size_t>(slot + 1)];
    auto it = t.by_input.find({x, y});
    if (it == t.by_input.end()) continue;
    for (const auto& [a, b, poly] : it->second) {
      Triple next = basis;
      next[static_cast<std::size_t>(slot)] = b;
      next[static_cast<std::size_t>(slot + 1)] = a;
      auto& slot_value = out[next];
      slot_value += coeff * substitute(poly, arg);
      if (slot_value.is_zero()) out.erase(next);
    }
  }
  return out;
}

}  // namespace

CheckReport spectral_ybe_check(int k, int l, int m, int length) {
  const auto Rkl = index_table(rmatrix_full(k, l, length));
  const auto Rkm = index_table(rmatrix_full(k, m, length));
  const auto Rlm = index_table(rmatrix_full(l, m, length));
  CheckReport report;
  for (const auto& x : enumerate_B(k, length))
    for (const auto& y : enumerate_B(l, length))
      for (const auto& w : enumerate_B(m, length)) {
        ++report.checked;
        Vec3 start{{Triple{x, y, w}, Poly3(1)}};
        // (R^{l,m}(z) (x) 1)(1 (x) R^{k,m}(zz'))(R^{k,l}(z') (x) 1)
        Vec3 lhs = apply(apply(apply(start, Rkl, Spectral::ZPrime, 0), Rkm, Spectral::ZZPrime, 1), Rlm, Spectral::Z, 0);
        // (1 (x) R^{k,l}(z'))(R^{k,m}(zz') (x) 1)(1 (x) R^{l,m}(z))
        Vec3 rhs = apply(apply(apply(start, Rlm, Spectral::Z, 1), Rkm, Spectral::ZZPrime, 0), Rkl, Spectral::ZPrime, 1);
        if (lhs != rhs && !report.counterexample)
          report.counterexample = "spectral YBE fails on " + x.str() + " " + y.str() + " " + w.str();
      }
  return report;
}

}  // namespace mtasep
