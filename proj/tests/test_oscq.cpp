#include "doctest.h"

#include "mtasep/error.hpp"
#include "mtasep/oscq.hpp"

#include <random>

using namespace mtasep;

namespace {

// Independent Fock representation: a+|m> = |m+1>, a-|m> = (1 - q^{2m})|m-1>,
// k|m> = (-q)^m |m>. Vectors are maps occupation -> coefficient.
using Vec = std::map<int, QLaurent>;

void accumulate(Vec& v, int m, const QLaurent& c) {
  if (c.is_zero()) return;
  v[m] += c;
  if (v[m].is_zero()) v.erase(m);
}

Vec apply_gen(QGenerator g, const Vec& v) {
  Vec out;
  for (const auto& [m, c] : v) {
    switch (g) {
      case QGenerator::Create: accumulate(out, m + 1, c); break;
      case QGenerator::Annihilate:
        if (m > 0) accumulate(out, m - 1, c * (QLaurent(1) - QLaurent::monomial({2 * m})));
        break;
      case QGenerator::K: accumulate(out, m, c * minus_q_power(m)); break;
    }
  }
  return out;
}

Vec apply_elem(const QOscElem& x, int m) {
  Vec out;
  for (const auto& [mono, c] : x.terms()) {
    Vec v{{m, c}};
    if (mono.grade < 0)
      for (int s = 0; s < -mono.grade; ++s) v = apply_gen(QGenerator::Annihilate, v);
    for (int t = 0; t < mono.t; ++t) v = apply_gen(QGenerator::K, v);
    for (int s = 0; s < mono.grade; ++s) v = apply_gen(QGenerator::Create, v);
    for (const auto& [o, d] : v) accumulate(out, o, d);
  }
  return out;
}

}  // namespace

TEST_CASE("q-oscillator relations") {
  auto ap = QOscElem::generator(QGenerator::Create);
  auto am = QOscElem::generator(QGenerator::Annihilate);
  auto k = QOscElem::generator(QGenerator::K);
  QLaurent q = QLaurent::monomial({1});
  auto k2 = qosc_mul(k, k);
  CHECK(qosc_mul(k, ap) == QOscElem(QOscMonomial{1, 1}, -q));
  CHECK(qosc_mul(ap, am) == QOscElem::one() - k2);
  CHECK(qosc_mul(am, ap) == QOscElem::one() - qosc_mul(QOscElem(QOscMonomial{}, q * q), k2));
  // k a- = -q^{-1} a- k
  auto lhs = qosc_mul(k, am);
  auto rhs = qosc_mul(qosc_mul(QOscElem(QOscMonomial{}, -QLaurent::monomial({-1})), am), k);
  CHECK(lhs == rhs);
}

TEST_CASE("random generator words agree with the Fock representation") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> gen(0, 2), len(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = len(rng);
    std::vector<QGenerator> word;
    for (int i = 0; i < n; ++i) word.push_back(static_cast<QGenerator>(gen(rng)));
    QOscElem prod = QOscElem::one();
    for (auto g : word) prod = prod.times(g);
    for (int m = 0; m <= 5; ++m) {
      Vec v{{m, QLaurent(1)}};
      for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply_gen(*it, v);
      CHECK(apply_elem(prod, m) == v);
    }
  }
}

TEST_CASE("qosc_mul is associative") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> g(-2, 2), t(0, 2), c(-2, 2);
  auto random_elem = [&] {
    QOscElem e;
    for (int i = 0; i < 2; ++i) e.add(QOscMonomial{g(rng), t(rng)}, QLaurent(c(rng)) * QLaurent::monomial({t(rng)}));
    return e;
  };
  for (int trial = 0; trial < 100; ++trial) {
    auto x = random_elem(), y = random_elem(), z = random_elem();
    CHECK(qosc_mul(qosc_mul(x, y), z) == qosc_mul(x, qosc_mul(y, z)));
  }
}

TEST_CASE("weighted trace") {
  auto t3 = trace_zh(QOscElem(QOscMonomial::k_power(3)));
  REQUIRE(t3.poles.size() == 1);
  CHECK(t3.poles.at(3) == QLaurent(1));
  CHECK(t3.polynomial.is_zero());
  CHECK(trace_zh(QOscElem(QOscMonomial::creation(2))).poles.empty());
  CHECK(trace_zh(QOscElem(QOscMonomial{-1, 2})).poles.empty());
}

TEST_CASE("q = 0 specialization") {
  auto ap = QOscElem::generator(QGenerator::Create);
  auto am = QOscElem::generator(QGenerator::Annihilate);
  auto k = QOscElem::generator(QGenerator::K);
  CHECK(specialize_q0(qosc_mul(k, k)) == OscElem(OscMonomial::k()));
  CHECK(specialize_q0(qosc_mul(am, ap)) == OscElem::one());
  CHECK(specialize_q0(qosc_mul(ap, am)) == OscElem::one() - OscElem(OscMonomial::k()));
  CHECK(specialize_q0(qosc_mul(k, ap)).is_zero());
  // a+ k a- = -q^{-1}(k - k^3) has no value at q = 0 in this basis
  CHECK_THROWS_AS(specialize_q0(qosc_mul(qosc_mul(ap, k), am)), ConsistencyError);
  CHECK_THROWS_AS(specialize_q0(QOscElem(QOscMonomial{}, QLaurent::monomial({-1}))), ConsistencyError);
}
