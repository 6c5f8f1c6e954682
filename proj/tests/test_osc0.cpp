#include "doctest.h"

#include "mtasep/error.hpp"
#include "mtasep/osc0.hpp"

#include <random>

using namespace mtasep;

namespace {

// All normal-form monomials with exponents below `bound`.
std::vector<OscMonomial> basis(int bound) {
  std::vector<OscMonomial> out{OscMonomial::unit()};
  for (int r = 1; r < bound; ++r) {
    out.push_back(OscMonomial::creation(r));
    out.push_back(OscMonomial::annihilation(r));
  }
  for (int s = 0; s < bound; ++s)
    for (int t = 0; t < bound; ++t) out.push_back(OscMonomial::mid(s, t));
  return out;
}

// <out|x|in> computed from the normal form.
BigInt element(const OscElem& x, int out, int in) {
  BigInt sum = 0;
  for (const auto& [mono, c] : x.terms()) {
    auto img = fock_apply(mono, in);
    if (img && *img == out) sum += c;
  }
  return sum;
}

}  // namespace

TEST_CASE("defining relations") {
  auto ap = OscElem(OscMonomial::creation());
  auto am = OscElem(OscMonomial::annihilation());
  auto k = OscElem(OscMonomial::k());
  CHECK(osc_mul(k, k) == k);
  CHECK(osc_mul(k, ap).is_zero());
  CHECK(osc_mul(am, k).is_zero());
  CHECK(osc_mul(am, ap) == OscElem::one());
  CHECK(osc_mul(ap, am) == OscElem::one() - k);
}

TEST_CASE("products act on Fock space as composition") {
  // The normal form must reproduce the composed action of the factors on |m>.
  auto mono = basis(4);
  for (const auto& x : mono)
    for (const auto& y : mono) {
      OscElem xy = osc_mul(OscElem(x), OscElem(y));
      for (int m = 0; m <= 8; ++m) {
        std::optional<int> composed;
        if (auto mid = fock_apply(y, m)) composed = fock_apply(x, *mid);
        for (int out = 0; out <= 14; ++out)
          CHECK(element(xy, out, m) == ((composed && *composed == out) ? 1 : 0));
      }
    }
}

TEST_CASE("associativity on random elements") {
  std::mt19937_64 rng(7);
  auto mono = basis(3);
  std::uniform_int_distribution<std::size_t> pick(0, mono.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto random_elem = [&] {
    OscElem e;
    for (int t = 0; t < 3; ++t) e.add(mono[pick(rng)], coeff(rng));
    return e;
  };
  for (int trial = 0; trial < 300; ++trial) {
    auto x = random_elem(), y = random_elem(), z = random_elem();
    CHECK(osc_mul(osc_mul(x, y), z) == osc_mul(x, osc_mul(y, z)));
  }
}

TEST_CASE("trace") {
  CHECK(osc_trace(OscMonomial::k()) == 1);
  CHECK(osc_trace(OscMonomial::mid(2, 2)) == 1);
  CHECK(osc_trace(OscMonomial::mid(1, 2)) == 0);
  CHECK(osc_trace(OscMonomial::creation(2)) == 0);
  CHECK_THROWS_AS(osc_trace(OscMonomial::unit()), DivergentTrace);
  CHECK_THROWS_AS(osc_trace(OscElem::one() + OscElem(OscMonomial::k())), DivergentTrace);

  // Tr((1 + a+) k (1 + a-)) = 2
  OscElem left = OscElem::one() + OscElem(OscMonomial::creation());
  OscElem right = OscElem::one() + OscElem(OscMonomial::annihilation());
  auto prod = osc_mul(osc_mul(left, OscElem(OscMonomial::k())), right);
  CHECK(osc_trace(prod) == 2);

  // matches the truncated matrix trace for unit-free elements
  OscElem x;
  x.add(OscMonomial::mid(1, 1), 3);
  x.add(OscMonomial::mid(0, 2), 5);
  x.add(OscMonomial::k(), -2);
  x.add(OscMonomial::creation(1), 4);
  CHECK(fock_matrix(x, 6).trace() == osc_trace(x));
}

TEST_CASE("Fock matrices multiply where truncation does not interfere") {
  auto ap = OscElem(OscMonomial::creation());
  auto am = OscElem(OscMonomial::annihilation());
  const int N = 6;
  auto lhs = fock_matrix(osc_mul(am, ap), N);
  auto rhs = fock_matrix(am, N) * fock_matrix(ap, N);
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) CHECK(lhs(r, c) == rhs(r, c));
}

TEST_CASE("five-vertex weights") {
  CHECK(five_vertex_weight(0, 0, 0, 0) == OscMonomial::unit());
  CHECK(five_vertex_weight(1, 1, 1, 1) == OscMonomial::unit());
  CHECK(five_vertex_weight(0, 1, 1, 0) == OscMonomial::creation());
  CHECK(five_vertex_weight(1, 0, 0, 1) == OscMonomial::annihilation());
  CHECK(five_vertex_weight(0, 1, 0, 1) == OscMonomial::k());
  CHECK_FALSE(five_vertex_weight(1, 0, 1, 0).has_value());
  CHECK_FALSE(five_vertex_weight(1, 1, 0, 0).has_value());
}

TEST_CASE("monomial text") {
  CHECK(OscMonomial::unit().str() == "1");
  CHECK(OscMonomial::creation(2).str() == "A+^2");
  CHECK(OscMonomial::k().str() == "K");
  CHECK(OscMonomial::mid(1, 2).str() == "A+^1 K A-^2");
}
